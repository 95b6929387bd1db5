import json

import numpy as np

from gemlp.report.base_report_writer import BaseReportWriter


def _to_builtin(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f'Object of type {type(value).__name__} is not JSON serializable')


class JsonReport(BaseReportWriter):
    """Write Json report"""

    def write(self, data: dict) -> None:
        """
        Write report data to file.

        :param data: report data; numpy arrays and scalars are converted
        """
        self._prepare_directory()
        with open(self.filename, 'w', encoding='UTF-8') as file:
            json.dump(data, file, indent=4, separators=(',', ':'), default=_to_builtin)
