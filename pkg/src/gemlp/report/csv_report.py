"""
Result tables in CSV format.
"""
from __future__ import annotations

import csv
import logging

from gemlp.report.base_report_writer import BaseReportWriter

logger = logging.getLogger(__name__)


class CsvReport(BaseReportWriter):
    """Write list of rows as CSV file; the header is the union of all row keys."""

    def __init__(self, filename: str, delimiter: str = ',', quotechar: str = '"'):
        """
        :param filename: output file name
        :param delimiter: CSV delimiter (default: ,)
        :param quotechar: CSV quote char (default: ")
        """
        super().__init__(filename)
        self.delimiter = delimiter
        self.quotechar = quotechar

    def write(self, data: list[dict]) -> None:
        """
        :param data: report rows
        """
        if not data:
            logger.warning('No data to write to %s', self.filename)
            return

        fieldnames: list[str] = []
        for row in data:
            fieldnames.extend(key for key in row if key not in fieldnames)
        self._prepare_directory()
        with open(self.filename, 'w', encoding='UTF-8', newline='') as fd:
            writer = csv.DictWriter(
                fd,
                fieldnames=fieldnames,
                delimiter=self.delimiter,
                quotechar=self.quotechar,
                quoting=csv.QUOTE_MINIMAL,
            )
            writer.writeheader()
            writer.writerows(data)
