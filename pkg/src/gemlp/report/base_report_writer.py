from __future__ import annotations

import abc
import os
from pathlib import Path

from gemlp.helper import normalize_filename


class BaseReportWriter(abc.ABC):
    """Writer of one result artifact in the output directory."""

    def __init__(self, filename: str | Path) -> None:
        self.filename: str = normalize_filename(str(filename))

    def __repr__(self):
        return f'{self.__class__.__name__}(filename={self.filename!r})'

    def _prepare_directory(self) -> None:
        os.makedirs(os.path.dirname(self.filename), exist_ok=True)

    @abc.abstractmethod
    def write(self, data) -> None:
        """Save artifact."""

    def summary(self) -> str:
        return f'generated report file: {self.filename}'
