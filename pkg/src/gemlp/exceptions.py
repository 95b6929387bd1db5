from __future__ import annotations


class GemlpException(Exception):
    """General gemlp exception."""


class GemlpConfigurationException(GemlpException):
    """Raised when architecture, hyperparameters or command options are invalid."""


class GemlpDatasetException(GemlpException):
    """Raised when training data violates dataset invariants."""


class GemlpShapeException(GemlpException):
    """Raised when arrays passed between layers or modules have inconsistent shapes."""


class GemlpDataFileException(GemlpException):
    """Raised when a dataset or weights CSV file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message)
        self.line = line


class GemlpModelFileException(GemlpException):
    """Raised when a model file cannot be read or does not match the schema."""


class GemlpNumericalException(GemlpException):
    """Raised when a non-finite value appears during back propagation."""

    def __init__(self, message: str, layer: int) -> None:
        super().__init__(message)
        self.layer = layer


class GemlpTrainingDivergedException(GemlpException):
    """Raised when the cost becomes non-finite during training."""

    def __init__(self, message: str, epoch: int) -> None:
        super().__init__(message)
        self.epoch = epoch


class GemlpMetricsException(GemlpException):
    """Raised when accuracy metrics are undefined for the given data."""


class GemlpOptimizationException(GemlpException):
    """Raised when surrogate-based optimization cannot start."""
