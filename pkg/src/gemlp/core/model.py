from __future__ import annotations

from dataclasses import dataclass

from gemlp.core.normalization import NormalizationStats
from gemlp.core.parameters import Architecture, Parameters
from gemlp.exceptions import GemlpShapeException


@dataclass(frozen=True)
class Model:
    """Trained surrogate: architecture, learned parameters and normalization statistics."""
    architecture: Architecture
    parameters: Parameters
    norm: NormalizationStats

    def __post_init__(self):
        self.parameters.check_architecture(self.architecture)
        if (self.norm.n_x, self.norm.n_y) != (self.architecture.n_x, self.architecture.n_y):
            raise GemlpShapeException(
                f'Normalization stats for (n_x={self.norm.n_x}, n_y={self.norm.n_y}) '
                f'do not match architecture {self.architecture}'
            )
        for array in (*self.parameters.weights, *self.parameters.biases):
            array.flags.writeable = False

    @property
    def n_x(self) -> int:
        return self.architecture.n_x

    @property
    def n_y(self) -> int:
        return self.architecture.n_y
