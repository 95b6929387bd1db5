from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from gemlp.benchmarks.sampling import check_bounds
from gemlp.exceptions import GemlpConfigurationException

logger = logging.getLogger(__name__)

Objective = Callable[[np.ndarray], tuple[float, np.ndarray]]


class TerminationReason(str, enum.Enum):
    GTOL = 'gtol'
    XTOL = 'xtol'
    MAX_ITER = 'max_iter'
    LINE_SEARCH = 'line_search'


@dataclass
class OptProblem:
    """Minimize ``objective`` (point -> value, gradient) inside a box."""
    objective: Objective
    bounds: np.ndarray
    x0: np.ndarray

    def __post_init__(self):
        self.bounds = check_bounds(self.bounds)
        self.x0 = np.atleast_1d(np.asarray(self.x0, dtype=float))
        if self.x0.shape != (self.bounds.shape[0],):
            raise GemlpConfigurationException(
                f'Start point has {self.x0.size} coordinates, bounds have {self.bounds.shape[0]}'
            )
        if np.any(self.x0 < self.lower) or np.any(self.x0 > self.upper):
            msg = f'Start point {self.x0.tolist()} lies outside bounds {self.bounds.tolist()}'
            logger.error(msg)
            raise GemlpConfigurationException(msg)

    @property
    def lower(self) -> np.ndarray:
        return self.bounds[:, 0]

    @property
    def upper(self) -> np.ndarray:
        return self.bounds[:, 1]

    def project(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.lower, self.upper)


@dataclass
class OptTrace:
    """History of accepted iterates, starting with the start point."""
    iterates: list[np.ndarray] = field(default_factory=list)
    values: list[float] = field(default_factory=list)
    converged: bool = False
    termination_reason: TerminationReason = TerminationReason.MAX_ITER
    num_evaluations: int = 0

    @property
    def x(self) -> np.ndarray:
        """Final point."""
        return self.iterates[-1]

    @property
    def value(self) -> float:
        return self.values[-1]

    @property
    def num_iterations(self) -> int:
        return len(self.iterates) - 1

    def distance_to(self, point) -> float:
        return float(np.linalg.norm(self.x - np.asarray(point, dtype=float)))

    def rows(self) -> list[dict]:
        """Return one row per iterate for trace exports."""
        return [
            dict(iteration=index, **{f'x{j + 1}': float(coordinate) for j, coordinate in enumerate(x)}, value=value)
            for index, (x, value) in enumerate(zip(self.iterates, self.values))
        ]
