"""
Training data container.

Arrays follow the column-per-example layout: ``X`` is ``(n_x, m)``, ``Y`` is
``(n_y, m)`` and the Jacobian ``J`` is ``(n_y, n_x, m)`` with
``J[k, j, t] = dy_k/dx_j`` at example ``t``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from gemlp.exceptions import GemlpDatasetException

logger = logging.getLogger(__name__)


def _first_non_finite(array: np.ndarray) -> tuple[int, ...] | None:
    bad = np.argwhere(~np.isfinite(array))
    if bad.size == 0:
        return None
    return tuple(int(i) for i in bad[0])


def check_finite(array: np.ndarray, name: str) -> None:
    """Raise if ``array`` holds NaN/Inf, naming the first offending row and column."""
    if (index := _first_non_finite(array)) is not None:
        if len(index) == 2:
            location = f'row {index[0]}, column {index[1]}'
        else:
            location = f'index {index}'
        msg = f'Non-finite value in {name} at {location}'
        logger.error(msg)
        raise GemlpDatasetException(msg)


@dataclass
class Dataset:
    """Inputs, outputs, optional Jacobian and the per-entry loss weights."""
    X: np.ndarray
    Y: np.ndarray
    J: np.ndarray | None = None
    beta: np.ndarray | float = 1.0
    gamma: np.ndarray | float | None = None  # default: 1 with Jacobian, 0 without
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        self.X = np.atleast_2d(np.asarray(self.X, dtype=float))
        self.Y = np.atleast_2d(np.asarray(self.Y, dtype=float))
        if self.J is not None:
            self.J = np.asarray(self.J, dtype=float)
        if self.gamma is None:
            self.gamma = 1.0 if self.J is not None else 0.0
        try:
            self.beta = np.broadcast_to(np.asarray(self.beta, dtype=float), self.Y.shape)
            self.gamma = np.broadcast_to(np.asarray(self.gamma, dtype=float), self.jacobian_shape)
        except ValueError as e:
            msg = f'Loss weights are not broadcastable to the data shapes: {e}'
            logger.error(msg)
            raise GemlpDatasetException(msg) from e
        if self.validate:
            self.check()

    @property
    def n_x(self) -> int:
        return self.X.shape[0]

    @property
    def n_y(self) -> int:
        return self.Y.shape[0]

    @property
    def m(self) -> int:
        return self.X.shape[1]

    @property
    def jacobian_shape(self) -> tuple[int, int, int]:
        return self.n_y, self.n_x, self.m

    @property
    def has_jacobian(self) -> bool:
        return self.J is not None

    @property
    def jacobian(self) -> np.ndarray:
        """Jacobian tensor, zeros when the dataset carries values only."""
        if self.J is None:
            return np.zeros(self.jacobian_shape)
        return self.J

    def check(self) -> None:
        """Verify dataset invariants."""
        if self.X.ndim != 2 or self.Y.ndim != 2:
            raise GemlpDatasetException('X and Y must be 2-D arrays (features x examples)')
        if self.m < 1 or self.n_x < 1 or self.n_y < 1:
            raise GemlpDatasetException(
                f'Dataset needs at least one example, input and output, got X{self.X.shape}, Y{self.Y.shape}'
            )
        if self.Y.shape[1] != self.m:
            msg = f'X has {self.m} examples but Y has {self.Y.shape[1]}'
            logger.error(msg)
            raise GemlpDatasetException(msg)
        if self.J is not None and self.J.shape != self.jacobian_shape:
            msg = f'Jacobian shape {self.J.shape} does not match expected {self.jacobian_shape}'
            logger.error(msg)
            raise GemlpDatasetException(msg)
        check_finite(self.X, 'X')
        check_finite(self.Y, 'Y')
        if self.J is not None:
            check_finite(self.J, 'J')
        for name, weights in (('beta', self.beta), ('gamma', self.gamma)):
            if not np.all(np.isfinite(weights)) or np.any(weights < 0):
                msg = f'{name} weights must be finite and non-negative'
                logger.error(msg)
                raise GemlpDatasetException(msg)

    def replace(self, **changes) -> Dataset:
        """Return a copy with the given fields replaced."""
        values = dict(X=self.X, Y=self.Y, J=self.J, beta=self.beta, gamma=self.gamma, validate=False)
        values.update(changes)
        return Dataset(**values)

    def with_gamma_mask(self, mask: np.ndarray) -> Dataset:
        """
        Return a copy whose gamma is multiplied by ``mask``.

        A mask of zeros and ones switches gradient enhancement off for the
        partials that are not available.

        :param mask: array broadcastable to ``(n_y, n_x, m)``
        """
        return self.replace(gamma=self.gamma * np.asarray(mask, dtype=float))

    def subset(self, columns: np.ndarray | slice) -> Dataset:
        """Return the examples selected by ``columns``."""
        return Dataset(
            X=self.X[:, columns],
            Y=self.Y[:, columns],
            J=None if self.J is None else self.J[..., columns],
            beta=self.beta[:, columns],
            gamma=self.gamma[..., columns],
            validate=False,
        )
