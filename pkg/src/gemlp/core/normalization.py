"""
Centering and scaling of training data.

Inputs and outputs are shifted by their mean and divided by their
(population) standard deviation. Partials are rescaled by the chain rule:
``dy'_k/dx'_j = dy_k/dx_j * sigma_x[j] / sigma_y[k]``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from gemlp.constants import SIGMA_FLOOR
from gemlp.core.dataset import Dataset, check_finite
from gemlp.exceptions import GemlpShapeException

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalizationStats:
    """Per-row mean and standard deviation of inputs and outputs, stored as column vectors."""
    mu_x: np.ndarray
    sigma_x: np.ndarray
    mu_y: np.ndarray
    sigma_y: np.ndarray

    @property
    def n_x(self) -> int:
        return self.mu_x.shape[0]

    @property
    def n_y(self) -> int:
        return self.mu_y.shape[0]

    @classmethod
    def identity(cls, n_x: int, n_y: int) -> NormalizationStats:
        """Return stats which leave data unchanged."""
        return cls(
            mu_x=np.zeros((n_x, 1)),
            sigma_x=np.ones((n_x, 1)),
            mu_y=np.zeros((n_y, 1)),
            sigma_y=np.ones((n_y, 1)),
        )

    @classmethod
    def from_lists(cls, mu_x: list, sigma_x: list, mu_y: list, sigma_y: list) -> NormalizationStats:
        return cls(
            mu_x=np.asarray(mu_x, dtype=float).reshape(-1, 1),
            sigma_x=np.asarray(sigma_x, dtype=float).reshape(-1, 1),
            mu_y=np.asarray(mu_y, dtype=float).reshape(-1, 1),
            sigma_y=np.asarray(sigma_y, dtype=float).reshape(-1, 1),
        )

    def normalize_x(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.shape[0] != self.n_x:
            raise GemlpShapeException(f'Expected {self.n_x} input rows, got {X.shape[0]}')
        return (X - self.mu_x) / self.sigma_x

    def jacobian_scale(self) -> np.ndarray:
        """Return ``sigma_x[j] / sigma_y[k]`` as a ``(n_y, n_x, 1)`` array."""
        return self.sigma_x.reshape(1, -1, 1) / self.sigma_y.reshape(-1, 1, 1)


def compute_normalization(data: Dataset) -> NormalizationStats:
    """
    Compute normalization statistics of a dataset.

    Standard deviations use the population (1/m) convention and are clamped
    from below by ``SIGMA_FLOOR`` so constant rows stay well defined.

    :param data: raw training data
    :return: normalization statistics
    """
    check_finite(data.X, 'X')
    check_finite(data.Y, 'Y')
    mu_x = np.mean(data.X, axis=1, keepdims=True)
    mu_y = np.mean(data.Y, axis=1, keepdims=True)
    sigma_x = np.maximum(np.std(data.X, axis=1, keepdims=True), SIGMA_FLOOR)
    sigma_y = np.maximum(np.std(data.Y, axis=1, keepdims=True), SIGMA_FLOOR)
    return NormalizationStats(mu_x=mu_x, sigma_x=sigma_x, mu_y=mu_y, sigma_y=sigma_y)


def normalize_dataset(data: Dataset, stats: NormalizationStats) -> Dataset:
    """
    Return normalized copy of the dataset; beta and gamma pass through unchanged.

    :param data: raw training data
    :param stats: normalization statistics
    :return: normalized dataset
    """
    if (data.n_x, data.n_y) != (stats.n_x, stats.n_y):
        msg = f'Dataset dims (n_x={data.n_x}, n_y={data.n_y}) do not match stats (n_x={stats.n_x}, n_y={stats.n_y})'
        logger.error(msg)
        raise GemlpShapeException(msg)
    X = (data.X - stats.mu_x) / stats.sigma_x
    Y = (data.Y - stats.mu_y) / stats.sigma_y
    J = None if data.J is None else data.J * stats.jacobian_scale()
    return data.replace(X=X, Y=Y, J=J)


def denormalize_prediction(
    y_hat: np.ndarray,
    j_hat: np.ndarray | None,
    stats: NormalizationStats,
) -> tuple[np.ndarray, np.ndarray | None]:
    """
    Map normalized predictions back to raw units.

    :param y_hat: normalized outputs ``(n_y, m)``
    :param j_hat: normalized Jacobian ``(n_y, n_x, m)`` or None
    :param stats: normalization statistics
    :return: raw outputs and raw Jacobian
    """
    y_hat = np.asarray(y_hat, dtype=float)
    if y_hat.shape[0] != stats.n_y:
        raise GemlpShapeException(f'Expected {stats.n_y} output rows, got {y_hat.shape[0]}')
    y_raw = y_hat * stats.sigma_y + stats.mu_y
    if j_hat is None:
        return y_raw, None
    j_hat = np.asarray(j_hat, dtype=float)
    if j_hat.shape[:2] != (stats.n_y, stats.n_x):
        raise GemlpShapeException(f'Expected Jacobian of shape ({stats.n_y}, {stats.n_x}, m), got {j_hat.shape}')
    return y_raw, j_hat / stats.jacobian_scale()
