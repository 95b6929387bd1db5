"""
Finite-difference partials used to manufacture inexact training Jacobians.

Escalating the step ``h`` increases truncation error, which is how noisy
partials are produced.
"""
from __future__ import annotations

import logging
from typing import Callable, Union

import numpy as np

from gemlp.benchmarks.test_functions import TestFunction
from gemlp.exceptions import GemlpConfigurationException, GemlpMetricsException

logger = logging.getLogger(__name__)

ValueFunction = Callable[[np.ndarray], np.ndarray]
SCHEMES: tuple[str, ...] = ('central', 'forward')


def _values(f: Union[TestFunction, ValueFunction], X: np.ndarray) -> np.ndarray:
    if isinstance(f, TestFunction):
        return f.values(X)
    return np.atleast_2d(np.asarray(f(X), dtype=float))


def finite_difference_partials(
    f: Union[TestFunction, ValueFunction],
    points: np.ndarray,
    h: float,
    scheme: str = 'central',
) -> np.ndarray:
    """
    Approximate the Jacobian of ``f`` at the columns of ``points``.

    :param f: test function, or callable mapping ``(n_x, m)`` points to ``(n_y, m)`` values
    :param points: points ``(n_x, m)``
    :param h: step size
    :param scheme: ``central`` or ``forward``
    :return: Jacobian ``(n_y, n_x, m)``
    """
    if not h > 0:
        raise GemlpConfigurationException(f'Finite-difference step must be positive, got {h}')
    if scheme not in SCHEMES:
        raise GemlpConfigurationException(f'Finite-difference scheme must be one of {SCHEMES}, got {scheme!r}')
    points = np.atleast_2d(np.asarray(points, dtype=float))
    n_x, m = points.shape
    base = _values(f, points) if scheme == 'forward' else None
    columns = []
    for j in range(n_x):
        step = np.zeros((n_x, 1))
        step[j] = h
        if scheme == 'central':
            columns.append((_values(f, points + step) - _values(f, points - step)) / (2.0 * h))
        else:
            columns.append((_values(f, points + step) - base) / h)
    return np.stack(columns, axis=1)


def mean_fd_error_percent(J_fd: np.ndarray, J_true: np.ndarray) -> float:
    """Return ``100 * mean|J_fd - J_true| / mean|J_true|``."""
    scale = np.mean(np.abs(J_true))
    if scale == 0:
        raise GemlpMetricsException('Relative error is undefined for an all-zero reference Jacobian')
    return float(100.0 * np.mean(np.abs(np.asarray(J_fd) - J_true)) / scale)
