"""Design-of-experiments sampling inside a box."""
from __future__ import annotations

import logging

import numpy as np

from gemlp.exceptions import GemlpConfigurationException

logger = logging.getLogger(__name__)


def check_bounds(bounds) -> np.ndarray:
    """Return bounds as ``(n_x, 2)`` array; raise when some ``lo >= hi``."""
    bounds = np.atleast_2d(np.asarray(bounds, dtype=float))
    if bounds.ndim != 2 or bounds.shape[1] != 2:
        raise GemlpConfigurationException(f'Bounds must be [lo, hi] pairs, got shape {bounds.shape}')
    if not np.all(np.isfinite(bounds)) or np.any(bounds[:, 0] >= bounds[:, 1]):
        msg = f'Degenerate bounds: {bounds.tolist()}'
        logger.error(msg)
        raise GemlpConfigurationException(msg)
    return bounds


def lhs_sample(n: int, bounds, seed: int = 0) -> np.ndarray:
    """
    Latin hypercube sample.

    Each dimension is cut into ``n`` strata of equal width; every stratum
    holds exactly one point, placed uniformly at random inside it.

    :param n: number of points
    :param bounds: ``[[lo, hi], ...]`` per dimension
    :param seed: seed of the random generator
    :return: points ``(n_x, n)``
    """
    bounds = check_bounds(bounds)
    if n < 1:
        raise GemlpConfigurationException(f'Number of samples must be positive, got {n}')
    rng = np.random.default_rng(seed)
    unit = np.empty((bounds.shape[0], n))
    for dim in range(bounds.shape[0]):
        unit[dim] = (rng.permutation(n) + rng.random(n)) / n
    lo, hi = bounds[:, :1], bounds[:, 1:]
    return np.clip(lo + unit * (hi - lo), lo, hi)


def grid_sample(points_per_dim: int | list[int], bounds) -> np.ndarray:
    """
    Full-factorial grid including the box corners.

    :param points_per_dim: number of levels, single value or one per dimension
    :param bounds: ``[[lo, hi], ...]`` per dimension
    :return: points ``(n_x, prod(levels))``; the first coordinate varies slowest
    """
    bounds = check_bounds(bounds)
    levels = np.broadcast_to(np.asarray(points_per_dim, dtype=int), (bounds.shape[0],))
    if np.any(levels < 1):
        raise GemlpConfigurationException(f'Grid levels must be positive, got {levels.tolist()}')
    axes = [
        np.linspace(lo, hi, count) if count > 1 else np.array([(lo + hi) / 2.0])
        for (lo, hi), count in zip(bounds, levels)
    ]
    mesh = np.meshgrid(*axes, indexing='ij')
    return np.stack([axis.ravel() for axis in mesh])
