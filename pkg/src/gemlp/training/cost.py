"""
Jacobian-augmented least-squares loss and regularized cost.

For example ``t``::

    L = 1/2 sum_s beta_s (a_s - y_s)^2 + 1/2 sum_s sum_j gamma_sj (a'_sj - y'_sj)^2

and the cost is ``mean_t L + lambda / (2 m) * sum W^2``.
"""
from __future__ import annotations

import logging

import numpy as np

from gemlp.core.dataset import Dataset
from gemlp.core.parameters import Parameters
from gemlp.exceptions import GemlpDatasetException, GemlpShapeException
from gemlp.propagation.forward import ForwardCache

logger = logging.getLogger(__name__)


def check_cache(cache: ForwardCache, data: Dataset) -> None:
    if cache.y_hat.shape != data.Y.shape:
        msg = f'Prediction shape {cache.y_hat.shape} does not match targets {data.Y.shape}'
        logger.error(msg)
        raise GemlpShapeException(msg)
    if np.any(data.gamma != 0):
        if not data.has_jacobian:
            msg = 'Dataset without Jacobian requires gamma = 0 for every partial'
            logger.error(msg)
            raise GemlpDatasetException(msg)
        if not cache.has_partials:
            raise GemlpShapeException('Nonzero gamma requires a forward pass with partials')


def value_residual(cache: ForwardCache, data: Dataset) -> np.ndarray:
    return cache.y_hat - data.Y


def partial_residual(cache: ForwardCache, data: Dataset) -> np.ndarray:
    """Residual of the predicted Jacobian; zero wherever gamma is zero."""
    if not cache.has_partials or not data.has_jacobian:
        return np.zeros(data.jacobian_shape)
    return np.where(data.gamma > 0, cache.j_hat - data.jacobian, 0.0)


def loss(cache: ForwardCache, data: Dataset) -> float:
    """
    Return the mean over examples of the Jacobian-augmented loss (no regularization).

    :param cache: forward cache computed from ``data.X``
    :param data: normalized dataset
    """
    check_cache(cache, data)
    value_term = 0.5 * np.sum(data.beta * value_residual(cache, data) ** 2)
    partial_term = 0.5 * np.sum(data.gamma * partial_residual(cache, data) ** 2)
    return float((value_term + partial_term) / data.m)


def regularization(params: Parameters, lambd: float, m: int) -> float:
    if lambd == 0:
        return 0.0
    return float(lambd / (2.0 * m) * sum(np.sum(W * W) for W in params.weights))


def cost(params: Parameters, cache: ForwardCache, data: Dataset, lambd: float = 0.0) -> float:
    """
    Return loss plus L2 regularization of the weights.

    :param params: network parameters used for ``cache``
    :param cache: forward cache computed from ``data.X``
    :param data: normalized dataset
    :param lambd: regularization weight
    """
    return loss(cache, data) + regularization(params, lambd, data.m)
