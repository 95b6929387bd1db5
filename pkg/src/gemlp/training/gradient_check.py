"""Central finite-difference verification of back propagation."""
from __future__ import annotations

import logging

import numpy as np

from gemlp.core.dataset import Dataset
from gemlp.core.parameters import Parameters
from gemlp.exceptions import GemlpConfigurationException
from gemlp.propagation.forward import forward_with_partials
from gemlp.training.backprop import backward
from gemlp.training.cost import cost

logger = logging.getLogger(__name__)


def numerical_gradient(params: Parameters, data: Dataset, lambd: float = 0.0, h: float = 1e-6) -> np.ndarray:
    """Central differences of the cost over the flattened parameter vector."""
    if not h > 0:
        raise GemlpConfigurationException(f'Finite-difference step must be positive, got {h}')
    theta = params.to_vector()
    gradient = np.empty_like(theta)
    for i in range(theta.size):
        shifted = []
        for step in (h, -h):
            vector = theta.copy()
            vector[i] += step
            perturbed = params.from_vector(vector)
            shifted.append(cost(perturbed, forward_with_partials(perturbed, data.X), data, lambd))
        gradient[i] = (shifted[0] - shifted[1]) / (2.0 * h)
    return gradient


def scaled_error(analytic: np.ndarray, numerical: np.ndarray, floor: float = 1.0) -> np.ndarray:
    """
    Entry-wise ``|a - n| / max(|a|, |n|, floor)``.

    Relative for entries larger than ``floor`` in magnitude, absolute below it.
    """
    if not floor > 0:
        raise GemlpConfigurationException(f'Error floor must be positive, got {floor}')
    analytic = np.asarray(analytic, dtype=float)
    numerical = np.asarray(numerical, dtype=float)
    scale = np.maximum(np.maximum(np.abs(analytic), np.abs(numerical)), floor)
    return np.abs(analytic - numerical) / scale


def gradient_check(
    params: Parameters, data: Dataset, lambd: float = 0.0, h: float = 1e-6, floor: float = 1.0
) -> float:
    """
    Return the worst discrepancy between back propagation and central differences.

    :param params: parameters at which gradients are compared
    :param data: normalized dataset
    :param lambd: regularization weight
    :param h: finite-difference step
    :param floor: gradient magnitude below which the error is absolute instead of relative, see :func:`scaled_error`
    """
    numerical = numerical_gradient(params, data, lambd, h)
    analytic = backward(params, forward_with_partials(params, data.X), data, lambd).to_vector()
    max_error = float(np.max(scaled_error(analytic, numerical, floor)))
    logger.debug(
        'Gradient check over %d parameters: max scaled error %.3e (floor %g)', analytic.size, max_error, floor
    )
    return max_error
