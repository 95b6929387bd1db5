"""
Back propagation of the Jacobian-augmented cost.

Seeds at the output layer::

    dL/dA  = beta * (A - Y)
    dL/dA' = gamma * (A' - Y')

Each layer turns them into derivatives w.r.t. ``Z`` and ``Z'_j``::

    dL/dZ    = dL/dA * g'(Z) + sum_j dL/dA'_j * g''(Z) * Z'_j
    dL/dZ'_j = dL/dA'_j * g'(Z)

from which the parameter gradients follow, and hands off to the previous
layer through ``dL/dA_prev = W^T dL/dZ`` and ``dL/dA'_prev_j = W^T dL/dZ'_j``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from gemlp.core.dataset import Dataset
from gemlp.core.parameters import Parameters
from gemlp.exceptions import GemlpNumericalException
from gemlp.propagation.activation import ActivationFactory
from gemlp.propagation.forward import ForwardCache
from gemlp.training.cost import check_cache, partial_residual, value_residual

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Gradients:
    """Cost derivatives w.r.t. weights and biases, shaped like ``Parameters``."""
    dW: tuple[np.ndarray, ...]
    db: tuple[np.ndarray, ...]

    def to_vector(self) -> np.ndarray:
        chunks = []
        for dW, db in zip(self.dW, self.db):
            chunks.extend([dW.ravel(), db.ravel()])
        return np.concatenate(chunks)


def _check_finite(array: np.ndarray, name: str, layer: int) -> None:
    if not np.all(np.isfinite(array)):
        msg = f'Non-finite {name} during back propagation at layer {layer}'
        logger.error(msg)
        raise GemlpNumericalException(msg, layer=layer)


def backward(params: Parameters, cache: ForwardCache, data: Dataset, lambd: float = 0.0) -> Gradients:
    """
    Compute cost gradients w.r.t. all parameters.

    :param params: network parameters used for ``cache``
    :param cache: forward cache of ``data.X``; partials are required when gamma is nonzero
    :param data: normalized dataset
    :param lambd: regularization weight
    :return: gradients
    """
    check_cache(cache, data)
    m = data.m
    n_x = data.n_x
    with_partials = cache.has_partials

    dA = data.beta * value_residual(cache, data)
    dAprime = data.gamma * partial_residual(cache, data) if with_partials else None

    dW_list: list[np.ndarray] = [np.empty(0)] * len(params)
    db_list: list[np.ndarray] = [np.empty(0)] * len(params)
    for index in reversed(range(len(params))):
        current = index + 1  # position in cache; 0 is the input layer
        layer = index + 2
        W = params.weights[index]
        _, g_prime, g_double_prime = ActivationFactory.get_activation(cache.activations[index]).evaluate(
            cache.Z[current]
        )

        dZ = dA * g_prime
        dZprime = []
        if with_partials:
            Zprime = cache.Zprime[current]
            for j in range(n_x):
                dZ = dZ + dAprime[:, j, :] * g_double_prime * Zprime[:, j, :]
                dZprime.append(dAprime[:, j, :] * g_prime)

        dW = dZ @ cache.A[current - 1].T
        for j, dZprime_j in enumerate(dZprime):
            dW = dW + dZprime_j @ cache.Aprime[current - 1][:, j, :].T

        dW_list[index] = dW / m + (lambd / m) * W
        db_list[index] = np.sum(dZ, axis=1, keepdims=True) / m
        _check_finite(dW_list[index], 'weight gradient', layer)
        _check_finite(db_list[index], 'bias gradient', layer)

        if index > 0:
            dA = W.T @ dZ
            if with_partials:
                dAprime = np.stack([W.T @ dZprime_j for dZprime_j in dZprime], axis=1)
    return Gradients(dW=tuple(dW_list), db=tuple(db_list))
