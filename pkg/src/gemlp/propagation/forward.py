"""
Forward propagation of activations and of their partials w.r.t. network inputs.

For each layer after the input layer::

    Z = W A_prev + b            A = g(Z)
    Z'_j = W A'_prev_j          A'_j = g'(Z) * Z'_j

The partials carry no bias term. ``A'`` of the input layer is the identity
``dx_i/dx_j`` replicated over all examples.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from gemlp.core.parameters import Parameters
from gemlp.exceptions import GemlpShapeException
from gemlp.propagation.activation import ActivationFactory

logger = logging.getLogger(__name__)


@dataclass
class ForwardCache:
    """
    Per-layer arrays kept for back propagation; index 0 is the input layer.

    ``A[l]`` and ``Z[l]`` are ``(n^[l], m)``, ``Aprime[l]`` and ``Zprime[l]``
    are ``(n^[l], n_x, m)``. ``Z[0]`` holds the input itself.
    """
    activations: list[str]
    A: list[np.ndarray] = field(default_factory=list)
    Z: list[np.ndarray] = field(default_factory=list)
    Aprime: list[np.ndarray] = field(default_factory=list)
    Zprime: list[np.ndarray] = field(default_factory=list)

    @property
    def has_partials(self) -> bool:
        return bool(self.Aprime)

    @property
    def y_hat(self) -> np.ndarray:
        """Normalized prediction."""
        return self.A[-1]

    @property
    def j_hat(self) -> np.ndarray:
        """Normalized predicted Jacobian."""
        return self.Aprime[-1]

    @property
    def m(self) -> int:
        return self.A[0].shape[1]


def default_activations(num_layers: int) -> list[str]:
    return ['tanh'] * (num_layers - 2) + ['linear']


def _check_input(params: Parameters, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] != params.layer_sizes[0]:
        msg = f'Expected input of shape ({params.layer_sizes[0]}, m), got {X.shape}'
        logger.error(msg)
        raise GemlpShapeException(msg)
    return X


def _resolve_activations(params: Parameters, activations: Sequence[str] | None) -> list[str]:
    if activations is None:
        return default_activations(len(params) + 1)
    if len(activations) != len(params):
        raise GemlpShapeException(f'Expected {len(params)} activation kinds, got {len(activations)}')
    return list(activations)


def forward(params: Parameters, X: np.ndarray, activations: Sequence[str] | None = None) -> ForwardCache:
    """
    Propagate normalized inputs through the network.

    :param params: network parameters
    :param X: normalized inputs ``(n_x, m)``
    :param activations: activation kind per layer (default: tanh hidden layers, linear output)
    :return: cache with ``A`` and ``Z`` of every layer
    """
    X = _check_input(params, X)
    cache = ForwardCache(activations=_resolve_activations(params, activations), A=[X], Z=[X])
    for W, b, kind in zip(params.weights, params.biases, cache.activations):
        Z = W @ cache.A[-1] + b
        A, _, _ = ActivationFactory.get_activation(kind).evaluate(Z)
        cache.Z.append(Z)
        cache.A.append(A)
    return cache


def forward_with_partials(
    params: Parameters,
    X: np.ndarray,
    activations: Sequence[str] | None = None,
) -> ForwardCache:
    """
    Propagate normalized inputs and their partials through the network.

    The partials are looped over input ``j`` and vectorized over examples.

    :param params: network parameters
    :param X: normalized inputs ``(n_x, m)``
    :param activations: activation kind per layer (default: tanh hidden layers, linear output)
    :return: cache with ``A``, ``Z``, ``Aprime`` and ``Zprime`` of every layer
    """
    X = _check_input(params, X)
    n_x, m = X.shape
    identity = np.repeat(np.eye(n_x)[:, :, np.newaxis], m, axis=2)
    cache = ForwardCache(
        activations=_resolve_activations(params, activations),
        A=[X], Z=[X], Aprime=[identity], Zprime=[identity],
    )
    for W, b, kind in zip(params.weights, params.biases, cache.activations):
        Z = W @ cache.A[-1] + b
        A, g_prime, _ = ActivationFactory.get_activation(kind).evaluate(Z)
        Aprime_prev = cache.Aprime[-1]
        Zprime = np.empty((W.shape[0], n_x, m))
        Aprime = np.empty((W.shape[0], n_x, m))
        for j in range(n_x):
            Zprime[:, j, :] = W @ Aprime_prev[:, j, :]
            Aprime[:, j, :] = g_prime * Zprime[:, j, :]
        cache.Z.append(Z)
        cache.A.append(A)
        cache.Zprime.append(Zprime)
        cache.Aprime.append(Aprime)
    return cache
