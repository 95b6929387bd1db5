from __future__ import annotations

import logging

import numpy as np

from gemlp.core.model import Model
from gemlp.core.normalization import denormalize_prediction
from gemlp.exceptions import GemlpShapeException
from gemlp.propagation.forward import forward, forward_with_partials

logger = logging.getLogger(__name__)


def predict(model: Model, X_raw: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Predict raw-unit outputs and Jacobian.

    :param model: trained model
    :param X_raw: raw inputs ``(n_x, m)``
    :return: outputs ``(n_y, m)`` and Jacobian ``(n_y, n_x, m)``
    """
    X_raw = _as_inputs(model, X_raw)
    cache = forward_with_partials(model.parameters, model.norm.normalize_x(X_raw), model.architecture.activations())
    y_raw, j_raw = denormalize_prediction(cache.y_hat, cache.j_hat, model.norm)
    return y_raw, j_raw  # type: ignore[return-value]


def predict_values(model: Model, X_raw: np.ndarray) -> np.ndarray:
    """Predict raw-unit outputs only (no partials)."""
    X_raw = _as_inputs(model, X_raw)
    cache = forward(model.parameters, model.norm.normalize_x(X_raw), model.architecture.activations())
    y_raw, _ = denormalize_prediction(cache.y_hat, None, model.norm)
    return y_raw


def _as_inputs(model: Model, X_raw: np.ndarray) -> np.ndarray:
    X_raw = np.asarray(X_raw, dtype=float)
    if X_raw.ndim == 1 and model.n_x == 1:
        X_raw = X_raw.reshape(1, -1)
    if X_raw.ndim != 2 or X_raw.shape[0] != model.n_x:
        msg = f'Model expects inputs of shape ({model.n_x}, m), got {X_raw.shape}'
        logger.error(msg)
        raise GemlpShapeException(msg)
    return X_raw
