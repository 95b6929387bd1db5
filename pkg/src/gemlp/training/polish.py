"""
Polishing: resume training with extra weight on the partials of small slope.

``gamma = 1 + eta * exp(-(epsilon * dy/dx)^2)`` is largest where the slope
vanishes, which is where the optimizer of a surrogate converges.
"""
from __future__ import annotations

import logging

import numpy as np

from gemlp.core.dataset import Dataset
from gemlp.core.model import Model
from gemlp.exceptions import GemlpDatasetException
from gemlp.training.config import PolishConfig, TrainingConfig
from gemlp.training.trainer import TrainingReport, train

logger = logging.getLogger(__name__)


def polish_weights(J_raw: np.ndarray, polish: PolishConfig) -> np.ndarray:
    """
    Return polishing weights of the same shape as ``J_raw``.

    :param J_raw: Jacobian in raw (not normalized) units
    :param polish: polishing hyperparameters
    """
    J_raw = np.asarray(J_raw, dtype=float)
    return 1.0 + polish.eta * np.exp(-((polish.epsilon * J_raw) ** 2))


def polish(
    model: Model, data: Dataset, polish: PolishConfig, config: TrainingConfig
) -> tuple[Model, TrainingReport]:
    """
    Continue training ``model`` on ``data`` with polishing weights.

    Partials masked out in ``data`` (gamma = 0) stay masked.

    :param model: trained model to start from
    :param data: raw training data with Jacobian
    :param polish: polishing hyperparameters
    :param config: hyperparameters of the resumed training
    :return: polished model and training report
    """
    if not data.has_jacobian:
        msg = 'Polishing needs training data with partials'
        logger.error(msg)
        raise GemlpDatasetException(msg)
    gamma = polish_weights(data.J, polish) * (data.gamma > 0)
    logger.info('Polishing with eta=%s, epsilon=%s (gamma up to %.1f)', polish.eta, polish.epsilon, gamma.max())
    return train(
        data.replace(gamma=gamma),
        model.architecture,
        config,
        initial_parameters=model.parameters,
        norm=model.norm,
    )
