from __future__ import annotations

import logging

import numpy as np

from gemlp.benchmarks.test_functions import TestFunction, eval_test_function
from gemlp.core.model import Model
from gemlp.exceptions import GemlpConfigurationException
from gemlp.propagation.prediction import predict
from gemlp.sbo.problem import Objective

logger = logging.getLogger(__name__)


def surrogate_objective(model: Model) -> Objective:
    """
    Wrap a single-output model as objective returning value and gradient in raw units.

    :param model: trained model with one output
    """
    if model.n_y != 1:
        msg = f'Surrogate objective needs a model with one output, got {model.n_y}'
        logger.error(msg)
        raise GemlpConfigurationException(msg)

    def objective(x: np.ndarray) -> tuple[float, np.ndarray]:
        Y, J = predict(model, np.asarray(x, dtype=float).reshape(-1, 1))
        return float(Y[0, 0]), J[0, :, 0].copy()

    return objective


def true_objective(f: TestFunction) -> Objective:
    """Wrap a test function with its analytic gradient."""

    def objective(x: np.ndarray) -> tuple[float, np.ndarray]:
        return eval_test_function(f, x)

    return objective
