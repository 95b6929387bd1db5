from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from gemlp.core.dataset import Dataset
from gemlp.core.model import Model
from gemlp.exceptions import GemlpMetricsException
from gemlp.propagation.prediction import predict

logger = logging.getLogger(__name__)


def metrics(y_true, y_pred) -> tuple[float, float]:
    """
    Return coefficient of determination and standard deviation of the prediction error.

    :param y_true: reference values
    :param y_pred: predicted values of the same length
    :return: ``(r_squared, error_std)``
    """
    y_true = np.ravel(np.asarray(y_true, dtype=float))
    y_pred = np.ravel(np.asarray(y_pred, dtype=float))
    if y_true.shape != y_pred.shape:
        raise GemlpMetricsException(f'Length mismatch: {y_true.size} reference vs {y_pred.size} predicted values')
    if y_true.size < 2:
        raise GemlpMetricsException('Metrics need at least two values')
    ss_tot = np.sum((y_true - np.mean(y_true)) ** 2)
    if ss_tot == 0:
        raise GemlpMetricsException('R-squared is undefined for constant reference values')
    ss_res = np.sum((y_pred - y_true) ** 2)
    return float(1.0 - ss_res / ss_tot), float(np.std(y_pred - y_true))


@dataclass
class ModelEvaluation:
    """Accuracy of values per output and of partials per ``(output, input)`` pair."""
    r_squared: np.ndarray  # (n_y,)
    error_std: np.ndarray  # (n_y,)
    partial_r_squared: np.ndarray | None = None  # (n_y, n_x); NaN where undefined
    partial_error_std: np.ndarray | None = None

    def rows(self) -> list[dict]:
        """Flatten into report rows, one per output and one per partial."""
        rows = [
            dict(quantity=f'y{k + 1}', r_squared=float(r2), error_std=float(std))
            for k, (r2, std) in enumerate(zip(self.r_squared, self.error_std))
        ]
        if self.partial_r_squared is not None and self.partial_error_std is not None:
            for (k, j), r2 in np.ndenumerate(self.partial_r_squared):
                rows.append(dict(
                    quantity=f'dy{k + 1}_dx{j + 1}',
                    r_squared=float(r2),
                    error_std=float(self.partial_error_std[k, j]),
                ))
        return rows


def evaluate_model(model: Model, data: Dataset) -> ModelEvaluation:
    """
    Compare model predictions against raw reference data.

    Partials are compared only when ``data`` carries a Jacobian; a partial
    whose reference is constant gets NaN R-squared.

    :param model: trained model
    :param data: raw reference data
    """
    Y_hat, J_hat = predict(model, data.X)
    value_metrics = [metrics(data.Y[k], Y_hat[k]) for k in range(data.n_y)]
    evaluation = ModelEvaluation(
        r_squared=np.array([r2 for r2, _ in value_metrics]),
        error_std=np.array([std for _, std in value_metrics]),
    )
    if data.has_jacobian:
        partial_r2 = np.full((data.n_y, data.n_x), np.nan)
        partial_std = np.empty((data.n_y, data.n_x))
        for k in range(data.n_y):
            for j in range(data.n_x):
                partial_std[k, j] = float(np.std(J_hat[k, j] - data.J[k, j]))
                try:
                    partial_r2[k, j] = metrics(data.J[k, j], J_hat[k, j])[0]
                except GemlpMetricsException:
                    logger.warning('R-squared of dy%d/dx%d is undefined for constant reference', k + 1, j + 1)
        evaluation.partial_r_squared = partial_r2
        evaluation.partial_error_std = partial_std
    return evaluation
