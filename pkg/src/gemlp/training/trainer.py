from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

import numpy as np

from gemlp.core.dataset import Dataset
from gemlp.core.model import Model
from gemlp.core.normalization import NormalizationStats, compute_normalization, normalize_dataset
from gemlp.core.parameters import Architecture, Parameters, init_parameters
from gemlp.exceptions import GemlpConfigurationException, GemlpTrainingDivergedException
from gemlp.propagation.forward import ForwardCache, forward, forward_with_partials
from gemlp.training.backprop import backward
from gemlp.training.config import TrainingConfig
from gemlp.training.cost import cost
from gemlp.training.optimizer import OptimizerState, update_parameters

logger = logging.getLogger(__name__)


@dataclass
class TrainingReport:
    cost_history: list[float] = field(default_factory=list)
    final_cost: float = float('nan')
    epochs_run: int = 0
    duration: float = 0.0  # seconds

    def asdict(self) -> dict:
        return dict(
            final_cost=self.final_cost,
            epochs_run=self.epochs_run,
            duration=self.duration,
            cost_history=list(self.cost_history),
        )


def _propagate(params: Parameters, data: Dataset, activations: list[str], with_partials: bool) -> ForwardCache:
    if with_partials:
        return forward_with_partials(params, data.X, activations)
    return forward(params, data.X, activations)


def _batches(m: int, batch_size: int | None, rng: np.random.Generator) -> list[np.ndarray]:
    if batch_size is None or batch_size >= m:
        return []
    order = rng.permutation(m)
    return [order[start:start + batch_size] for start in range(0, m, batch_size)]


def _check_dims(data: Dataset, arch: Architecture) -> None:
    if (arch.n_x, arch.n_y) != (data.n_x, data.n_y):
        msg = f'Architecture {arch} does not match data with n_x={data.n_x}, n_y={data.n_y}'
        logger.error(msg)
        raise GemlpConfigurationException(msg)


def train(
    data: Dataset,
    arch: Architecture,
    config: TrainingConfig,
    initial_parameters: Parameters | None = None,
    norm: NormalizationStats | None = None,
) -> tuple[Model, TrainingReport]:
    """
    Train a network on raw data.

    Every epoch is followed by an evaluation of the cost on the full data set;
    a non-finite cost stops training.

    :param data: raw training data
    :param arch: network architecture
    :param config: hyperparameters
    :param initial_parameters: resume from these parameters instead of a fresh initialization
    :param norm: normalization statistics to reuse (default: computed from ``data``)
    :return: trained model and training report
    """
    data.check()
    _check_dims(data, arch)
    if norm is None:
        norm = compute_normalization(data)
    train_data = normalize_dataset(data, norm)
    if not np.all(np.asarray(config.gamma_scale) == 1.0):
        train_data = train_data.replace(gamma=train_data.gamma * np.asarray(config.gamma_scale, dtype=float))
    train_data.check()

    if initial_parameters is None:
        params = init_parameters(arch, seed=config.seed)
    else:
        initial_parameters.check_architecture(arch)
        params = initial_parameters

    activations = arch.activations()
    with_partials = bool(np.any(train_data.gamma != 0))
    rng = np.random.default_rng(config.seed)
    state = OptimizerState()
    report = TrainingReport()
    logger.info(
        'Training %s on %d examples (%s partials) for %d epochs with %s',
        arch, data.m, 'with' if with_partials else 'without', config.epochs, config.optimizer,
    )

    start = time.perf_counter()
    cache = _propagate(params, train_data, activations, with_partials)
    for epoch in range(1, config.epochs + 1):
        batches = _batches(train_data.m, config.batch_size, rng)
        if not batches:
            grads = backward(params, cache, train_data, config.lambd)
            params, state = update_parameters(params, grads, state, config)
        for columns in batches:
            batch = train_data.subset(columns)
            batch_cache = _propagate(params, batch, activations, with_partials)
            grads = backward(params, batch_cache, batch, config.lambd)
            params, state = update_parameters(params, grads, state, config)

        cache = _propagate(params, train_data, activations, with_partials)
        epoch_cost = cost(params, cache, train_data, config.lambd)
        if not np.isfinite(epoch_cost):
            msg = f'Training diverged at epoch {epoch}: cost is {epoch_cost}'
            logger.error(msg)
            raise GemlpTrainingDivergedException(msg, epoch=epoch)
        report.cost_history.append(epoch_cost)
        logger.debug('Epoch %d: cost %.6e', epoch, epoch_cost)

    report.duration = time.perf_counter() - start
    report.epochs_run = len(report.cost_history)
    report.final_cost = (
        report.cost_history[-1] if report.cost_history else cost(params, cache, train_data, config.lambd)
    )
    logger.info('Training finished after %d epochs: cost %.6e', report.epochs_run, report.final_cost)
    return Model(architecture=arch, parameters=params, norm=norm), report
