"""
Surrogate-based optimization of the Rosenbrock function.

The same box-constrained problem is solved on the true function and on three
surrogates trained from a regular grid plus a Latin hypercube: NN (gamma = 0),
JENN (gamma = 1) and JENN polished towards regions of small slope.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from gemlp.benchmarks.sampling import grid_sample, lhs_sample
from gemlp.benchmarks.test_functions import TestFunctionFactory
from gemlp.core.model import Model
from gemlp.core.parameters import Architecture
from gemlp.sbo.optimizer import MinimizeSettings, minimize
from gemlp.sbo.problem import Objective, OptProblem, OptTrace
from gemlp.sbo.surrogate import surrogate_objective, true_objective
from gemlp.training.config import PolishConfig, TrainingConfig
from gemlp.training.polish import polish
from gemlp.training.trainer import train

logger = logging.getLogger(__name__)

TRUE = 'true'
NN = 'NN'
JENN = 'JENN'
JENN_POLISHED = 'JENN-polished'
OPTIMUM: tuple[float, float] = (1.0, 1.0)


@dataclass
class RosenbrockStudyConfig:
    grid_points: int = 9  # per dimension
    lhs_samples: int = 100
    hidden_layers: tuple[int, ...] = (24, 24)
    training: TrainingConfig = field(default_factory=lambda: TrainingConfig(alpha=0.01, epochs=5000))
    polish: PolishConfig = field(default_factory=PolishConfig)
    polish_epochs: int = 2000
    x0: tuple[float, float] = (-1.5, -1.0)
    settings: MinimizeSettings = field(default_factory=lambda: MinimizeSettings(max_iter=20000))
    num_starts: int = 10  # dispersion of final points over random starts, 0 to skip
    seed: int = 0


@dataclass
class Dispersion:
    """Spread of final points when minimizing from several start points."""
    mean_distance: float
    std_distance: float
    final_points: np.ndarray = field(repr=False)


@dataclass
class RosenbrockStudyResult:
    traces: dict[str, OptTrace]
    models: dict[str, Model] = field(default_factory=dict, repr=False)
    dispersion: dict[str, Dispersion] = field(default_factory=dict)

    @property
    def distances(self) -> dict[str, float]:
        """Distance of every final point to the true optimum."""
        return {name: trace.distance_to(OPTIMUM) for name, trace in self.traces.items()}

    def rows(self) -> list[dict]:
        rows = []
        for name, trace in self.traces.items():
            row = dict(
                objective=name,
                x1=float(trace.x[0]),
                x2=float(trace.x[1]),
                value=trace.value,
                distance=trace.distance_to(OPTIMUM),
                iterations=trace.num_iterations,
                termination=trace.termination_reason.value,
            )
            if name in self.dispersion:
                row.update(
                    mean_distance=self.dispersion[name].mean_distance,
                    std_distance=self.dispersion[name].std_distance,
                )
            rows.append(row)
        return rows


def _dispersion(objective: Objective, bounds: np.ndarray, starts: np.ndarray, settings: MinimizeSettings) -> Dispersion:
    finals = np.array([
        minimize(OptProblem(objective=objective, bounds=bounds, x0=x0), settings).x for x0 in starts.T
    ])
    distances = np.linalg.norm(finals - np.asarray(OPTIMUM), axis=1)
    return Dispersion(mean_distance=float(np.mean(distances)), std_distance=float(np.std(distances)),
                      final_points=finals)


def run_rosenbrock_study(config: RosenbrockStudyConfig | None = None) -> RosenbrockStudyResult:
    """
    Train the surrogates and minimize all four objectives.

    :param config: study configuration
    :return: traces, trained models and optional final-point dispersion
    """
    config = config or RosenbrockStudyConfig()
    f = TestFunctionFactory.get_function('rosenbrock2d')
    bounds = f.bounds
    X = np.concatenate(
        [grid_sample(config.grid_points, bounds), lhs_sample(config.lhs_samples, bounds, seed=config.seed)], axis=1
    )
    data = f.dataset(X)
    arch = Architecture(layer_sizes=(f.n_x, *config.hidden_layers, f.n_y))
    training = config.training.replace(seed=config.seed)

    models: dict[str, Model] = {}
    models[NN], _ = train(data.replace(gamma=0.0), arch, training)
    models[JENN], _ = train(data, arch, training)
    models[JENN_POLISHED], _ = polish(models[JENN], data, config.polish, training.replace(epochs=config.polish_epochs))
    logger.info('Trained %d surrogates on %d samples', len(models), data.m)

    objectives: dict[str, Objective] = {TRUE: true_objective(f)}
    objectives.update({name: surrogate_objective(model) for name, model in models.items()})
    result = RosenbrockStudyResult(traces={}, models=models)
    starts = lhs_sample(config.num_starts, bounds, seed=config.seed + 1) if config.num_starts else None
    for name, objective in objectives.items():
        trace = minimize(OptProblem(objective=objective, bounds=bounds, x0=config.x0), config.settings)
        result.traces[name] = trace
        logger.info(
            'Rosenbrock %s: final point %s, distance to optimum %.3e (%s)',
            name, np.round(trace.x, 6).tolist(), trace.distance_to(OPTIMUM), trace.termination_reason.value,
        )
        if starts is not None:
            result.dispersion[name] = _dispersion(objective, bounds, starts, config.settings)
    return result
