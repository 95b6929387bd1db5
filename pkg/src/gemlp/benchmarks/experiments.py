"""
Desk-scale experiments comparing gradient-enhanced training (JENN, gamma = 1)
with plain value fitting (NN, gamma = 0).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from gemlp.benchmarks.finite_difference import finite_difference_partials, mean_fd_error_percent
from gemlp.benchmarks.metrics import metrics
from gemlp.benchmarks.sampling import grid_sample, lhs_sample
from gemlp.benchmarks.test_functions import TestFunction, TestFunctionFactory
from gemlp.core.dataset import Dataset
from gemlp.core.model import Model
from gemlp.core.parameters import Architecture
from gemlp.exceptions import GemlpConfigurationException
from gemlp.propagation.prediction import predict_values
from gemlp.training.config import TrainingConfig
from gemlp.training.trainer import TrainingReport, train

logger = logging.getLogger(__name__)

JENN = 'JENN'
NN = 'NN'
SAMPLING_PLANS: tuple[str, ...] = ('interior', 'linspace', 'lhs')


@dataclass
class ExperimentResult:
    """One trained model of an experiment and its accuracy on held-out data."""
    experiment: str
    case: str
    model: str
    r_squared: float = math.nan
    error_std: float = math.nan
    runtime_seconds: float = 0.0
    parameters: dict = field(default_factory=dict)
    config: dict = field(default_factory=dict)
    curves: dict[str, np.ndarray] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.r_squared > 1.0 + 1e-12:
            raise GemlpConfigurationException(f'R-squared cannot exceed 1, got {self.r_squared}')
        if self.runtime_seconds < 0:
            raise GemlpConfigurationException(f'Runtime cannot be negative, got {self.runtime_seconds}')

    def asdict(self) -> dict:
        """Return flat row for result tables; curves are written separately."""
        return dict(
            experiment=self.experiment,
            case=self.case,
            model=self.model,
            r_squared=self.r_squared,
            error_std=self.error_std,
            runtime_seconds=self.runtime_seconds,
            **self.parameters,
        )


@dataclass(frozen=True)
class ValidationCase:
    function: str
    num_samples: int
    sampling: str = 'lhs'
    hidden_layers: tuple[int, ...] = (12, 12)
    epochs: int = 2000
    lambd: float = 0.0

    def __post_init__(self):
        if self.sampling not in SAMPLING_PLANS:
            raise GemlpConfigurationException(f'Sampling plan must be one of {SAMPLING_PLANS}, got {self.sampling!r}')


DEFAULT_VALIDATION_CASES: tuple[ValidationCase, ...] = (
    ValidationCase('sin', 3, sampling='interior', epochs=3000, lambd=0.001),
    ValidationCase('xsinx', 4, sampling='linspace', epochs=5000, lambd=0.01),
    ValidationCase('rastrigin2d', 100, sampling='lhs', epochs=5000, lambd=0.01),
)


@dataclass
class ValidationConfig:
    cases: tuple[ValidationCase, ...] = DEFAULT_VALIDATION_CASES
    training: TrainingConfig = field(default_factory=lambda: TrainingConfig(alpha=0.01))
    test_points_1d: int = 200
    test_points_2d: int = 50  # per dimension
    seed: int = 0


@dataclass
class NoisyPartialsConfig:
    function: str = 'rastrigin2d'
    num_samples: int = 125
    steps: tuple[float, ...] = (1e-6, 0.04, 0.06, 0.08, 0.1, 0.12, 0.135, 0.15, 0.2, 0.25, 0.3)
    scheme: str = 'central'
    hidden_layers: tuple[int, ...] = (24, 24)
    training: TrainingConfig = field(default_factory=lambda: TrainingConfig(alpha=0.01, lambd=0.01, epochs=5000))
    test_points_per_dim: int = 50
    repeats: int = 3  # initialization seeds averaged per level
    seed: int = 0


@dataclass
class RuntimeScalingConfig:
    function: str = 'rastrigin2d'
    sample_sizes: tuple[int, ...] = (500, 1000, 2000, 4000, 8000)
    hidden_layers: tuple[int, ...] = (24, 24)
    training: TrainingConfig = field(default_factory=lambda: TrainingConfig(alpha=0.05, epochs=20))
    repeats: int = 3
    seed: int = 0


@dataclass
class SampleSizeConfig:
    function: str = 'rastrigin2d'
    sample_sizes: tuple[int, ...] = (10, 25, 50, 100, 200)
    hidden_layers: tuple[int, ...] = (12, 12)
    training: TrainingConfig = field(default_factory=lambda: TrainingConfig(alpha=0.01, lambd=0.01, epochs=5000))
    test_points_per_dim: int = 50
    seed: int = 0


@dataclass
class RuntimeScalingResult:
    sample_sizes: list[int]
    runtimes: list[float]  # median seconds per epoch
    slope: float
    intercept: float
    fit_r_squared: float
    results: list[ExperimentResult] = field(default_factory=list)


def architecture_for(f: TestFunction, hidden_layers: tuple[int, ...]) -> Architecture:
    return Architecture(layer_sizes=(f.n_x, *hidden_layers, f.n_y))


def training_points(f: TestFunction, num_samples: int, sampling: str, seed: int = 0) -> np.ndarray:
    """
    Return training inputs ``(n_x, num_samples)`` inside the domain of ``f``.

    ``interior`` spreads points evenly but keeps them off the domain ends, where
    periodic functions repeat their values; ``linspace`` includes the ends.
    """
    lo, hi = f.lower, f.upper
    if sampling == 'lhs':
        return lhs_sample(num_samples, f.bounds, seed=seed)
    if f.n_x != 1:
        raise GemlpConfigurationException(f'Sampling plan {sampling!r} is only defined for one input')
    if sampling == 'interior':
        margin = 0.04 * (hi - lo)
        return np.linspace(lo + margin, hi - margin, num_samples).reshape(1, -1)
    return np.linspace(lo, hi, num_samples).reshape(1, -1)


def holdout_points(f: TestFunction, per_dim: int) -> np.ndarray:
    """Cell-centred grid, disjoint from the domain boundary."""
    half_cell = (f.upper - f.lower) / (2.0 * per_dim)
    bounds = f.bounds + np.array([half_cell, -half_cell])
    return grid_sample(per_dim, bounds)


def _fit_and_score(
    data: Dataset,
    arch: Architecture,
    config: TrainingConfig,
    X_test: np.ndarray,
    Y_test: np.ndarray,
) -> tuple[Model, TrainingReport, float, float, np.ndarray]:
    model, report = train(data, arch, config)
    Y_pred = predict_values(model, X_test)
    r_squared, error_std = metrics(Y_test, Y_pred)
    return model, report, r_squared, error_std, Y_pred


def run_jenn_vs_nn(
    experiment: str,
    case: str,
    data: Dataset,
    arch: Architecture,
    config: TrainingConfig,
    X_test: np.ndarray,
    Y_test: np.ndarray,
    parameters: dict | None = None,
) -> list[ExperimentResult]:
    """Train the same network with and without gradient enhancement on ``data``."""
    training_curves = dict(X_train=data.X, Y_train=data.Y)
    if data.has_jacobian:
        training_curves['J_train'] = data.J
    results = []
    for label, gamma in ((JENN, data.gamma), (NN, 0.0)):
        _, report, r_squared, error_std, Y_pred = _fit_and_score(
            data.replace(gamma=gamma), arch, config, X_test, Y_test
        )
        logger.info('%s %s %s: R2=%.4f, error std=%.4e', experiment, case, label, r_squared, error_std)
        results.append(ExperimentResult(
            experiment=experiment,
            case=case,
            model=label,
            r_squared=r_squared,
            error_std=error_std,
            runtime_seconds=report.duration,
            parameters=dict(parameters or {}, architecture=str(arch), num_samples=data.m),
            config=config.asdict(),
            curves=dict(training_curves, X_test=X_test, Y_test=Y_test, Y_pred=Y_pred),
        ))
    return results


def run_validation_suite(config: ValidationConfig | None = None) -> list[ExperimentResult]:
    """
    Compare JENN and NN on the validation functions.

    :param config: experiment configuration
    :return: one JENN and one NN result per case
    """
    config = config or ValidationConfig()
    results = []
    for case in config.cases:
        f = TestFunctionFactory.get_function(case.function)
        data = f.dataset(training_points(f, case.num_samples, case.sampling, seed=config.seed))
        X_test = holdout_points(f, config.test_points_1d if f.n_x == 1 else config.test_points_2d)
        results.extend(run_jenn_vs_nn(
            'validation',
            f.name,
            data,
            architecture_for(f, case.hidden_layers),
            config.training.replace(epochs=case.epochs, lambd=case.lambd, seed=config.seed),
            X_test,
            f.values(X_test),
        ))
    return results


def _mean_score(
    data: Dataset,
    arch: Architecture,
    config: TrainingConfig,
    X_test: np.ndarray,
    Y_test: np.ndarray,
    repeats: int,
) -> tuple[float, float, float]:
    """Mean R2, error std and training time over initialization seeds ``config.seed + i``."""
    scores = []
    for offset in range(repeats):
        _, report, r_squared, error_std, _ = _fit_and_score(
            data, arch, config.replace(seed=config.seed + offset), X_test, Y_test
        )
        scores.append((r_squared, error_std, report.duration))
    r_squared, error_std, duration = np.mean(scores, axis=0)
    return float(r_squared), float(error_std), float(duration)


def run_noisy_partials_study(config: NoisyPartialsConfig | None = None) -> list[ExperimentResult]:
    """
    Train JENN on partials of increasing finite-difference error.

    Results hold one NN baseline plus one JENN model per step size; JENN rows
    carry ``h`` and ``fd_error_percent`` in their parameters. Every score is
    the mean over ``repeats`` initialization seeds on the same samples.

    :param config: experiment configuration
    """
    config = config or NoisyPartialsConfig()
    if config.repeats < 1:
        raise GemlpConfigurationException(f'Noisy partials study needs at least one repeat, got {config.repeats}')
    f = TestFunctionFactory.get_function(config.function)
    X = lhs_sample(config.num_samples, f.bounds, seed=config.seed)
    exact = f.dataset(X)
    X_test = holdout_points(f, config.test_points_per_dim)
    Y_test = f.values(X_test)
    arch = architecture_for(f, config.hidden_layers)
    training = config.training.replace(seed=config.seed)

    results = []
    r_squared, error_std, duration = _mean_score(
        exact.replace(gamma=0.0), arch, training, X_test, Y_test, config.repeats
    )
    logger.info('noisy partials NN baseline: R2=%.4f', r_squared)
    results.append(ExperimentResult(
        experiment='noisy_partials', case=f.name, model=NN, r_squared=r_squared, error_std=error_std,
        runtime_seconds=duration, parameters=dict(h=0.0, fd_error_percent=math.nan, repeats=config.repeats),
        config=training.asdict(),
    ))
    for h in config.steps:
        J_fd = finite_difference_partials(f, X, h, scheme=config.scheme)
        fd_error = mean_fd_error_percent(J_fd, exact.J)
        r_squared, error_std, duration = _mean_score(
            exact.replace(J=J_fd), arch, training, X_test, Y_test, config.repeats
        )
        logger.info('noisy partials h=%s (%.2f%% error): JENN R2=%.4f', h, fd_error, r_squared)
        results.append(ExperimentResult(
            experiment='noisy_partials', case=f.name, model=JENN, r_squared=r_squared, error_std=error_std,
            runtime_seconds=duration, parameters=dict(h=h, fd_error_percent=fd_error, repeats=config.repeats),
            config=training.asdict(),
        ))
    return results


def noise_curve(results: list[ExperimentResult]) -> list[tuple[float, float, float]]:
    """Return ``(mean FD error %, JENN R2, NN R2)`` sorted by error."""
    baseline = next(result.r_squared for result in results if result.model == NN)
    curve = [
        (result.parameters['fd_error_percent'], result.r_squared, baseline)
        for result in results if result.model == JENN
    ]
    return sorted(curve)


def crossover_error_percent(results: list[ExperimentResult]) -> float:
    """Return the smallest FD error at which JENN no longer beats NN, NaN if it always does."""
    for error, jenn_r_squared, nn_r_squared in noise_curve(results):
        if jenn_r_squared <= nn_r_squared:
            return error
    return math.nan


def run_runtime_scaling(config: RuntimeScalingConfig | None = None) -> RuntimeScalingResult:
    """
    Time training on growing datasets and fit ``runtime = slope * m + intercept``.

    Only the epoch loop is timed, ``repeats`` times per size; the median time per epoch is kept.

    :param config: experiment configuration
    """
    config = config or RuntimeScalingConfig()
    if config.repeats < 1 or config.training.epochs < 1:
        raise GemlpConfigurationException('Runtime scaling needs at least one repeat and one epoch')
    f = TestFunctionFactory.get_function(config.function)
    arch = architecture_for(f, config.hidden_layers)
    training = config.training.replace(seed=config.seed)
    runtimes, results = [], []
    for m in config.sample_sizes:
        data = f.dataset(lhs_sample(m, f.bounds, seed=config.seed))
        timings = []
        for _ in range(config.repeats):
            _, report = train(data, arch, training)
            timings.append(report.duration / report.epochs_run)
        per_epoch = float(np.median(timings))
        logger.info('runtime scaling m=%d: %.3e s per epoch', m, per_epoch)
        runtimes.append(per_epoch)
        results.append(ExperimentResult(
            experiment='runtime', case=f.name, model=JENN, runtime_seconds=per_epoch,
            parameters=dict(num_samples=m, architecture=str(arch)), config=training.asdict(),
        ))
    if len(config.sample_sizes) >= 2:
        fit = stats.linregress(config.sample_sizes, runtimes)
        slope, intercept, fit_r_squared = float(fit.slope), float(fit.intercept), float(fit.rvalue ** 2)
    else:
        slope, intercept, fit_r_squared = math.nan, math.nan, math.nan
    return RuntimeScalingResult(
        sample_sizes=list(config.sample_sizes),
        runtimes=runtimes,
        slope=slope,
        intercept=intercept,
        fit_r_squared=fit_r_squared,
        results=results,
    )


def run_sample_size_study(config: SampleSizeConfig | None = None) -> list[ExperimentResult]:
    """
    Accuracy of JENN and NN as a function of the number of training samples.

    :param config: experiment configuration
    """
    config = config or SampleSizeConfig()
    f = TestFunctionFactory.get_function(config.function)
    arch = architecture_for(f, config.hidden_layers)
    X_test = holdout_points(f, config.test_points_per_dim)
    Y_test = f.values(X_test)
    results = []
    for num_samples in config.sample_sizes:
        data = f.dataset(lhs_sample(num_samples, f.bounds, seed=config.seed))
        results.extend(run_jenn_vs_nn(
            'samples', f.name, data, arch, config.training.replace(seed=config.seed), X_test, Y_test,
        ))
    return results
