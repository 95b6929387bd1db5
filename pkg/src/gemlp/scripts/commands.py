"""
Implementation of the command line commands.

Every command writes its artifacts under the output directory and returns
the process exit code.
"""
from __future__ import annotations

import logging
import os
from pathlib import Path

import numpy as np

from gemlp.benchmarks.experiments import (
    NoisyPartialsConfig,
    RuntimeScalingConfig,
    SampleSizeConfig,
    ValidationConfig,
    crossover_error_percent,
    noise_curve,
    run_noisy_partials_study,
    run_runtime_scaling,
    run_sample_size_study,
    run_validation_suite,
)
from gemlp.benchmarks.metrics import evaluate_model
from gemlp.constants import DEFAULT_HIDDEN_LAYERS
from gemlp.core.dataset import Dataset
from gemlp.core.parameters import Architecture
from gemlp.dataset_file import read_dataset, read_inputs, read_weights, write_predictions
from gemlp.exceptions import GemlpConfigurationException
from gemlp.helper import string_to_float_list
from gemlp.model_file import load_model, save_model
from gemlp.propagation.prediction import predict
from gemlp.report.base_report_writer import BaseReportWriter
from gemlp.report.csv_report import CsvReport
from gemlp.report.json_report import JsonReport
from gemlp.report.plot_data import write_plot_data
from gemlp.report.summary import print_table
from gemlp.run_config import RunConfig
from gemlp.sbo.optimizer import minimize
from gemlp.sbo.problem import OptProblem
from gemlp.sbo.rosenbrock_study import RosenbrockStudyConfig, run_rosenbrock_study
from gemlp.sbo.surrogate import surrogate_objective
from gemlp.training.polish import polish
from gemlp.training.trainer import train

logger = logging.getLogger(__name__)


def _save_report(writer: BaseReportWriter, data) -> None:
    writer.write(data)
    logger.info(writer.summary())


def resolve_weights(spec: str | None, shape: tuple[int, ...]) -> np.ndarray | None:
    """
    Turn a ``--beta``/``--gamma`` value into loss weights.

    :param spec: scalar, comma separated value per output, or path to weights CSV
    :param shape: ``(n_y, m)`` for beta or ``(n_y, n_x, m)`` for gamma
    :return: weights broadcastable to ``shape`` or None when not given
    """
    if spec is None:
        return None
    if spec.lower().endswith('.csv'):
        return read_weights(spec, shape)
    values = np.array(string_to_float_list(spec))
    if values.size == 1:
        return values.reshape((1,) * len(shape))
    if values.size != shape[0]:
        raise GemlpConfigurationException(f'Expected 1 or {shape[0]} weights (one per output), got {values.size}')
    return values.reshape((shape[0],) + (1,) * (len(shape) - 1))


def apply_weights(data: Dataset, beta: str | None, gamma: str | None) -> Dataset:
    """Replace loss weights of ``data``; partials missing from the file stay masked."""
    beta_weights = resolve_weights(beta, data.Y.shape)
    gamma_weights = resolve_weights(gamma, data.jacobian_shape)
    if gamma_weights is not None and not data.has_jacobian and np.any(gamma_weights != 0):
        raise GemlpConfigurationException('Nonzero --gamma needs a dataset with partial columns')
    changes = {}
    if beta_weights is not None:
        changes['beta'] = beta_weights
    if gamma_weights is not None:
        changes['gamma'] = (data.gamma > 0) * gamma_weights
    if not changes:
        return data
    data = data.replace(**changes)
    data.check()
    return data


def resolve_architecture(spec: str, data: Dataset) -> Architecture:
    if not spec:
        return Architecture(layer_sizes=(data.n_x, *DEFAULT_HIDDEN_LAYERS, data.n_y))
    return Architecture.from_string(spec)


def cli_train(config: RunConfig) -> int:
    data = apply_weights(read_dataset(config.data_path), config.beta, config.gamma)
    arch = resolve_architecture(config.architecture, data)
    model, report = train(data, arch, config.training)
    cost_history = list(report.cost_history)
    summary = [dict(stage='train', epochs=report.epochs_run, final_cost=report.final_cost,
                    duration=report.duration)]
    if config.polish is not None:
        model, polish_report = polish(model, data, config.polish, config.training.replace(epochs=config.polish_epochs))
        cost_history.extend(polish_report.cost_history)
        summary.append(dict(stage='polish', epochs=polish_report.epochs_run, final_cost=polish_report.final_cost,
                            duration=polish_report.duration))

    model_path = config.default_model_path
    save_model(model, model_path)
    _save_report(
        CsvReport(os.path.join(config.output_dir, 'cost_history.csv')),
        [dict(epoch=epoch, cost=value) for epoch, value in enumerate(cost_history, start=1)],
    )
    _save_report(JsonReport(os.path.join(config.output_dir, 'training_report.json')), dict(
        model=model_path,
        architecture=str(arch),
        num_examples=data.m,
        training=config.training.asdict(),
        polish=None if config.polish is None else dict(
            eta=config.polish.eta, epsilon=config.polish.epsilon, epochs=config.polish_epochs
        ),
        stages=summary,
    ))
    print_table(summary)
    print(f'\nModel written to {model_path}')
    return 0


def cli_predict(config: RunConfig) -> int:
    model = load_model(config.model_path)
    X = read_inputs(config.input_path, n_x=model.n_x)
    Y, J = predict(model, X)
    predictions_path = config.predictions_path or os.path.join(config.output_dir, 'predictions.csv')
    write_predictions(predictions_path, X, Y, J)
    logger.info('Predictions for %d points written to %s', X.shape[1], predictions_path)
    return 0


def cli_evaluate(config: RunConfig) -> int:
    model = load_model(config.model_path)
    data = read_dataset(config.data_path)
    if (data.n_x, data.n_y) != (model.n_x, model.n_y):
        raise GemlpConfigurationException(
            f'Model {model.architecture} does not match data with n_x={data.n_x}, n_y={data.n_y}'
        )
    rows = evaluate_model(model, data).rows()
    _save_report(CsvReport(os.path.join(config.output_dir, 'evaluation.csv')), rows)
    print_table(rows)
    return 0


def _write_results(config: RunConfig, name: str, rows: list[dict]) -> None:
    _save_report(CsvReport(os.path.join(config.output_dir, f'{name}.csv')), rows)
    print_table(rows)


def cli_bench(config: RunConfig) -> int:
    output_dir = Path(config.output_dir)
    experiment = config.experiment
    if experiment == 'validation':
        results = run_validation_suite(ValidationConfig(seed=config.seed))
        _write_results(config, 'validation_results', [result.asdict() for result in results])
        write_plot_data(output_dir, results)
    elif experiment == 'noisy':
        results = run_noisy_partials_study(NoisyPartialsConfig(seed=config.seed))
        _write_results(config, 'noisy_partials_results', [result.asdict() for result in results])
        _save_report(CsvReport(str(output_dir / 'noisy_partials_curve.csv')), [
            dict(fd_error_percent=error, jenn_r_squared=jenn, nn_r_squared=nn)
            for error, jenn, nn in noise_curve(results)
        ])
        print(f'\nJENN stops beating NN at {crossover_error_percent(results):.2f}% mean FD error')
    elif experiment == 'runtime':
        scaling = run_runtime_scaling(RuntimeScalingConfig(seed=config.seed))
        _write_results(config, 'runtime_results', [
            dict(num_samples=m, seconds_per_epoch=runtime)
            for m, runtime in zip(scaling.sample_sizes, scaling.runtimes)
        ])
        _save_report(JsonReport(str(output_dir / 'runtime_fit.json')), dict(
            slope=scaling.slope, intercept=scaling.intercept, r_squared=scaling.fit_r_squared,
        ))
        print(f'\nLinear fit: R2={scaling.fit_r_squared:.4f}')
    elif experiment == 'rosenbrock':
        study = run_rosenbrock_study(RosenbrockStudyConfig(seed=config.seed))
        _write_results(config, 'rosenbrock_results', study.rows())
        for name, trace in study.traces.items():
            _save_report(CsvReport(str(output_dir / f'rosenbrock_trace_{name}.csv')), trace.rows())
    elif experiment == 'samples':
        results = run_sample_size_study(SampleSizeConfig(seed=config.seed))
        _write_results(config, 'sample_size_results', [result.asdict() for result in results])
    return 0


def cli_sbo(config: RunConfig) -> int:
    model = load_model(config.model_path)
    bounds = np.array(config.bounds) if config.bounds else None
    if bounds is None or bounds.shape[0] != model.n_x:
        raise GemlpConfigurationException(f'Give one --bounds pair for each of the {model.n_x} inputs')
    x0 = np.array(config.x0) if config.x0 else bounds.mean(axis=1)
    trace = minimize(OptProblem(objective=surrogate_objective(model), bounds=bounds, x0=x0))
    _save_report(CsvReport(os.path.join(config.output_dir, 'sbo_trace.csv')), trace.rows())
    print_table([dict(
        **{f'x{j + 1}': float(value) for j, value in enumerate(trace.x)},
        value=trace.value,
        iterations=trace.num_iterations,
        termination=trace.termination_reason.value,
    )])
    return 0


COMMAND_HANDLERS = {
    'train': cli_train,
    'predict': cli_predict,
    'evaluate': cli_evaluate,
    'bench': cli_bench,
    'sbo': cli_sbo,
}
