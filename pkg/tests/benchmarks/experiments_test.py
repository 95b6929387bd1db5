import math
from unittest import mock

import numpy as np
import pytest

from gemlp.benchmarks.experiments import (
    JENN,
    NN,
    ExperimentResult,
    NoisyPartialsConfig,
    RuntimeScalingConfig,
    SampleSizeConfig,
    ValidationCase,
    ValidationConfig,
    _fit_and_score,
    crossover_error_percent,
    holdout_points,
    noise_curve,
    run_noisy_partials_study,
    run_runtime_scaling,
    run_sample_size_study,
    run_validation_suite,
    training_points,
)
from gemlp.benchmarks.test_functions import TestFunctionFactory
from gemlp.exceptions import GemlpConfigurationException
from gemlp.training.config import TrainingConfig


def _noisy_result(model: str, r_squared: float, fd_error: float = math.nan) -> ExperimentResult:
    return ExperimentResult(
        experiment='noisy_partials', case='rastrigin2d', model=model, r_squared=r_squared,
        parameters=dict(fd_error_percent=fd_error),
    )


def test_if_experiment_result_rejects_r_squared_above_one():
    with pytest.raises(GemlpConfigurationException, match='R-squared cannot exceed 1'):
        ExperimentResult(experiment='validation', case='sin', model=JENN, r_squared=1.5)


def test_if_experiment_result_rejects_negative_runtime():
    with pytest.raises(GemlpConfigurationException, match='Runtime cannot be negative'):
        ExperimentResult(experiment='validation', case='sin', model=JENN, runtime_seconds=-1.0)


def test_if_experiment_result_allows_negative_r_squared():
    result = ExperimentResult(experiment='validation', case='sin', model=NN, r_squared=-0.69, parameters=dict(h=0.1))
    row = result.asdict()
    assert row['r_squared'] == -0.69
    assert row['h'] == 0.1
    assert 'curves' not in row


def test_if_interior_points_stay_off_domain_ends():
    f = TestFunctionFactory.get_function('sin')
    X = training_points(f, 3, 'interior')
    assert X.shape == (1, 3)
    assert X[0, 1] == pytest.approx(0.0, abs=1e-12)
    assert -np.pi < X[0, 0] < X[0, 2] < np.pi


def test_if_linspace_points_include_domain_ends():
    X = training_points(TestFunctionFactory.get_function('xsinx'), 4, 'linspace')
    np.testing.assert_allclose(X[0, [0, -1]], [-np.pi, np.pi])


def test_if_one_dimensional_plan_for_two_inputs_raises_exception():
    with pytest.raises(GemlpConfigurationException, match='only defined for one input'):
        training_points(TestFunctionFactory.get_function('rastrigin2d'), 10, 'linspace')


def test_if_unknown_sampling_plan_raises_exception():
    with pytest.raises(GemlpConfigurationException, match='Sampling plan must be one of'):
        ValidationCase('sin', 3, sampling='random')


def test_if_holdout_grid_is_disjoint_from_domain_boundary():
    f = TestFunctionFactory.get_function('rosenbrock2d')
    X = holdout_points(f, 50)
    assert X.shape == (2, 2500)
    assert np.all(X > -2.0) and np.all(X < 2.0)
    np.testing.assert_allclose(X[:, 0], [-1.96, -1.96])


def test_if_noise_curve_is_sorted_by_error():
    results = [_noisy_result(NN, 0.8), _noisy_result(JENN, 0.7, 12.0), _noisy_result(JENN, 0.95, 1.0)]
    assert noise_curve(results) == [(1.0, 0.95, 0.8), (12.0, 0.7, 0.8)]


def test_if_crossover_is_first_error_where_jenn_stops_beating_nn():
    results = [
        _noisy_result(NN, 0.8),
        _noisy_result(JENN, 0.99, 0.0),
        _noisy_result(JENN, 0.9, 4.0),
        _noisy_result(JENN, 0.8, 7.0),
        _noisy_result(JENN, 0.85, 9.0),
    ]
    assert crossover_error_percent(results) == 7.0


def test_if_crossover_is_nan_when_jenn_always_wins():
    assert math.isnan(crossover_error_percent([_noisy_result(NN, 0.5), _noisy_result(JENN, 0.9, 20.0)]))


def test_if_validation_suite_pairs_jenn_and_nn():
    config = ValidationConfig(
        cases=(ValidationCase('sin', 3, sampling='interior', hidden_layers=(4,), epochs=5, lambd=0.25),),
        test_points_1d=20,
    )
    results = run_validation_suite(config)
    assert [(result.case, result.model) for result in results] == [('sin', JENN), ('sin', NN)]
    for result in results:
        assert result.r_squared <= 1.0
        assert result.config['epochs'] == 5
        assert result.config['lambd'] == 0.25
        assert result.curves['J_train'].shape == (1, 1, 3)
        assert result.parameters == dict(architecture='1-4-1', num_samples=3)
        assert result.curves['Y_pred'].shape == (1, 20)


def test_if_noisy_study_reports_baseline_and_one_row_per_step():
    config = NoisyPartialsConfig(
        num_samples=10, steps=(1e-6, 0.2), hidden_layers=(4,),
        training=TrainingConfig(epochs=3), test_points_per_dim=5,
    )
    results = run_noisy_partials_study(config)
    assert [result.model for result in results] == [NN, JENN, JENN]
    assert results[1].parameters['h'] == 1e-6
    assert results[1].parameters['fd_error_percent'] < results[2].parameters['fd_error_percent']


def test_if_noisy_study_averages_over_initialization_seeds():
    config = NoisyPartialsConfig(
        num_samples=6, steps=(0.1,), hidden_layers=(3,), training=TrainingConfig(epochs=2),
        test_points_per_dim=4, repeats=2, seed=5,
    )
    scores = []

    def fit_and_record(*args):
        outcome = _fit_and_score(*args)
        scores.append(outcome[2])
        return outcome

    with mock.patch('gemlp.benchmarks.experiments._fit_and_score', side_effect=fit_and_record) as fit:
        results = run_noisy_partials_study(config)
    assert [call.args[2].seed for call in fit.call_args_list] == [5, 6, 5, 6]
    assert all(result.parameters['repeats'] == 2 for result in results)
    assert results[0].r_squared == pytest.approx(np.mean(scores[:2]))
    assert results[1].r_squared == pytest.approx(np.mean(scores[2:]))


def test_if_noisy_study_without_repeats_raises_exception():
    with pytest.raises(GemlpConfigurationException, match='at least one repeat'):
        run_noisy_partials_study(NoisyPartialsConfig(repeats=0))


def test_if_runtime_scaling_fits_line_through_timings():
    config = RuntimeScalingConfig(
        sample_sizes=(5, 10), hidden_layers=(3,), training=TrainingConfig(epochs=1), repeats=1,
    )
    scaling = run_runtime_scaling(config)
    assert scaling.sample_sizes == [5, 10]
    assert len(scaling.runtimes) == 2
    assert all(runtime >= 0 for runtime in scaling.runtimes)
    assert scaling.fit_r_squared == pytest.approx(1.0)


def test_if_single_epoch_on_single_sample_is_fast():
    config = RuntimeScalingConfig(
        sample_sizes=(1,), hidden_layers=(12, 12), training=TrainingConfig(epochs=1), repeats=1,
    )
    scaling = run_runtime_scaling(config)
    assert scaling.runtimes[0] < 1.0
    assert math.isnan(scaling.slope)


def test_if_runtime_scaling_without_epochs_raises_exception():
    with pytest.raises(GemlpConfigurationException, match='at least one repeat and one epoch'):
        run_runtime_scaling(RuntimeScalingConfig(training=TrainingConfig(epochs=0)))


def test_if_sample_size_study_trains_pair_per_size():
    config = SampleSizeConfig(sample_sizes=(5, 8), hidden_layers=(3,), training=TrainingConfig(epochs=2),
                              test_points_per_dim=4)
    results = run_sample_size_study(config)
    assert [result.parameters['num_samples'] for result in results] == [5, 5, 8, 8]
    assert [result.model for result in results] == [JENN, NN, JENN, NN]


@pytest.mark.slow
def test_if_jenn_outperforms_nn_on_validation_functions():
    results = run_validation_suite()
    by_case = {(result.case, result.model): result.r_squared for result in results}
    assert by_case[('sin', JENN)] >= 0.99
    assert by_case[('xsinx', JENN)] >= 0.95
    assert by_case[('rastrigin2d', JENN)] >= 0.95
    for case in ('sin', 'xsinx', 'rastrigin2d'):
        assert by_case[(case, JENN)] > by_case[(case, NN)]


@pytest.mark.slow
def test_if_benefit_of_partials_vanishes_with_growing_fd_error():
    results = run_noisy_partials_study()
    curve = noise_curve(results)
    _, first_jenn, nn = curve[0]
    _, last_jenn, _ = curve[-1]
    assert first_jenn > nn
    assert last_jenn <= nn
    assert 3.0 <= crossover_error_percent(results) <= 15.0


@pytest.mark.slow
def test_if_runtime_grows_linearly_with_sample_size():
    scaling = run_runtime_scaling()
    assert scaling.fit_r_squared >= 0.95
    ratios = np.array(scaling.runtimes[1:]) / np.array(scaling.runtimes[:-1])
    assert np.all((ratios >= 1.5) & (ratios <= 3.0))
