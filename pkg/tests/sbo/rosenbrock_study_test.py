import numpy as np
import pytest

from gemlp.sbo.optimizer import MinimizeSettings
from gemlp.sbo.rosenbrock_study import (
    JENN,
    JENN_POLISHED,
    NN,
    TRUE,
    RosenbrockStudyConfig,
    run_rosenbrock_study,
)
from gemlp.training.config import TrainingConfig


def test_if_study_minimizes_true_function_and_three_surrogates():
    config = RosenbrockStudyConfig(
        grid_points=3,
        lhs_samples=5,
        hidden_layers=(4,),
        training=TrainingConfig(epochs=3),
        polish_epochs=2,
        settings=MinimizeSettings(max_iter=10),
        num_starts=2,
    )
    study = run_rosenbrock_study(config)
    assert list(study.traces) == [TRUE, NN, JENN, JENN_POLISHED]
    assert list(study.models) == [NN, JENN, JENN_POLISHED]
    assert set(study.dispersion) == set(study.traces)
    for trace in study.traces.values():
        iterates = np.array(trace.iterates)
        assert np.all(np.abs(iterates) <= 2.0)
        np.testing.assert_array_equal(trace.iterates[0], [-1.5, -1.0])
    rows = study.rows()
    assert [row['objective'] for row in rows] == [TRUE, NN, JENN, JENN_POLISHED]
    assert all('mean_distance' in row for row in rows)
    assert study.dispersion[TRUE].final_points.shape == (2, 2)


def test_if_dispersion_is_skipped_without_random_starts():
    config = RosenbrockStudyConfig(
        grid_points=2, lhs_samples=3, hidden_layers=(3,), training=TrainingConfig(epochs=1), polish_epochs=1,
        settings=MinimizeSettings(max_iter=2), num_starts=0,
    )
    study = run_rosenbrock_study(config)
    assert study.dispersion == {}
    assert 'mean_distance' not in study.rows()[0]


@pytest.mark.slow
def test_if_polished_surrogate_recovers_true_optimum():
    study = run_rosenbrock_study()
    distances = study.distances
    assert distances[TRUE] < 1e-3
    assert distances[JENN_POLISHED] < 0.1
    assert distances[JENN_POLISHED] < distances[JENN]
    assert distances[JENN_POLISHED] < distances[NN]
