import numpy as np
import pytest

from gemlp.core.parameters import Architecture, Parameters, init_parameters
from gemlp.exceptions import GemlpConfigurationException, GemlpShapeException


def test_if_architecture_is_parsed_from_string():
    arch = Architecture.from_string('2,16,16,1')
    assert arch.layer_sizes == (2, 16, 16, 1)
    assert (arch.n_x, arch.n_y, arch.num_layers) == (2, 1, 4)
    assert arch.activations() == ['tanh', 'tanh', 'linear']
    assert str(arch) == '2-16-16-1'


@pytest.mark.parametrize('spec', ['3', '2,0,1', '2,-4,1'])
def test_if_invalid_architecture_raises_exception(spec):
    with pytest.raises(GemlpConfigurationException):
        Architecture.from_string(spec)


def test_if_non_numeric_architecture_raises_exception():
    with pytest.raises(GemlpConfigurationException, match='comma separated integers'):
        Architecture.from_string('2,x,1')


def test_if_init_parameters_creates_shapes_of_architecture():
    params = init_parameters(Architecture(layer_sizes=(3, 5, 2)), seed=0)
    assert [w.shape for w in params.weights] == [(5, 3), (2, 5)]
    assert [b.shape for b in params.biases] == [(5, 1), (2, 1)]
    assert params.size == 5 * 3 + 5 + 2 * 5 + 2
    assert all(np.all(b == 0) for b in params.biases)


def test_if_init_parameters_draws_within_fan_in_limit():
    params = init_parameters(Architecture(layer_sizes=(4, 50, 1)), seed=7)
    limit = np.sqrt(3.0 / 4)
    assert np.all(np.abs(params.weights[0]) <= limit)


def test_if_init_parameters_is_deterministic_per_seed():
    arch = Architecture(layer_sizes=(2, 8, 1))
    first = init_parameters(arch, seed=5)
    second = init_parameters(arch, seed=5)
    other = init_parameters(arch, seed=6)
    np.testing.assert_array_equal(first.to_vector(), second.to_vector())
    assert not np.array_equal(first.to_vector(), other.to_vector())


def test_if_vector_round_trip_restores_parameters():
    params = init_parameters(Architecture(layer_sizes=(2, 3, 1)), seed=1)
    vector = params.to_vector()
    assert vector.size == params.size
    restored = params.from_vector(vector)
    for original, copy in zip(params.weights + params.biases, restored.weights + restored.biases):
        np.testing.assert_array_equal(original, copy)


def test_if_inconsistent_parameter_shapes_raise_exception():
    with pytest.raises(GemlpShapeException, match='Inconsistent parameter shapes at layer 3'):
        Parameters(weights=(np.zeros((3, 2)), np.zeros((1, 4))), biases=(np.zeros(3), np.zeros(1)))


def test_if_parameters_not_matching_architecture_raise_exception():
    params = init_parameters(Architecture(layer_sizes=(2, 3, 1)))
    with pytest.raises(GemlpShapeException, match='do not match architecture'):
        params.check_architecture(Architecture(layer_sizes=(2, 4, 1)))


def test_if_init_weights_have_inverse_fan_in_variance():
    params = init_parameters(Architecture(layer_sizes=(400, 400, 1)), seed=11)
    assert np.var(params.weights[0]) == pytest.approx(1.0 / 400, rel=0.2)
    assert np.mean(params.weights[0]) == pytest.approx(0.0, abs=0.01)
