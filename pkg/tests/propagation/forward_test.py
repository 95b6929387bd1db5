import numpy as np
import pytest

from gemlp.core.parameters import Architecture, Parameters, init_parameters
from gemlp.exceptions import GemlpShapeException
from gemlp.propagation.forward import forward, forward_with_partials


def test_if_forward_computes_layer_by_layer_values():
    params = Parameters(
        weights=(np.array([[1.0, -1.0], [0.5, 2.0]]), np.array([[2.0, 1.0]])),
        biases=(np.array([0.1, -0.2]), np.array([0.3])),
    )
    X = np.array([[0.2, -1.0], [0.4, 0.5]])
    cache = forward(params, X)
    hidden = np.tanh(params.weights[0] @ X + params.biases[0])
    np.testing.assert_allclose(cache.A[1], hidden)
    np.testing.assert_allclose(cache.y_hat, params.weights[1] @ hidden + params.biases[1])
    assert not cache.has_partials


def test_if_forward_with_partials_keeps_identity_at_input_layer():
    params = init_parameters(Architecture(layer_sizes=(3, 4, 1)), seed=0)
    cache = forward_with_partials(params, np.zeros((3, 5)))
    assert cache.Aprime[0].shape == (3, 3, 5)
    np.testing.assert_array_equal(cache.Aprime[0][:, :, 2], np.eye(3))
    assert cache.j_hat.shape == (1, 3, 5)


def test_if_predicted_partials_match_finite_differences(rng):
    params = init_parameters(Architecture(layer_sizes=(2, 6, 4, 3)), seed=11)
    X = rng.normal(size=(2, 9))
    h = 1e-6
    j_hat = forward_with_partials(params, X).j_hat
    for j in range(2):
        step = np.zeros((2, 1))
        step[j] = h
        difference = (forward(params, X + step).y_hat - forward(params, X - step).y_hat) / (2 * h)
        np.testing.assert_allclose(j_hat[:, j, :], difference, atol=1e-8)


def test_if_partial_forward_does_not_change_values(rng):
    params = init_parameters(Architecture(layer_sizes=(2, 5, 2)), seed=2)
    X = rng.normal(size=(2, 4))
    np.testing.assert_array_equal(forward(params, X).y_hat, forward_with_partials(params, X).y_hat)


def test_if_input_with_wrong_rows_raises_exception():
    params = init_parameters(Architecture(layer_sizes=(2, 3, 1)))
    with pytest.raises(GemlpShapeException, match=r'Expected input of shape \(2, m\)'):
        forward(params, np.zeros((3, 4)))


def test_if_wrong_number_of_activation_kinds_raises_exception():
    params = init_parameters(Architecture(layer_sizes=(2, 3, 1)))
    with pytest.raises(GemlpShapeException, match='Expected 2 activation kinds'):
        forward(params, np.zeros((2, 1)), activations=['tanh'])


@pytest.mark.parametrize('seed', range(100))
def test_if_partials_match_finite_differences_for_random_parameters(seed):
    rng = np.random.default_rng(seed)
    hidden = tuple(rng.integers(2, 10, size=1 + seed % 3))
    params = init_parameters(Architecture(layer_sizes=(2, *hidden, 1)), seed=seed)
    X = rng.normal(size=(2, 3))
    j_hat = forward_with_partials(params, X).j_hat
    h = 1e-6
    for j in range(2):
        step = np.zeros((2, 1))
        step[j] = h
        difference = (forward(params, X + step).y_hat - forward(params, X - step).y_hat) / (2 * h)
        np.testing.assert_allclose(j_hat[:, j, :], difference, rtol=1e-5, atol=1e-8)


def test_if_batch_forward_equals_column_by_column_forward(rng):
    params = init_parameters(Architecture(layer_sizes=(2, 5, 5, 2)), seed=1)
    X = rng.normal(size=(2, 6))
    batch = forward_with_partials(params, X)
    for t in range(6):
        single = forward_with_partials(params, X[:, t:t + 1])
        np.testing.assert_allclose(batch.y_hat[:, t:t + 1], single.y_hat, rtol=1e-12, atol=1e-14)
        np.testing.assert_allclose(batch.j_hat[:, :, t:t + 1], single.j_hat, rtol=1e-12, atol=1e-14)


def test_if_linear_network_partials_are_weight_products():
    params = init_parameters(Architecture(layer_sizes=(3, 4, 2)), seed=5)
    X = np.random.default_rng(0).normal(size=(3, 7))
    cache = forward_with_partials(params, X, activations=['linear', 'linear'])
    product = params.weights[1] @ params.weights[0]
    for t in range(7):
        np.testing.assert_allclose(cache.j_hat[:, :, t], product, rtol=1e-14)
