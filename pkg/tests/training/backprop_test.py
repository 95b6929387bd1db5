import numpy as np
import pytest

from gemlp.core.dataset import Dataset
from gemlp.core.parameters import Architecture, Parameters, init_parameters
from gemlp.exceptions import GemlpNumericalException
from gemlp.propagation.forward import forward, forward_with_partials
from gemlp.training.backprop import backward
from gemlp.training.gradient_check import numerical_gradient, scaled_error


@pytest.mark.parametrize('lambd', [0.0, 0.1])
def test_if_gradients_match_finite_differences_of_cost(small_network, lambd):
    _, params, data = small_network
    analytic = backward(params, forward_with_partials(params, data.X), data, lambd).to_vector()
    numerical = numerical_gradient(params, data, lambd)
    np.testing.assert_allclose(analytic, numerical, rtol=1e-6, atol=1e-8)


def test_if_gradients_without_jacobian_match_finite_differences(random_dataset):
    params = init_parameters(Architecture(layer_sizes=(3, 4, 1)), seed=8)
    data = random_dataset(3, 1, 6, with_jacobian=False)
    analytic = backward(params, forward(params, data.X), data).to_vector()
    np.testing.assert_allclose(analytic, numerical_gradient(params, data), rtol=1e-6, atol=1e-8)


def test_if_zero_weights_give_pure_regularization_gradient(small_network):
    _, params, data = small_network
    data = data.replace(beta=0.0, gamma=0.0)
    grads = backward(params, forward_with_partials(params, data.X), data, lambd=0.3)
    for W, dW, db in zip(params.weights, grads.dW, grads.db):
        np.testing.assert_array_equal(dW, (0.3 / data.m) * W)
        np.testing.assert_array_equal(db, np.zeros_like(db))


def test_if_zero_gamma_makes_gradients_independent_of_jacobian(small_network):
    _, params, data = small_network
    first = data.replace(gamma=0.0)
    second = data.replace(J=-7.0 * data.J, gamma=0.0)
    cache = forward_with_partials(params, data.X)
    np.testing.assert_array_equal(
        backward(params, cache, first).to_vector(),
        backward(params, cache, second).to_vector(),
    )


def test_if_single_linear_layer_gives_least_squares_gradient(rng):
    arch = Architecture(layer_sizes=(2, 1))
    params = init_parameters(arch, seed=1)
    data = Dataset(X=rng.normal(size=(2, 5)), Y=rng.normal(size=(1, 5)))
    cache = forward(params, data.X, arch.activations())
    grads = backward(params, cache, data)
    residual = cache.y_hat - data.Y
    np.testing.assert_allclose(grads.dW[0], residual @ data.X.T / 5, rtol=1e-14, atol=1e-15)
    np.testing.assert_allclose(grads.db[0], residual.sum(axis=1, keepdims=True) / 5, rtol=1e-14, atol=1e-15)


def test_if_scaling_weights_scales_gradients(small_network):
    _, params, data = small_network
    cache = forward_with_partials(params, data.X)
    base = backward(params, cache, data).to_vector()
    scaled = backward(params, cache, data.replace(beta=4.0 * data.beta, gamma=4.0 * data.gamma)).to_vector()
    np.testing.assert_allclose(scaled, 4.0 * base, rtol=1e-12)


def test_if_non_finite_gradient_raises_exception_with_layer():
    params = Parameters(weights=(np.array([[1e308]]), np.array([[1e308]])), biases=(np.zeros(1), np.zeros(1)))
    data = Dataset(X=np.array([[1.0]]), Y=np.array([[0.0]]), beta=10.0)
    cache = forward(params, data.X)
    with np.errstate(over='ignore', invalid='ignore'):
        with pytest.raises(GemlpNumericalException, match='at layer 3') as excinfo:
            backward(params, cache, data)
    assert excinfo.value.layer == 3


_ARCHITECTURES = [(1, 4, 1), (2, 8, 8, 2), (3, 16, 16, 16, 1)]


@pytest.mark.parametrize('seed', range(50))
def test_if_gradients_match_finite_differences_for_random_configurations(seed):
    rng = np.random.default_rng(seed)
    layer_sizes = _ARCHITECTURES[seed % 3]
    n_x, n_y = layer_sizes[0], layer_sizes[-1]
    with_jacobian = seed % 2 == 0
    data = Dataset(
        X=rng.normal(size=(n_x, 4)),
        Y=rng.normal(size=(n_y, 4)),
        J=rng.normal(size=(n_y, n_x, 4)) if with_jacobian else None,
    )
    params = init_parameters(Architecture(layer_sizes=layer_sizes), seed=seed)
    lambd = 0.1 if seed % 4 < 2 else 0.0
    analytic = backward(params, forward_with_partials(params, data.X), data, lambd).to_vector()
    numerical = numerical_gradient(params, data, lambd)
    assert np.max(scaled_error(analytic, numerical)) < 1e-6
