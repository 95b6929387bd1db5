import numpy as np
import pytest

from gemlp.core.dataset import Dataset
from gemlp.core.parameters import Parameters
from gemlp.exceptions import GemlpDatasetException
from gemlp.propagation.forward import ForwardCache
from gemlp.training.cost import cost, loss, regularization


def _cache(y_hat: np.ndarray, j_hat: np.ndarray | None = None) -> ForwardCache:
    X = np.zeros((1, y_hat.shape[1]))
    cache = ForwardCache(activations=['linear'], A=[X, y_hat], Z=[X, y_hat])
    if j_hat is not None:
        identity = np.ones((1, 1, y_hat.shape[1]))
        cache.Aprime = [identity, j_hat]
        cache.Zprime = [identity, j_hat]
    return cache


def test_if_loss_adds_value_and_partial_terms():
    data = Dataset(X=np.zeros((1, 1)), Y=np.zeros((1, 1)), J=np.zeros((1, 1, 1)))
    cache = _cache(np.array([[2.0]]), np.array([[[3.0]]]))
    assert loss(cache, data) == pytest.approx(6.5)


def test_if_loss_of_perfect_prediction_is_zero(random_dataset):
    data = random_dataset(1, 1, 4)
    assert loss(_cache(data.Y.copy(), data.J.copy()), data) == 0.0


def test_if_loss_is_averaged_over_examples_and_weighted_by_beta():
    data = Dataset(X=np.zeros((1, 2)), Y=np.zeros((1, 2)), beta=np.array([[1.0, 3.0]]))
    cache = _cache(np.array([[1.0, 1.0]]))
    assert loss(cache, data) == pytest.approx((0.5 * 1.0 + 0.5 * 3.0) / 2)


def test_if_zero_gamma_ignores_jacobian_content():
    Y = np.array([[1.0, 2.0]])
    first = Dataset(X=np.zeros((1, 2)), Y=Y, J=np.array([[[5.0, -3.0]]]), gamma=0.0)
    second = Dataset(X=np.zeros((1, 2)), Y=Y, J=np.array([[[1e6, np.pi]]]), gamma=0.0)
    cache = _cache(np.array([[0.5, 2.5]]), np.zeros((1, 1, 2)))
    assert loss(cache, first) == loss(cache, second)


def test_if_nonzero_gamma_without_jacobian_raises_exception():
    data = Dataset(X=np.zeros((1, 1)), Y=np.zeros((1, 1)), gamma=1.0)
    with pytest.raises(GemlpDatasetException, match='requires gamma = 0'):
        loss(_cache(np.zeros((1, 1))), data)


def test_if_regularization_is_added_to_loss():
    params = Parameters(weights=(np.array([[2.0]]),), biases=(np.zeros(1),))
    data = Dataset(X=np.zeros((1, 1)), Y=np.zeros((1, 1)))
    cache = _cache(np.zeros((1, 1)))
    assert cost(params, cache, data, lambd=1.0) == pytest.approx(2.0)
    assert cost(params, cache, data, lambd=0.0) == loss(cache, data)


def test_if_cost_does_not_decrease_with_lambda(small_network):
    from gemlp.propagation.forward import forward_with_partials

    _, params, data = small_network
    cache = forward_with_partials(params, data.X)
    costs = [cost(params, cache, data, lambd) for lambd in (0.0, 0.01, 0.1, 1.0)]
    assert costs == sorted(costs)
    assert regularization(params, 0.0, data.m) == 0.0
