from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from gemlp.core.dataset import Dataset
from gemlp.core.normalization import compute_normalization, normalize_dataset
from gemlp.core.parameters import Architecture, init_parameters


def pytest_addoption(parser: pytest.Parser):
    parser.addoption(
        '--run-slow',
        dest='run_slow',
        action='store_true',
        help='run long experiments marked as slow',
    )


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]):
    if config.getoption('run_slow'):
        return
    skip_slow = pytest.mark.skip(reason='slow experiment, use --run-slow to run it')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def resources(request: pytest.FixtureRequest) -> Path:
    """Return path to `data` folder"""
    return Path(request.module.__file__).parent.joinpath('data')


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def random_dataset(rng):
    """Return factory of datasets with random values; partials are unrelated to the values."""

    def _make(n_x: int, n_y: int, m: int, with_jacobian: bool = True) -> Dataset:
        return Dataset(
            X=rng.normal(size=(n_x, m)),
            Y=rng.normal(size=(n_y, m)),
            J=rng.normal(size=(n_y, n_x, m)) if with_jacobian else None,
        )

    return _make


@pytest.fixture
def sin_dataset() -> Dataset:
    """Three samples of sin(x) with exact slopes."""
    x = np.array([[-2.9, 0.0, 2.9]])
    return Dataset(X=x, Y=np.sin(x), J=np.cos(x).reshape(1, 1, -1))


@pytest.fixture
def small_network(random_dataset):
    """Random 2-5-3-2 network with normalized random data carrying partials."""
    arch = Architecture(layer_sizes=(2, 5, 3, 2))
    data = random_dataset(2, 2, 7)
    return arch, init_parameters(arch, seed=3), normalize_dataset(data, compute_normalization(data))
