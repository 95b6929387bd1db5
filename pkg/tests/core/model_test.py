import pytest

from gemlp.core.model import Model
from gemlp.core.normalization import NormalizationStats
from gemlp.core.parameters import Architecture, init_parameters
from gemlp.exceptions import GemlpShapeException


def test_if_model_freezes_its_parameters():
    arch = Architecture(layer_sizes=(2, 3, 1))
    model = Model(architecture=arch, parameters=init_parameters(arch), norm=NormalizationStats.identity(2, 1))
    with pytest.raises(ValueError):
        model.parameters.weights[0][0, 0] = 1.0
    assert (model.n_x, model.n_y) == (2, 1)


def test_if_model_with_mismatched_normalization_raises_exception():
    arch = Architecture(layer_sizes=(2, 3, 1))
    with pytest.raises(GemlpShapeException, match='Normalization stats'):
        Model(architecture=arch, parameters=init_parameters(arch), norm=NormalizationStats.identity(1, 1))


def test_if_model_with_mismatched_parameters_raises_exception():
    arch = Architecture(layer_sizes=(2, 3, 1))
    other = init_parameters(Architecture(layer_sizes=(2, 4, 1)))
    with pytest.raises(GemlpShapeException):
        Model(architecture=arch, parameters=other, norm=NormalizationStats.identity(2, 1))
