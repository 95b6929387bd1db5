from gemlp.core.dataset import Dataset
from gemlp.core.model import Model
from gemlp.core.normalization import (
    NormalizationStats,
    compute_normalization,
    denormalize_prediction,
    normalize_dataset,
)
from gemlp.core.parameters import Architecture, Parameters, init_parameters
