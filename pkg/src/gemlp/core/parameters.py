from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from gemlp.exceptions import GemlpConfigurationException, GemlpShapeException
from gemlp.helper import string_to_int_list

logger = logging.getLogger(__name__)

HIDDEN_ACTIVATIONS: tuple[str, ...] = ('tanh',)
OUTPUT_ACTIVATIONS: tuple[str, ...] = ('linear',)


@dataclass(frozen=True)
class Architecture:
    """Layer sizes ``[n_x, n^[2], ..., n_y]`` and activation kinds."""
    layer_sizes: tuple[int, ...]
    hidden_activation: str = 'tanh'
    output_activation: str = 'linear'

    def __post_init__(self):
        object.__setattr__(self, 'layer_sizes', tuple(int(size) for size in self.layer_sizes))
        if len(self.layer_sizes) < 2:
            raise GemlpConfigurationException(
                f'Architecture needs at least an input and an output layer, got {list(self.layer_sizes)}'
            )
        if any(size < 1 for size in self.layer_sizes):
            raise GemlpConfigurationException(f'All layer sizes must be positive, got {list(self.layer_sizes)}')
        if self.hidden_activation not in HIDDEN_ACTIVATIONS:
            raise GemlpConfigurationException(f'Unsupported hidden activation: {self.hidden_activation}')
        if self.output_activation not in OUTPUT_ACTIVATIONS:
            raise GemlpConfigurationException(f'Unsupported output activation: {self.output_activation}')

    @classmethod
    def from_string(cls, spec: str) -> Architecture:
        """Create architecture from a string like ``'2,16,16,1'``."""
        return cls(layer_sizes=tuple(string_to_int_list(spec)))

    @property
    def n_x(self) -> int:
        return self.layer_sizes[0]

    @property
    def n_y(self) -> int:
        return self.layer_sizes[-1]

    @property
    def num_layers(self) -> int:
        """Number of layers L, input layer included."""
        return len(self.layer_sizes)

    def activations(self) -> list[str]:
        """Activation kind of every layer after the input layer."""
        return [self.hidden_activation] * (self.num_layers - 2) + [self.output_activation]

    def __str__(self) -> str:
        return '-'.join(str(size) for size in self.layer_sizes)


@dataclass(frozen=True)
class Parameters:
    """
    Weights and biases of layers 2..L.

    ``weights[i]`` has shape ``(n^[l], n^[l-1])`` and ``biases[i]`` has shape
    ``(n^[l], 1)`` for layer ``l = i + 2``.
    """
    weights: tuple[np.ndarray, ...]
    biases: tuple[np.ndarray, ...]
    layer_sizes: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        weights = tuple(np.asarray(w, dtype=float) for w in self.weights)
        biases = tuple(np.asarray(b, dtype=float).reshape(-1, 1) for b in self.biases)
        if len(weights) != len(biases) or not weights:
            raise GemlpShapeException('Parameters need the same, non-zero number of weight and bias arrays')
        sizes = [weights[0].shape[1]]
        for index, (w, b) in enumerate(zip(weights, biases)):
            if w.ndim != 2 or w.shape[1] != sizes[-1] or b.shape[0] != w.shape[0]:
                msg = f'Inconsistent parameter shapes at layer {index + 2}: W{w.shape}, b{b.shape}'
                logger.error(msg)
                raise GemlpShapeException(msg)
            sizes.append(w.shape[0])
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'biases', biases)
        object.__setattr__(self, 'layer_sizes', tuple(sizes))

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def size(self) -> int:
        """Total number of learnable parameters."""
        return sum(w.size + b.size for w, b in zip(self.weights, self.biases))

    def is_finite(self) -> bool:
        return all(np.all(np.isfinite(w)) and np.all(np.isfinite(b)) for w, b in zip(self.weights, self.biases))

    def check_architecture(self, arch: Architecture) -> None:
        if self.layer_sizes != arch.layer_sizes:
            msg = f'Parameters for {list(self.layer_sizes)} do not match architecture {list(arch.layer_sizes)}'
            logger.error(msg)
            raise GemlpShapeException(msg)

    def to_vector(self) -> np.ndarray:
        """Flatten parameters into one vector, layer by layer, weights before biases."""
        chunks = []
        for w, b in zip(self.weights, self.biases):
            chunks.extend([w.ravel(), b.ravel()])
        return np.concatenate(chunks)

    def from_vector(self, vector: np.ndarray) -> Parameters:
        """Return parameters with the same shapes filled from ``vector``."""
        weights, biases = [], []
        offset = 0
        for w, b in zip(self.weights, self.biases):
            weights.append(vector[offset:offset + w.size].reshape(w.shape))
            offset += w.size
            biases.append(vector[offset:offset + b.size].reshape(b.shape))
            offset += b.size
        return Parameters(weights=tuple(weights), biases=tuple(biases))


def init_parameters(arch: Architecture, seed: int = 0) -> Parameters:
    """
    Initialize network parameters.

    Weights are drawn uniformly from ``[-a, a]`` with ``a = sqrt(3 / n^[l-1])``,
    giving zero mean and variance ``1 / n^[l-1]``; biases are zero.

    :param arch: network architecture
    :param seed: seed of the random generator
    :return: initial parameters
    """
    rng = np.random.default_rng(seed)
    weights, biases = [], []
    for fan_in, fan_out in zip(arch.layer_sizes[:-1], arch.layer_sizes[1:]):
        limit = np.sqrt(3.0 / fan_in)
        weights.append(rng.uniform(-limit, limit, size=(fan_out, fan_in)))
        biases.append(np.zeros((fan_out, 1)))
    logger.debug('Initialized parameters for architecture %s with seed %s', arch, seed)
    return Parameters(weights=tuple(weights), biases=tuple(biases))
