from __future__ import annotations

import abc
import logging
from typing import Type

import numpy as np

logger = logging.getLogger(__name__)


class ActivationAbstract(abc.ABC):
    """Smooth activation function with its first and second derivatives."""

    def __repr__(self):
        return f'{self.__class__.__name__}()'

    @abc.abstractmethod
    def evaluate(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Return ``g(z)``, ``g'(z)`` and ``g''(z)``.

        :param z: linear activation input
        """


class Tanh(ActivationAbstract):

    def evaluate(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        g = np.tanh(z)
        g_prime = 1.0 - g * g
        g_double_prime = -2.0 * g * g_prime
        return g, g_prime, g_double_prime


class Linear(ActivationAbstract):

    def evaluate(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        z = np.asarray(z, dtype=float)
        return z, np.ones_like(z), np.zeros_like(z)


class ActivationFactory:
    _activations: dict[str, Type[ActivationAbstract]] = {}

    @classmethod
    def register_activation_class(cls, name: str, klass: Type[ActivationAbstract]) -> None:
        if name not in cls._activations:
            cls._activations[name] = klass

    @classmethod
    def get_activation(cls, name: str) -> ActivationAbstract:
        """Return activation instance."""
        try:
            return cls._activations[name]()
        except KeyError as e:
            logger.error('There is not activation with name: %s', name)
            raise KeyError(f'Activation "{name}" does not exist') from e


ActivationFactory.register_activation_class('tanh', Tanh)
ActivationFactory.register_activation_class('linear', Linear)


def activation(kind: str, z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Evaluate activation ``kind`` at ``z``; return ``(g, g', g'')``."""
    return ActivationFactory.get_activation(kind).evaluate(np.asarray(z, dtype=float))
