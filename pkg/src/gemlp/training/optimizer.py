from __future__ import annotations

import abc
import logging
from dataclasses import dataclass, field
from typing import Type

import numpy as np

from gemlp.core.parameters import Parameters
from gemlp.exceptions import GemlpShapeException
from gemlp.training.backprop import Gradients
from gemlp.training.config import TrainingConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OptimizerState:
    """Step counter and moment estimates carried between updates."""
    step: int = 0
    first_moment: tuple[np.ndarray, ...] = field(default=(), repr=False)
    second_moment: tuple[np.ndarray, ...] = field(default=(), repr=False)


class OptimizerAbstract(abc.ABC):

    def __repr__(self):
        return f'{self.__class__.__name__}()'

    @abc.abstractmethod
    def update(
        self, theta: np.ndarray, gradient: np.ndarray, state: OptimizerState, config: TrainingConfig
    ) -> tuple[np.ndarray, OptimizerState]:
        """
        Return updated copy of flat parameter vector and new optimizer state.

        :param theta: flattened parameters
        :param gradient: flattened gradients
        :param state: state returned by the previous update
        :param config: training configuration
        """


class GradientDescent(OptimizerAbstract):

    def update(self, theta, gradient, state, config):
        return theta - config.alpha * gradient, OptimizerState(step=state.step + 1)


class Adam(OptimizerAbstract):
    """Adaptive moment estimation with bias-corrected moments."""

    def update(self, theta, gradient, state, config):
        if state.first_moment:
            first, second = state.first_moment[0], state.second_moment[0]
        else:
            first, second = np.zeros_like(theta), np.zeros_like(theta)
        step = state.step + 1
        first = config.adam_beta1 * first + (1.0 - config.adam_beta1) * gradient
        second = config.adam_beta2 * second + (1.0 - config.adam_beta2) * (gradient * gradient)
        first_hat = first / (1.0 - config.adam_beta1 ** step)
        second_hat = second / (1.0 - config.adam_beta2 ** step)
        theta = theta - config.alpha * first_hat / (np.sqrt(second_hat) + config.adam_eps)
        return theta, OptimizerState(step=step, first_moment=(first,), second_moment=(second,))


class OptimizerFactory:
    _optimizers: dict[str, Type[OptimizerAbstract]] = {}

    @classmethod
    def register_optimizer_class(cls, name: str, klass: Type[OptimizerAbstract]) -> None:
        if name not in cls._optimizers:
            cls._optimizers[name] = klass

    @classmethod
    def get_optimizer(cls, name: str) -> OptimizerAbstract:
        """
        Return optimizer instance.

        :param name: optimizer name
        """
        try:
            return cls._optimizers[name]()
        except KeyError as e:
            logger.exception('There is not optimizer with name: %s', name)
            raise KeyError(f'Optimizer "{name}" does not exist') from e


OptimizerFactory.register_optimizer_class('gd', GradientDescent)
OptimizerFactory.register_optimizer_class('adam', Adam)


def update_parameters(
    params: Parameters, grads: Gradients, state: OptimizerState, config: TrainingConfig
) -> tuple[Parameters, OptimizerState]:
    """
    Apply one optimizer step; inputs are left unchanged.

    :param params: current parameters
    :param grads: gradients matching ``params``
    :param state: optimizer state, ``OptimizerState()`` before the first step
    :param config: training configuration selecting the optimizer
    :return: updated parameters and optimizer state
    """
    for index, (W, b, dW, db) in enumerate(zip(params.weights, params.biases, grads.dW, grads.db)):
        if W.shape != dW.shape or b.shape != db.shape:
            msg = f'Gradient shapes do not match parameters at layer {index + 2}'
            logger.error(msg)
            raise GemlpShapeException(msg)
    if len(grads.dW) != len(params) or len(grads.db) != len(params):
        raise GemlpShapeException(f'Expected gradients for {len(params)} layers, got {len(grads.dW)}')
    optimizer = OptimizerFactory.get_optimizer(config.optimizer)
    theta, state = optimizer.update(params.to_vector(), grads.to_vector(), state, config)
    return params.from_vector(theta), state
