from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from marshmallow import Schema, ValidationError, fields, validate

from gemlp.exceptions import GemlpConfigurationException, GemlpException
from gemlp.helper import safe_load_yaml

logger = logging.getLogger(__name__)

OPTIMIZERS: tuple[str, ...] = ('gd', 'adam')


@dataclass
class TrainingConfig:
    """Hyperparameters of a training run."""
    alpha: float = 0.05  # learning rate
    lambd: float = 0.0  # regularization weight
    epochs: int = 1000
    batch_size: int | None = None  # None means full batch
    optimizer: str = 'adam'
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    seed: int = 0
    gamma_scale: float | np.ndarray = field(default=1.0, repr=False)

    def __post_init__(self):
        if isinstance(self.batch_size, str):
            self.batch_size = None if self.batch_size == 'full' else int(self.batch_size)
        errors = []
        if not self.alpha > 0:
            errors.append(f'alpha must be positive, got {self.alpha}')
        if not self.lambd >= 0:
            errors.append(f'lambd must be non-negative, got {self.lambd}')
        if self.epochs < 0:
            errors.append(f'epochs must not be negative, got {self.epochs}')
        if self.batch_size is not None and self.batch_size < 1:
            errors.append(f'batch_size must be positive or "full", got {self.batch_size}')
        if self.optimizer not in OPTIMIZERS:
            errors.append(f'optimizer must be one of {OPTIMIZERS}, got {self.optimizer!r}')
        if not (0 <= self.adam_beta1 < 1 and 0 <= self.adam_beta2 < 1):
            errors.append('adam_beta1 and adam_beta2 must lie in [0, 1)')
        if not self.adam_eps > 0:
            errors.append(f'adam_eps must be positive, got {self.adam_eps}')
        if self.seed < 0:
            errors.append(f'seed must be unsigned, got {self.seed}')
        if np.any(np.asarray(self.gamma_scale) < 0):
            errors.append('gamma_scale must be non-negative')
        if errors:
            msg = '; '.join(errors)
            logger.error('Invalid training configuration: %s', msg)
            raise GemlpConfigurationException(msg)

    @classmethod
    def load_from_yaml(cls, filename: str | Path, **overrides) -> TrainingConfig:
        """
        Load training configuration from yaml file.

        :param filename: path to yaml file
        :param overrides: values which take precedence over the file content
        """
        try:
            data: dict = TrainingConfigSchema().load(safe_load_yaml(Path(filename)) or {})
        except ValidationError as e:
            logger.error('When loading %s received error: %s', filename, e)
            raise GemlpConfigurationException(f'Cannot load training configuration from {filename}') from e
        except GemlpException as e:
            logger.error('When loading %s received error: %s', filename, e)
            raise GemlpConfigurationException(f'Cannot load training configuration from {filename}: {e}') from e
        data.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**data)

    def replace(self, **changes) -> TrainingConfig:
        values = dict(self.__dict__)
        values.update(changes)
        return TrainingConfig(**values)

    def asdict(self) -> dict:
        """Return dictionary which can be written to a report."""
        return dict(
            alpha=self.alpha,
            lambd=self.lambd,
            epochs=self.epochs,
            batch_size='full' if self.batch_size is None else self.batch_size,
            optimizer=self.optimizer,
            adam_beta1=self.adam_beta1,
            adam_beta2=self.adam_beta2,
            adam_eps=self.adam_eps,
            seed=self.seed,
            gamma_scale=float(self.gamma_scale) if np.isscalar(self.gamma_scale) else 'array',
        )


@dataclass(frozen=True)
class PolishConfig:
    """Radial-basis weighting of small slopes: ``gamma = 1 + eta * exp(-(epsilon * dy/dx)^2)``."""
    eta: float = 1000.0
    epsilon: float = 0.1

    def __post_init__(self):
        if not self.eta >= 0:
            raise GemlpConfigurationException(f'eta must be non-negative, got {self.eta}')
        if not self.epsilon > 0:
            raise GemlpConfigurationException(f'epsilon must be positive, got {self.epsilon}')


def _validate_batch_size(value) -> bool:
    if value == 'full' or (isinstance(value, int) and not isinstance(value, bool) and value > 0):
        return True
    raise ValidationError('batch_size must be a positive integer or "full"')


# Using marshmallow schema definition for validation of data read from yaml
class TrainingConfigSchema(Schema):
    alpha = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    lambd = fields.Float(validate=validate.Range(min=0))
    epochs = fields.Int(validate=validate.Range(min=0))
    batch_size = fields.Raw(validate=_validate_batch_size)
    optimizer = fields.Str(validate=validate.OneOf(OPTIMIZERS))
    adam_beta1 = fields.Float(validate=validate.Range(min=0, max=1, max_inclusive=False))
    adam_beta2 = fields.Float(validate=validate.Range(min=0, max=1, max_inclusive=False))
    adam_eps = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    seed = fields.Int(validate=validate.Range(min=0))
    gamma_scale = fields.Float(validate=validate.Range(min=0))
