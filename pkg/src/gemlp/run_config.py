from __future__ import annotations

import argparse
import logging
import os
from dataclasses import dataclass, field, fields

from gemlp.constants import DEFAULT_OUTPUT_DIR, OUTPUT_DIR_ENV_VAR
from gemlp.exceptions import GemlpConfigurationException
from gemlp.helper import normalize_filename, string_to_float_list
from gemlp.training.config import PolishConfig, TrainingConfig

logger = logging.getLogger(__name__)

COMMANDS: tuple[str, ...] = ('train', 'predict', 'evaluate', 'bench', 'sbo')
EXPERIMENTS: tuple[str, ...] = ('validation', 'noisy', 'runtime', 'rosenbrock', 'samples')


@dataclass
class RunConfig:
    """Store configuration of a command line run."""
    command: str
    output_dir: str = DEFAULT_OUTPUT_DIR
    data_path: str = ''  # training or reference dataset
    input_path: str = ''  # inputs to predict
    model_path: str = ''
    predictions_path: str = ''
    architecture: str = ''  # e.g. '2,16,16,1'; empty means default hidden layers
    training: TrainingConfig = field(default_factory=TrainingConfig)
    polish: PolishConfig | None = None
    polish_epochs: int = 0
    beta: str | None = None  # scalar, per-output list or CSV path
    gamma: str | None = None
    experiment: str = ''
    x0: list[float] = field(default_factory=list)
    bounds: list[list[float]] = field(default_factory=list)
    seed: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise GemlpConfigurationException(f'Unknown command {self.command!r}, expected one of {COMMANDS}')
        if self.command == 'bench' and self.experiment not in EXPERIMENTS:
            raise GemlpConfigurationException(
                f'Unknown experiment {self.experiment!r}, valid names: {", ".join(EXPERIMENTS)}'
            )
        for path in self.required_files():
            if not os.path.isfile(path):
                msg = f'File does not exist: {path}'
                logger.error(msg)
                raise GemlpConfigurationException(msg)
        if self.polish_epochs < 0:
            raise GemlpConfigurationException(f'polish_epochs must not be negative, got {self.polish_epochs}')

    def required_files(self) -> list[str]:
        """Input files which must exist for the command."""
        required = {
            'train': [self.data_path],
            'predict': [self.model_path, self.input_path],
            'evaluate': [self.model_path, self.data_path],
            'sbo': [self.model_path],
            'bench': [],
        }[self.command]
        for spec in (self.beta, self.gamma):
            if spec and spec.lower().endswith('.csv'):
                required.append(spec)
        return required

    @property
    def default_model_path(self) -> str:
        return self.model_path or os.path.join(self.output_dir, 'model.yaml')

    @classmethod
    def create(cls, args: argparse.Namespace) -> RunConfig:
        """Create new instance from parsed command line arguments."""
        output_dir: str = normalize_filename(
            args.output_dir or os.environ.get(OUTPUT_DIR_ENV_VAR, '') or DEFAULT_OUTPUT_DIR
        )
        training_overrides = {
            item.name: getattr(args, item.name)
            for item in fields(TrainingConfig)
            if getattr(args, item.name, None) is not None
        }
        config_file: str | None = getattr(args, 'config', None)
        if config_file:
            if not os.path.isfile(config_file):
                raise GemlpConfigurationException(f'File does not exist: {config_file}')
            training = TrainingConfig.load_from_yaml(config_file, **training_overrides)
        else:
            training = TrainingConfig(**training_overrides)

        polish = None
        polish_epochs: int = getattr(args, 'polish_epochs', None) or 0
        if getattr(args, 'polish_eta', None) is not None or polish_epochs:
            polish = PolishConfig(
                eta=args.polish_eta if args.polish_eta is not None else PolishConfig.eta,
                epsilon=args.polish_epsilon if args.polish_epsilon is not None else PolishConfig.epsilon,
            )
            polish_epochs = polish_epochs or training.epochs

        bounds = [string_to_float_list(spec) for spec in getattr(args, 'bounds', None) or []]
        if any(len(pair) != 2 for pair in bounds):
            raise GemlpConfigurationException('Every --bounds value must be a "lo,hi" pair')

        return cls(
            command=args.command,
            output_dir=output_dir,
            data_path=getattr(args, 'data', None) or '',
            input_path=getattr(args, 'inputs', None) or '',
            model_path=getattr(args, 'model', None) or '',
            predictions_path=getattr(args, 'predictions', None) or '',
            architecture=getattr(args, 'architecture', None) or '',
            training=training,
            polish=polish,
            polish_epochs=polish_epochs,
            beta=getattr(args, 'beta', None),
            gamma=getattr(args, 'gamma', None),
            experiment=getattr(args, 'experiment', None) or '',
            x0=string_to_float_list(getattr(args, 'x0', None) or []),
            bounds=bounds,
            seed=training.seed,
        )
