from __future__ import annotations

import argparse
import logging
import sys

from gemlp import __version__
from gemlp.exceptions import (
    GemlpConfigurationException,
    GemlpDataFileException,
    GemlpException,
    GemlpModelFileException,
)
from gemlp.log import configure_logging
from gemlp.run_config import EXPERIMENTS, RunConfig
from gemlp.scripts.commands import COMMAND_HANDLERS
from gemlp.training.config import OPTIMIZERS

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '-O', '--outdir',
        dest='output_dir',
        metavar='path',
        help='output directory for logs and artifacts (default: $GEMLP_OUTPUT_DIR or gemlp-out)',
    )
    parser.add_argument(
        '--log-level',
        dest='log_level',
        default='INFO',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='log level (default: %(default)s)',
    )
    parser.add_argument(
        '--log-file',
        dest='log_file',
        metavar='path',
        help='log file (default: <outdir>/gemlp.log)',
    )


def _add_training_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group('training')
    group.add_argument('--config', metavar='path', help='YAML file with training configuration')
    group.add_argument('--architecture', metavar='sizes', help='layer sizes, e.g. "2,16,16,1"')
    group.add_argument('--alpha', type=float, help='learning rate')
    group.add_argument('--lambd', '--lambda', dest='lambd', type=float, help='regularization weight')
    group.add_argument('--epochs', type=int, help='number of epochs')
    group.add_argument('--batch-size', dest='batch_size', help='mini-batch size or "full"')
    group.add_argument('--optimizer', choices=OPTIMIZERS, help='parameter update rule')
    group.add_argument('--adam-beta1', dest='adam_beta1', type=float)
    group.add_argument('--adam-beta2', dest='adam_beta2', type=float)
    group.add_argument('--adam-eps', dest='adam_eps', type=float)
    group.add_argument('--seed', type=int, help='seed of parameter initialization and batching')
    group.add_argument('--beta', metavar='weights', help='value weights: scalar, one per output or CSV file')
    group.add_argument('--gamma', metavar='weights', help='partial weights: scalar, one per output or CSV file')
    group.add_argument('--polish-eta', dest='polish_eta', type=float, help='enable polishing with this amplification')
    group.add_argument('--polish-epsilon', dest='polish_epsilon', type=float, help='inverse width of polishing')
    group.add_argument('--polish-epochs', dest='polish_epochs', type=int, help='epochs of polishing')


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='gemlp',
        description='Train neural networks on function values and partial derivatives.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    train_parser = subparsers.add_parser('train', help='train model on CSV dataset')
    train_parser.add_argument('data', help='training dataset (CSV)')
    train_parser.add_argument('--model', metavar='path', help='model output file (default: <outdir>/model.yaml)')
    _add_training_arguments(train_parser)
    _add_common_arguments(train_parser)

    predict_parser = subparsers.add_parser('predict', help='predict outputs and partials')
    predict_parser.add_argument('model', help='model file')
    predict_parser.add_argument('inputs', help='CSV file with x1..xn columns')
    predict_parser.add_argument('--predictions', metavar='path',
                                help='output file (default: <outdir>/predictions.csv)')
    _add_common_arguments(predict_parser)

    evaluate_parser = subparsers.add_parser('evaluate', help='R-squared of values and partials on a dataset')
    evaluate_parser.add_argument('model', help='model file')
    evaluate_parser.add_argument('data', help='reference dataset (CSV)')
    _add_common_arguments(evaluate_parser)

    bench_parser = subparsers.add_parser('bench', help='run benchmark experiment')
    bench_parser.add_argument('experiment', choices=EXPERIMENTS, help='experiment name')
    bench_parser.add_argument('--seed', type=int, help='seed of sampling and training')
    _add_common_arguments(bench_parser)

    sbo_parser = subparsers.add_parser('sbo', help='minimize a single-output model inside a box')
    sbo_parser.add_argument('model', help='model file')
    sbo_parser.add_argument('--bounds', action='append', metavar='lo,hi', required=True,
                            help='bounds of one input; repeat for every input')
    sbo_parser.add_argument('--x0', metavar='x1,x2,...', help='start point (default: box centre)')
    _add_common_arguments(sbo_parser)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)

    try:
        config = RunConfig.create(args)
        configure_logging(config.output_dir, args.log_level, args.log_file)
        logger.debug('Run configuration: %s', config)
        return COMMAND_HANDLERS[config.command](config)
    except (GemlpConfigurationException, GemlpDataFileException, GemlpModelFileException, OSError) as e:
        print(f'gemlp: error: {e}', file=sys.stderr)
        return EXIT_USAGE
    except GemlpException as e:
        logger.error('%s failed: %s', args.command, e)
        print(f'gemlp: error: {e}', file=sys.stderr)
        return EXIT_FAILURE


if __name__ == '__main__':
    raise SystemExit(main())
