from __future__ import annotations

import logging.config
import os

FILE_FORMAT = '%(asctime)s:%(levelname)s:%(name)s: %(message)s'
CONSOLE_FORMAT = '%(levelname)s: %(message)s'
LOG_FILENAME = 'gemlp.log'


def _logging_config(log_file: str, log_level: str | int) -> dict:
    package_logger = {'handlers': ['console', 'file'], 'propagate': False}
    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'standard': {'format': FILE_FORMAT},
            'simply': {'format': CONSOLE_FORMAT},
        },
        'handlers': {
            # the file keeps everything the package logger lets through
            'file': {
                'class': 'logging.FileHandler',
                'formatter': 'standard',
                'filename': log_file,
                'encoding': 'utf8',
                'mode': 'w',
            },
            'console': {
                'class': 'logging.StreamHandler',
                'formatter': 'simply',
                'stream': 'ext://sys.stderr',
            },
        },
        'loggers': {
            '': dict(package_logger, level='WARNING'),
            'gemlp': dict(package_logger, level=log_level),
        },
    }


def configure_logging(output_dir: str, log_level: str | int = logging.INFO, log_file: str | None = None) -> None:
    """
    Configure logging for command line runs.

    :param output_dir: directory where the log file is created
    :param log_level: level for the ``gemlp`` logger
    :param log_file: explicit log file path (default: ``<output_dir>/gemlp.log``)
    """
    log_file = log_file or os.path.join(output_dir, LOG_FILENAME)
    os.makedirs(output_dir, exist_ok=True)
    os.makedirs(os.path.dirname(os.path.abspath(log_file)), exist_ok=True)
    logging.config.dictConfig(_logging_config(log_file, log_level))
