from __future__ import annotations

import logging
import os.path
from pathlib import Path

import yaml

from gemlp.exceptions import GemlpConfigurationException, GemlpException

logger = logging.getLogger(__name__)


def string_to_int_list(value: str | list[int]) -> list[int]:
    """Return integers from comma separated string, e.g. ``'2,16,16,1'``."""
    if not isinstance(value, str):
        return list(value)
    try:
        return [int(item) for item in value.split(',') if item.strip()]
    except ValueError as e:
        raise GemlpConfigurationException(f'Expected comma separated integers, got: {value!r}') from e


def string_to_float_list(value: str | list[float]) -> list[float]:
    """Return floats from comma separated string, e.g. ``'-1.5,-1'``."""
    if not isinstance(value, str):
        return list(value)
    try:
        return [float(item) for item in value.split(',') if item.strip()]
    except ValueError as e:
        raise GemlpConfigurationException(f'Expected comma separated numbers, got: {value!r}') from e


def safe_load_yaml(filename: str | Path) -> dict:
    """Return data from yaml file; parsing errors raise ``GemlpException``."""
    text = Path(filename).read_text(encoding='UTF-8')
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        logger.error('Parsing error for yaml file %s: %s', filename, exc)
        raise GemlpException(f'Cannot load data from yaml file: {filename}') from exc


def normalize_filename(filename: str) -> str:
    filename = os.path.expanduser(os.path.expandvars(filename))
    filename = os.path.normpath(os.path.abspath(filename))
    return filename
