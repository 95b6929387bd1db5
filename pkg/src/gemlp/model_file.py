"""
Model file in YAML format.

Fields, in order::

    format_version: 1
    architecture:
      layer_sizes: [n_x, ..., n_y]
      hidden_activation: tanh
      output_activation: linear
    normalization:
      mu_x: [...]
      sigma_x: [...]
      mu_y: [...]
      sigma_y: [...]
    layers:               # one entry per layer after the input layer
      - weights: [[...], ...]
        biases: [...]

Floats are written with their shortest round-trip representation, so a
loaded model predicts bitwise the same as the saved one.
"""
from __future__ import annotations

import logging
import os
from pathlib import Path

import numpy as np
import yaml
from marshmallow import Schema, ValidationError, fields, validate

from gemlp.constants import MODEL_FORMAT_VERSION
from gemlp.core.model import Model
from gemlp.core.normalization import NormalizationStats
from gemlp.core.parameters import HIDDEN_ACTIVATIONS, OUTPUT_ACTIVATIONS, Architecture, Parameters
from gemlp.exceptions import GemlpException, GemlpModelFileException
from gemlp.helper import safe_load_yaml

logger = logging.getLogger(__name__)


def model_to_dict(model: Model) -> dict:
    arch = model.architecture
    norm = model.norm
    return {
        'format_version': MODEL_FORMAT_VERSION,
        'architecture': {
            'layer_sizes': list(arch.layer_sizes),
            'hidden_activation': arch.hidden_activation,
            'output_activation': arch.output_activation,
        },
        'normalization': {
            'mu_x': norm.mu_x.ravel().tolist(),
            'sigma_x': norm.sigma_x.ravel().tolist(),
            'mu_y': norm.mu_y.ravel().tolist(),
            'sigma_y': norm.sigma_y.ravel().tolist(),
        },
        'layers': [
            {'weights': W.tolist(), 'biases': b.ravel().tolist()}
            for W, b in zip(model.parameters.weights, model.parameters.biases)
        ],
    }


def model_from_dict(data: dict) -> Model:
    """Create model from data validated by ``ModelSchema``."""
    arch = Architecture(
        layer_sizes=tuple(data['architecture']['layer_sizes']),
        hidden_activation=data['architecture'].get('hidden_activation', 'tanh'),
        output_activation=data['architecture'].get('output_activation', 'linear'),
    )
    params = Parameters(
        weights=tuple(np.array(layer['weights'], dtype=float) for layer in data['layers']),
        biases=tuple(np.array(layer['biases'], dtype=float).reshape(-1, 1) for layer in data['layers']),
    )
    return Model(architecture=arch, parameters=params, norm=NormalizationStats.from_lists(**data['normalization']))


def save_model(model: Model, filename: str | Path) -> None:
    """
    Write model to YAML file.

    :param model: trained model
    :param filename: output path; parent directories are created
    """
    if not model.parameters.is_finite():
        msg = f'Model with non-finite weights or biases is not saved to {filename}'
        logger.error(msg)
        raise GemlpModelFileException(msg)
    filename = Path(filename)
    os.makedirs(filename.parent, exist_ok=True)
    with filename.open('w', encoding='UTF-8') as file:
        yaml.safe_dump(model_to_dict(model), file, sort_keys=False, default_flow_style=None)
    logger.info('Model %s saved to %s', model.architecture, filename)


def load_model(filename: str | Path) -> Model:
    """
    Read model from YAML file.

    :param filename: path to model file
    :return: model
    """
    path = Path(filename)
    if not path.is_file():
        raise GemlpModelFileException(f'Model file does not exist: {filename}')
    try:
        data = safe_load_yaml(path)
        data = ModelSchema().load(data or {})
        if data['format_version'] != MODEL_FORMAT_VERSION:
            raise GemlpModelFileException(
                f'Unsupported model format version {data["format_version"]}, expected {MODEL_FORMAT_VERSION}'
            )
        return model_from_dict(data)
    except ValidationError as e:
        logger.error('When loading %s received error: %s', filename, e)
        raise GemlpModelFileException(f'Invalid model file {filename}: {e.messages}') from e
    except GemlpModelFileException:
        raise
    except GemlpException as e:
        logger.error('When loading %s received error: %s', filename, e)
        raise GemlpModelFileException(f'Invalid model file {filename}: {e}') from e


# Using marshmallow schema definition for validation of data read from yaml
_positive = validate.Range(min=1)


class ArchitectureSchema(Schema):
    layer_sizes = fields.List(fields.Int(validate=_positive), required=True, validate=validate.Length(min=2))
    hidden_activation = fields.Str(validate=validate.OneOf(HIDDEN_ACTIVATIONS))
    output_activation = fields.Str(validate=validate.OneOf(OUTPUT_ACTIVATIONS))


class NormalizationSchema(Schema):
    mu_x = fields.List(fields.Float(), required=True)
    sigma_x = fields.List(fields.Float(validate=validate.Range(min=0, min_inclusive=False)), required=True)
    mu_y = fields.List(fields.Float(), required=True)
    sigma_y = fields.List(fields.Float(validate=validate.Range(min=0, min_inclusive=False)), required=True)


class LayerSchema(Schema):
    weights = fields.List(fields.List(fields.Float()), required=True)
    biases = fields.List(fields.Float(), required=True)


class ModelSchema(Schema):
    format_version = fields.Int(required=True)
    architecture = fields.Nested(ArchitectureSchema(), required=True)
    normalization = fields.Nested(NormalizationSchema(), required=True)
    layers = fields.List(fields.Nested(LayerSchema()), required=True, validate=validate.Length(min=1))
