"""
Dataset and weights files in CSV format.

The header names inputs ``x1..x{n_x}``, outputs ``y1..y{n_y}`` and optional
partials ``dy{k}_dx{j}``. Partials missing from the header are masked out of
training (gamma = 0); a file without any partials yields a dataset without
Jacobian.
"""
from __future__ import annotations

import csv
import logging
import os
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from gemlp.core.dataset import Dataset
from gemlp.exceptions import GemlpDataFileException, GemlpDatasetException

logger = logging.getLogger(__name__)

_INPUT = re.compile(r'^x(\d+)$')
_OUTPUT = re.compile(r'^y(\d+)$')
_PARTIAL = re.compile(r'^dy(\d+)_dx(\d+)$')


@dataclass(frozen=True)
class CsvLayout:
    """Column positions found in a header."""
    inputs: list[int]
    outputs: list[int]
    partials: dict[tuple[int, int], int]  # (k, j), zero based -> column

    @property
    def n_x(self) -> int:
        return len(self.inputs)

    @property
    def n_y(self) -> int:
        return len(self.outputs)


def input_names(n_x: int) -> list[str]:
    return [f'x{j + 1}' for j in range(n_x)]


def output_names(n_y: int) -> list[str]:
    return [f'y{k + 1}' for k in range(n_y)]


def partial_names(n_y: int, n_x: int) -> list[str]:
    return [f'dy{k + 1}_dx{j + 1}' for k in range(n_y) for j in range(n_x)]


def _data_error(message: str, filename: str | Path, line: int | None = None) -> GemlpDataFileException:
    location = f'{filename}, line {line}' if line is not None else str(filename)
    logger.error('%s: %s', location, message)
    return GemlpDataFileException(f'{location}: {message}', line=line)


def _contiguous(indices: dict[int, int], name: str, filename: str | Path) -> list[int]:
    if sorted(indices) != list(range(1, len(indices) + 1)):
        raise _data_error(f'{name} columns must be numbered 1..n without gaps', filename, 1)
    return [indices[i] for i in range(1, len(indices) + 1)]


def parse_header(header: list[str], filename: str | Path = '<csv>', check_partials: bool = True) -> CsvLayout:
    inputs: dict[int, int] = {}
    outputs: dict[int, int] = {}
    partials: dict[tuple[int, int], int] = {}
    for column, name in enumerate(cell.strip() for cell in header):
        if match := _INPUT.match(name):
            inputs[int(match.group(1))] = column
        elif match := _OUTPUT.match(name):
            outputs[int(match.group(1))] = column
        elif match := _PARTIAL.match(name):
            partials[(int(match.group(1)) - 1, int(match.group(2)) - 1)] = column
        else:
            raise _data_error(f'Unknown column {name!r}', filename, 1)
    layout = CsvLayout(
        inputs=_contiguous(inputs, 'Input', filename),
        outputs=_contiguous(outputs, 'Output', filename),
        partials=partials,
    )
    for k, j in partials if check_partials else ():
        if not (0 <= k < layout.n_y and 0 <= j < layout.n_x):
            raise _data_error(f'Partial dy{k + 1}_dx{j + 1} refers to a missing input or output', filename, 1)
    return layout


def _read_rows(filename: str | Path) -> tuple[list[str], list[tuple[int, np.ndarray]]]:
    """Return header and ``(line number, values)`` of every non-empty row."""
    path = Path(filename)
    if not path.is_file():
        raise _data_error('File does not exist', filename)
    with path.open(encoding='UTF-8', newline='') as file:
        reader = csv.reader(file)
        try:
            header = next(reader)
        except StopIteration:
            raise _data_error('File is empty, expected a header row', filename, 1)
        rows = []
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise _data_error(f'Expected {len(header)} values, got {len(row)}', filename, reader.line_num)
            try:
                values = np.array([float(cell) for cell in row])
            except ValueError as e:
                raise _data_error(f'Cannot parse number: {e}', filename, reader.line_num) from e
            if not np.all(np.isfinite(values)):
                raise _data_error('Non-finite value', filename, reader.line_num)
            rows.append((reader.line_num, values))
    return header, rows


def read_dataset(filename: str | Path) -> Dataset:
    """
    Read training data.

    :param filename: path to CSV file
    :return: raw dataset; missing partial columns get gamma = 0
    """
    header, rows = _read_rows(filename)
    layout = parse_header(header, filename)
    if layout.n_x == 0 or layout.n_y == 0:
        raise _data_error('Dataset needs at least one input and one output column', filename, 1)
    if not rows:
        raise _data_error('Dataset has no examples', filename)
    table = np.stack([values for _, values in rows], axis=1)
    X = table[layout.inputs]
    Y = table[layout.outputs]
    J, gamma = None, None
    if layout.partials:
        J = np.zeros((layout.n_y, layout.n_x, table.shape[1]))
        gamma = np.zeros((layout.n_y, layout.n_x, 1))
        for (k, j), column in layout.partials.items():
            J[k, j] = table[column]
            gamma[k, j] = 1.0
        if len(layout.partials) < layout.n_x * layout.n_y:
            logger.info('%s: %d of %d partials given, the others are masked', filename,
                        len(layout.partials), layout.n_x * layout.n_y)
    try:
        data = Dataset(X=X, Y=Y, J=J, gamma=gamma)
    except GemlpDatasetException as e:
        raise _data_error(str(e), filename) from e
    logger.debug('Read %d examples (n_x=%d, n_y=%d) from %s', data.m, data.n_x, data.n_y, filename)
    return data


def read_inputs(filename: str | Path, n_x: int | None = None) -> np.ndarray:
    """
    Read the input columns of a CSV file; other columns are ignored.

    :param filename: path to CSV file
    :param n_x: expected number of inputs
    :return: inputs ``(n_x, m)``, ``m`` may be zero
    """
    header, rows = _read_rows(filename)
    layout = parse_header(header, filename)
    if n_x is not None and layout.n_x != n_x:
        raise _data_error(f'Expected {n_x} input columns, got {layout.n_x}', filename, 1)
    if not rows:
        return np.empty((layout.n_x, 0))
    table = np.stack([values for _, values in rows], axis=1)
    return table[layout.inputs]


def _write_table(filename: str | Path, header: list[str], columns: np.ndarray) -> None:
    filename = Path(filename)
    os.makedirs(filename.parent, exist_ok=True)
    with filename.open('w', encoding='UTF-8', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(header)
        writer.writerows([[repr(float(value)) for value in row] for row in columns.T])


def write_dataset(filename: str | Path, data: Dataset) -> None:
    """Write dataset; partials are written for every entry with nonzero gamma."""
    header = input_names(data.n_x) + output_names(data.n_y)
    blocks = [data.X, data.Y]
    if data.has_jacobian:
        for k in range(data.n_y):
            for j in range(data.n_x):
                if np.any(data.gamma[k, j] > 0):
                    header.append(f'dy{k + 1}_dx{j + 1}')
                    blocks.append(data.J[k, j].reshape(1, -1))
    _write_table(filename, header, np.concatenate(blocks, axis=0))


def write_predictions(filename: str | Path, X: np.ndarray, Y: np.ndarray, J: np.ndarray) -> None:
    """Write inputs, predicted outputs and the full predicted Jacobian."""
    n_y, n_x, m = J.shape
    header = input_names(n_x) + output_names(n_y) + partial_names(n_y, n_x)
    columns = np.concatenate([X, Y, J.reshape(n_y * n_x, m)], axis=0)
    _write_table(filename, header, columns)


def read_weights(filename: str | Path, shape: tuple[int, ...]) -> np.ndarray:
    """
    Read loss weights for outputs (``y{k}`` columns) or partials (``dy{k}_dx{j}`` columns).

    A single row applies to every example; otherwise one row per example is
    required. Missing columns get weight 1.

    :param filename: path to CSV file
    :param shape: ``(n_y, m)`` for beta or ``(n_y, n_x, m)`` for gamma
    :return: weights broadcastable to ``shape``
    """
    header, rows = _read_rows(filename)
    layout = parse_header(header, filename, check_partials=False)
    if not rows:
        raise _data_error('Weights file has no rows', filename)
    m = shape[-1]
    if len(rows) not in (1, m):
        raise _data_error(f'Expected 1 or {m} rows of weights, got {len(rows)}', filename)
    table = np.stack([values for _, values in rows], axis=1)
    weights = np.ones(shape[:-1] + (table.shape[1],))
    if len(shape) == 2:
        if layout.partials or layout.n_y > shape[0]:
            raise _data_error(f'Output weights need columns y1..y{shape[0]}', filename, 1)
        for k, column in enumerate(layout.outputs):
            weights[k] = table[column]
    else:
        if layout.outputs or layout.inputs:
            raise _data_error('Partial weights need dy{k}_dx{j} columns only', filename, 1)
        for (k, j), column in layout.partials.items():
            if k >= shape[0] or j >= shape[1]:
                raise _data_error(f'Column dy{k + 1}_dx{j + 1} does not match the dataset', filename, 1)
            weights[k, j] = table[column]
    if np.any(weights < 0):
        raise _data_error('Weights must be non-negative', filename)
    return weights
