"""
Plot-ready data files: one CSV per experiment case with the held-out points,
the reference values and the prediction of every model, plus the training
points in the dataset format of ``gemlp train``.
"""
from __future__ import annotations

import logging
from pathlib import Path

from gemlp.benchmarks.experiments import ExperimentResult
from gemlp.core.dataset import Dataset
from gemlp.dataset_file import write_dataset
from gemlp.helper import normalize_filename
from gemlp.report.csv_report import CsvReport

logger = logging.getLogger(__name__)


def curve_rows(results: list[ExperimentResult]) -> list[dict]:
    """
    Merge predictions of results sharing the same held-out points.

    :param results: results of one case, e.g. its JENN and NN models
    """
    with_curves = [result for result in results if 'X_test' in result.curves]
    if not with_curves:
        return []
    X_test = with_curves[0].curves['X_test']
    Y_test = with_curves[0].curves['Y_test']
    columns = {f'x{j + 1}': X_test[j] for j in range(X_test.shape[0])}
    columns['y_true'] = Y_test[0]
    for result in with_curves:
        columns[f'y_{result.model}'] = result.curves['Y_pred'][0]
    return [
        {name: float(values[index]) for name, values in columns.items()}
        for index in range(X_test.shape[1])
    ]


def training_dataset(result: ExperimentResult) -> Dataset:
    """Training points of a result, with partials when the case had them."""
    curves = result.curves
    return Dataset(X=curves['X_train'], Y=curves['Y_train'], J=curves.get('J_train'))


def write_plot_data(output_dir: str | Path, results: list[ExperimentResult]) -> list[str]:
    """
    Write ``<experiment>_<case>_curve.csv`` and ``<experiment>_<case>_train.csv`` files.

    :return: written file names
    """
    cases: dict[tuple[str, str], list[ExperimentResult]] = {}
    for result in results:
        cases.setdefault((result.experiment, result.case), []).append(result)
    written = []
    for (experiment, case), case_results in cases.items():
        rows = curve_rows(case_results)
        if not rows:
            continue
        stem = Path(normalize_filename(str(output_dir))) / f'{experiment}_{case}'
        curve_report = CsvReport(f'{stem}_curve.csv')
        curve_report.write(rows)
        logger.info(curve_report.summary())
        write_dataset(f'{stem}_train.csv', training_dataset(case_results[0]))
        logger.info('generated training data file: %s_train.csv', stem)
        written.extend([curve_report.filename, f'{stem}_train.csv'])
    return written


