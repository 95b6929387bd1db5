from __future__ import annotations

import math
from typing import Iterable

from tabulate import tabulate


def format_table(rows: Iterable[dict], columns: list[str] | None = None) -> str:
    """
    Return rows as a table for the terminal.

    :param rows: report rows
    :param columns: keys to show (default: keys of the first row)
    """
    rows = list(rows)
    if not rows:
        return ''
    columns = columns or list(rows[0])
    table = [[_cell(row.get(column)) for column in columns] for row in rows]
    return tabulate(table, headers=columns, tablefmt='github', floatfmt='.4g', missingval='-')


def _cell(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


def print_table(rows: Iterable[dict], columns: list[str] | None = None) -> None:
    print()
    print(format_table(rows, columns))
