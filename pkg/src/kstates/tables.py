"""Integer tables of state counts and their flattening into sequences.

Triangles (``bn0k``, ``bn1k``, ``bn2k``, ``bnnk``) have one row per ``n``
listing ``b(n, r; k)`` for ``k = 0 ..`` the degree, including the leading
zero column. Squares (``bnr1``, ``bnr2``, ``leading``, ``degree``) are indexed
by ``(n, r)``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from itertools import count
from typing import Callable, Iterator

from . import closed_forms as cf

__all__ = [
    "TableSpec",
    "TABLE_NAMES",
    "TRIANGLES",
    "SQUARES",
    "ORDERS",
    "PAPER_MISPRINTS",
    "table_entry_fn",
    "render_table",
    "emit_sequence",
    "format_bfile",
    "paper_table",
    "header_label",
]

TRIANGLES = ("bn0k", "bn1k", "bn2k", "bnnk")
SQUARES = ("bnr1", "bnr2", "leading", "degree")
TABLE_NAMES = TRIANGLES + SQUARES
ORDERS = ("by-rows", "by-antidiagonals")

CAPTIONS = {
    "bn0k": "b(n,0;k)",
    "bn1k": "b(n,1;k)",
    "bn2k": "b(n,2;k)",
    "bnnk": "b(n,n;k)",
    "bnr1": "b(n,r;1)",
    "bnr2": "b(n,r;2)",
    "leading": "leading coefficient of B(n,r)",
    "degree": "d(n,r)",
}

# Printed entries of the published tables that disagree with every computation
# path. (table, n, column) -> (printed, correct). The leading-coefficient table
# must be symmetric and its (7, 2) entry reads 2.
PAPER_MISPRINTS = {
    ("leading", 2, 7): (1, 2),
}

_TRIANGLE_ROWS: dict[str, Callable] = {
    "bn0k": cf.b_n0,
    "bn1k": lambda n: cf.special_rows("r1", n),
    "bn2k": lambda n: cf.special_rows("r2", n),
    "bnnk": lambda n: cf.special_rows("diag", n),
}

_SQUARE_ENTRIES: dict[str, Callable[[int, int], int]] = {
    "bnr1": cf.coeff_k1,
    "bnr2": cf.coeff_k2,
    "leading": cf.leading_coeff,
    "degree": cf.degree_formula,
}


def _check_name(name: str) -> None:
    if name not in TABLE_NAMES:
        raise ValueError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")


@dataclass(frozen=True)
class TableSpec:
    name: str
    rows: int = 8
    cols: int = 8  # squares only; triangle rows end at their last nonzero entry

    def __post_init__(self):
        _check_name(self.name)
        if self.rows < 1:
            raise ValueError("rows must be >= 1")
        if self.cols < 1:
            raise ValueError("cols must be >= 1")

    @property
    def kind(self) -> str:
        return "triangle" if self.name in TRIANGLES else "square"


def header_label(name: str) -> str:
    _check_name(name)
    return "n \\ k" if name in TRIANGLES else "n \\ r"


def _triangle_row(name: str, n: int) -> list[int]:
    return list(_TRIANGLE_ROWS[name](n).coeffs)


def table_entry_fn(name: str) -> Callable[[int, int], int | None]:
    """Entry ``(n, j)`` of the unbounded table, ``None`` past a triangle row's end."""
    _check_name(name)
    if name in SQUARES:
        return _SQUARE_ENTRIES[name]
    cache: dict[int, list[int]] = {}

    def entry(n: int, k: int):
        row = cache.get(n)
        if row is None:
            row = cache[n] = _triangle_row(name, n)
        return row[k] if k < len(row) else None

    return entry


def render_table(spec: TableSpec) -> list[list[int]]:
    if spec.name in TRIANGLES:
        return [_triangle_row(spec.name, n) for n in range(spec.rows)]
    fn = _SQUARE_ENTRIES[spec.name]
    return [[fn(n, r) for r in range(spec.cols)] for n in range(spec.rows)]


def _by_rows(name: str, width: int) -> Iterator[int]:
    for n in count():
        if name in TRIANGLES:
            yield from _triangle_row(name, n)
        else:
            fn = _SQUARE_ENTRIES[name]
            for r in range(width):
                yield fn(n, r)


def _by_antidiagonals(name: str) -> Iterator[int]:
    # antidiagonal s lists (0, s), (1, s-1), ..., (s, 0)
    entry = table_entry_fn(name)
    for s in count():
        for n in range(s + 1):
            v = entry(n, s - n)
            if v is not None:
                yield v


def emit_sequence(name: str, terms: int, order: str = "by-rows", width: int = 8) -> list[int]:
    """First ``terms`` entries of the named table in the given reading order.

    ``by-rows`` reads triangles row by row and squares ``width`` columns at a
    time; ``by-antidiagonals`` walks the unbounded table antidiagonally.
    """
    _check_name(name)
    if terms < 1:
        raise ValueError("terms must be >= 1")
    if order == "by-rows":
        it = _by_rows(name, width)
    elif order == "by-antidiagonals":
        it = _by_antidiagonals(name)
    else:
        raise ValueError(f"unknown order {order!r}; choose from {', '.join(ORDERS)}")
    return [next(it) for _ in range(terms)]


def format_bfile(values, offset: int = 0) -> str:
    """b-file lines ``"index value"``."""
    return "\n".join(f"{i} {v}" for i, v in enumerate(values, start=offset))


def paper_table(name: str) -> list[list[int]]:
    """The published table, transcribed verbatim (misprints included)."""
    _check_name(name)
    path = resources.files("kstates") / "data" / "paper_tables" / f"{name}.csv"
    with path.open("r", encoding="utf-8") as fh:
        return [[int(v) for v in row] for row in csv.reader(fh) if row]
