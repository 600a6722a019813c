"""Exact integer linear algebra (fraction-free elimination)."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
    if g > 1:
        row = [x // g for x in row]
    for x in row:
        if x:
            if x < 0:
                row = [-y for y in row]
            break
    return row


def _lead(row: Sequence[int]) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    return -1


def row_reduce(rows: Iterable[Sequence[int]], ncols: int) -> list[list[int]]:
    """Reduced echelon form over Q, kept integral and primitive row by row.

    Rows are inserted one at a time and cross-multiplied against existing
    pivots, so intermediate entries never leave Z. Returns the nonzero rows
    sorted by pivot column; every pivot column is zero in all other rows.
    """
    pivots: dict[int, list[int]] = {}
    for raw in rows:
        row = list(raw)
        if len(row) != ncols:
            raise ValueError(f"row has {len(row)} entries, expected {ncols}")
        if not any(row):
            continue
        for c, prow in pivots.items():
            e = row[c]
            if e:
                p = prow[c]
                row = [p * x - e * y for x, y in zip(row, prow)]
        row = _primitive(row)
        c = _lead(row)
        if c < 0:
            continue
        for k, prow in pivots.items():
            e = prow[c]
            if e:
                p = row[c]
                pivots[k] = _primitive([p * x - e * y for x, y in zip(prow, row)])
        pivots[c] = row
    return [pivots[c] for c in sorted(pivots)]


def rank(rows: Iterable[Sequence[int]], ncols: int) -> int:
    return len(row_reduce(rows, ncols))


def nullspace(rows: Iterable[Sequence[int]], ncols: int) -> list[list[int]]:
    """Integer basis of ``{x : A x = 0}``, one primitive vector per free column."""
    reduced = row_reduce(rows, ncols)
    pivot_cols = {_lead(r): r for r in reduced}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        # x_f = L, x_c = -r[f] * L / r[c] for every pivot row r with pivot c
        L = 1
        for c, r in pivot_cols.items():
            if r[f]:
                L = L * r[c] // gcd(L, r[c])
        vec = [0] * ncols
        vec[f] = L
        for c, r in pivot_cols.items():
            if r[f]:
                vec[c] = -r[f] * L // r[c]
        basis.append(_primitive(vec))
    return basis
