"""Rank of 0/1 matrices over the two-element field.

Columns are Python ints used as bit-packed vectors (bit ``i`` = row ``i``).
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .limits import check_matrix_size


def rank(columns: Sequence[int]) -> int:
    """Gaussian elimination keyed on the highest set bit of each column."""
    check_matrix_size(len(columns))
    pivots: dict = {}
    r = 0
    for col in columns:
        while col:
            top = col.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = col
                r += 1
                break
            col ^= p
    return r


def boundary_columns(faces: Sequence[tuple], subfaces: Sequence[tuple]) -> list:
    """Boundary map from ``faces`` (k-simplices) to ``subfaces`` ((k-1)-simplices).

    Orientation signs vanish mod 2, so each column just marks the facets of
    the simplex.
    """
    row = {s: i for i, s in enumerate(subfaces)}
    cols = []
    for f in faces:
        c = 0
        for j in range(len(f)):
            c |= 1 << row[f[:j] + f[j + 1:]]
        cols.append(c)
    return cols


def from_rows(rows: Iterable[Iterable[int]]) -> list:
    """Convert a dense row-major 0/1 matrix to column bitsets."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    width = len(rows[0])
    cols = [0] * width
    for i, r in enumerate(rows):
        if len(r) != width:
            raise ValueError("ragged matrix")
        for j, v in enumerate(r):
            if v % 2:
                cols[j] |= 1 << i
    return cols
