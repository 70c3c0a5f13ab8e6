"""Exact sparse Gaussian elimination over the rationals.

Rows are integer dicts (column -> value) kept gcd-reduced; pivots are
chosen by a lazy min-heap on live column counts, which keeps fill low on
boundary-matrix style inputs.  Kernel bases come out of back
substitution through the retired pivot rows, one vector per free
column, with the free coordinate normalized for coefficient extraction.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from typing import Iterable


def _reduce_row(row: dict[int, int]) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


class KernelVector:
    """Sparse kernel vector with a designated unit coordinate.

    ``entries[free_col] == norm`` and every other free column is absent,
    so the coefficient of this basis vector inside any kernel element x
    is x[free_col] / norm.
    """

    __slots__ = ("free_col", "entries", "norm")

    def __init__(self, free_col: int, entries: dict[int, int], norm: int):
        self.free_col = free_col
        self.entries = entries
        self.norm = norm


def eliminate(
    rows: Iterable[dict[int, int]], ncols: int, want_kernel: bool = False
) -> tuple[int, list[KernelVector] | None]:
    """Rank of the sparse system, optionally with a kernel basis.

    ``rows`` are homogeneous equations over variables 0..ncols-1.  The
    kernel basis has one vector per non-pivot column.
    """
    work: list[dict[int, int] | None] = []
    for row in rows:
        if row:
            r = dict(row)
            _reduce_row(r)
            work.append(r)
    col_rows: dict[int, set[int]] = {}
    for idx, row in enumerate(work):
        for c in row:
            col_rows.setdefault(c, set()).add(idx)
    heap = [(len(ids), c) for c, ids in col_rows.items()]
    heapq.heapify(heap)
    pivot_cols: set[int] = set()
    retired: list[tuple[int, dict[int, int]]] = []

    def unindex(idx: int, row: dict[int, int]) -> None:
        for c in row:
            ids = col_rows.get(c)
            if ids is not None:
                ids.discard(idx)

    while heap:
        cnt, c = heapq.heappop(heap)
        ids = col_rows.get(c)
        if c in pivot_cols or ids is None or not ids:
            continue
        if len(ids) != cnt:
            heapq.heappush(heap, (len(ids), c))
            continue
        ridx = min(ids, key=lambda r: (len(work[r]), abs(work[r][c]), r))
        prow = work[ridx]
        unindex(ridx, prow)
        work[ridx] = None
        pivot_cols.add(c)
        retired.append((c, prow))
        piv = prow[c]
        for other in list(col_rows.get(c, ())):
            row = work[other]
            b = row[c]
            g = gcd(piv, b)
            fa, fb = piv // g, b // g
            unindex(other, row)
            new = {col: v * fa for col, v in row.items()}
            for col, v in prow.items():
                s = new.get(col, 0) - v * fb
                if s == 0:
                    new.pop(col, None)
                else:
                    new[col] = s
            if new:
                _reduce_row(new)
                work[other] = new
                for col in new:
                    ids2 = col_rows.setdefault(col, set())
                    ids2.add(other)
                    heapq.heappush(heap, (len(ids2), col))
            else:
                work[other] = None
        col_rows.pop(c, None)

    rank = len(retired)
    if not want_kernel:
        return rank, None

    kernel: list[KernelVector] = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec: dict[int, Fraction] = {f: Fraction(1)}
        for c, prow in reversed(retired):
            s = Fraction(0)
            for col, v in prow.items():
                if col != c and col in vec:
                    s += v * vec[col]
            if s:
                vec[c] = -s / prow[c]
        denom = 1
        for v in vec.values():
            denom = denom * v.denominator // gcd(denom, v.denominator)
        entries = {c: int(v * denom) for c, v in vec.items() if v}
        kernel.append(KernelVector(f, entries, denom))
    return rank, kernel
