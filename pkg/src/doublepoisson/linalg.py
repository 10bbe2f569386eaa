"""Exact rational linear algebra: rank, RREF and nullspaces.

The workhorse is a fraction-free sparse elimination: rows are dicts from
column index to integer entry, kept primitive (content divided out) after
every combination step, which bounds coefficient growth the same way Bareiss
pivoting does on dense data.  Pivots are chosen at the smallest column index,
so echelon forms, ranks and nullspace bases are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

SparseRow = dict[int, int]


def _to_int_row(row: dict[int, Fraction | int]) -> SparseRow:
    """Clear denominators and divide out the content; sign-normalize later."""
    entries = {c: Fraction(v) for c, v in row.items() if v != 0}
    if not entries:
        return {}
    denom_lcm = 1
    for v in entries.values():
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    ints = {c: int(v * denom_lcm) for c, v in entries.items()}
    return _primitive(ints)


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    lead = min(row) if row else None
    if lead is not None and row[lead] < 0:
        row = {c: -v for c, v in row.items()}
    return row


class SparseEliminator:
    """Incremental row reduction keeping one primitive pivot row per column."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, SparseRow] = {}

    def add_row(self, row: dict[int, Fraction | int]) -> None:
        work = _to_int_row(row)
        while work:
            lead = min(work)
            pivot = self.pivot_rows.get(lead)
            if pivot is None:
                self.pivot_rows[lead] = _primitive(work)
                return
            a, b = pivot[lead], work[lead]
            combined: SparseRow = {}
            for c, v in work.items():
                combined[c] = a * v
            for c, v in pivot.items():
                s = combined.get(c, 0) - b * v
                if s == 0:
                    combined.pop(c, None)
                else:
                    combined[c] = s
            work = _primitive(combined)

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduced_pivot_rows(self) -> dict[int, dict[int, Fraction]]:
        """Gauss-Jordan pass: each pivot column appears in its own row only."""
        rows = {c: {k: Fraction(v) for k, v in r.items()} for c, r in self.pivot_rows.items()}
        for lead in sorted(rows, reverse=True):
            row = rows[lead]
            for other_lead, other in rows.items():
                if other_lead >= lead or lead not in other:
                    continue
                factor = other[lead] / row[lead]
                for c, v in row.items():
                    s = other.get(c, Fraction(0)) - factor * v
                    if s == 0:
                        other.pop(c, None)
                    else:
                        other[c] = s
        return rows

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the right kernel, one vector per free column, in column order."""
        rows = self.reduced_pivot_rows()
        pivot_cols = set(rows)
        basis: list[list[Fraction]] = []
        for free in range(self.ncols):
            if free in pivot_cols:
                continue
            vec = [Fraction(0)] * self.ncols
            vec[free] = Fraction(1)
            for lead, row in rows.items():
                coeff = row.get(free)
                if coeff:
                    vec[lead] = -coeff / row[lead]
            basis.append(vec)
        return basis


def nullspace_of_rows(
    rows: Iterable[dict[int, Fraction | int]], ncols: int
) -> list[list[Fraction]]:
    """Nullspace basis of the linear system given by sparse constraint rows."""
    elim = SparseEliminator(ncols)
    for row in rows:
        elim.add_row(row)
    return elim.nullspace()


def rank_of_vectors(vectors: Sequence[Sequence[Fraction]]) -> int:
    if not vectors:
        return 0
    ncols = len(vectors[0])
    elim = SparseEliminator(ncols)
    for v in vectors:
        elim.add_row({i: x for i, x in enumerate(v) if x != 0})
    return elim.rank


def subspaces_equal(
    a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]
) -> bool:
    """True iff span(a) == span(b) (as subspaces of the common ambient space)."""
    ra = rank_of_vectors(a)
    rb = rank_of_vectors(b)
    return ra == rb == rank_of_vectors(list(a) + list(b))


def in_span(vectors: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    r = rank_of_vectors(vectors)
    return rank_of_vectors(list(vectors) + [list(v)]) == r


def invert_matrix(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan; raises ValueError when singular."""
    n = len(rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is not invertible")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class QMatrix:
    """Dense exact-rational matrix exposing rank and right-nullspace."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(data: Sequence[Sequence]) -> QMatrix:
        grid = tuple(tuple(Fraction(x) for x in row) for row in data)
        nrows = len(grid)
        ncols = len(grid[0]) if grid else 0
        if any(len(r) != ncols for r in grid):
            raise ValueError("ragged rows")
        return QMatrix(nrows, ncols, grid)

    @staticmethod
    def identity(n: int) -> QMatrix:
        return QMatrix.from_rows(
            [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(rows: int, cols: int) -> QMatrix:
        return QMatrix(rows, cols, tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows)))

    def _eliminator(self) -> SparseEliminator:
        elim = SparseEliminator(self.cols)
        for row in self.entries:
            elim.add_row({i: x for i, x in enumerate(row) if x != 0})
        return elim

    def rank(self) -> int:
        return self._eliminator().rank

    def nullspace(self) -> list[list[Fraction]]:
        return self._eliminator().nullspace()

    def apply(self, vec: Sequence[Fraction]) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((r[j] * vec[j] for j in range(self.cols)), Fraction(0)) for r in self.entries]
