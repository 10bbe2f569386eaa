"""Finite-dimensional associative unital algebras over exact rationals.

An algebra is a basis, the coordinates of the unit, and a dense structure
constant tensor mul[i][j][k] with e_i e_j = sum_k mul[i][j][k] e_k.
Associativity and the two-sided unit law are checked at construction time,
so everything downstream may assume them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .linalg import SparseEliminator
from .poly import Scalar, scalar_is_zero

Coords = tuple


class AlgebraError(ValueError):
    """Raised for malformed algebras and mixed-algebra operations."""


@dataclass(frozen=True)
class FDAlgebra:
    name: str
    basis_names: tuple[str, ...]
    unit: tuple[Fraction, ...]
    mul: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        n = self.dim
        if len(self.unit) != n or len(self.mul) != n or any(
            len(row) != n or any(len(v) != n for v in row) for row in self.mul
        ):
            raise AlgebraError(f"{self.name}: inconsistent dimensions")
        self._check_associative()
        self._check_unit()

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    # -- load-time laws ------------------------------------------------------

    def _check_associative(self) -> None:
        n = self.dim
        mul = self.mul
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for m in range(n):
                        lhs = sum((mul[i][j][p] * mul[p][k][m] for p in range(n)), Fraction(0))
                        rhs = sum((mul[j][k][q] * mul[i][q][m] for q in range(n)), Fraction(0))
                        if lhs != rhs:
                            raise AlgebraError(
                                f"{self.name}: (e{i}e{j})e{k} != e{i}(e{j}e{k})"
                            )

    def _check_unit(self) -> None:
        n = self.dim
        for i in range(n):
            left = self.mul_coords(self.unit, _basis_coords(n, i))
            right = self.mul_coords(_basis_coords(n, i), self.unit)
            expected = _basis_coords(n, i)
            if left != expected or right != expected:
                raise AlgebraError(f"{self.name}: unit fails on basis element {i}")

    # -- products --------------------------------------------------------------

    def basis_product(self, i: int, j: int) -> tuple[Fraction, ...]:
        return self.mul[i][j]

    def mul_coords(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> tuple:
        """Coordinates of the product of two coordinate vectors (bilinear)."""
        n = self.dim
        out: list[Scalar] = [Fraction(0)] * n
        for i, xi in enumerate(x):
            if scalar_is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if scalar_is_zero(yj):
                    continue
                coeff = xi * yj
                row = self.mul[i][j]
                for k in range(n):
                    if row[k] != 0:
                        out[k] = out[k] + coeff * row[k]
        return tuple(out)

    # -- element factories -----------------------------------------------------

    def element(self, coords: Sequence[Scalar]) -> AlgElement:
        if len(coords) != self.dim:
            raise AlgebraError(f"{self.name}: expected {self.dim} coordinates")
        return AlgElement(self, tuple(coords))

    def basis_element(self, i: int) -> AlgElement:
        return AlgElement(self, _basis_coords(self.dim, i))

    def unit_element(self) -> AlgElement:
        return AlgElement(self, self.unit)

    def zero_element(self) -> AlgElement:
        return AlgElement(self, (Fraction(0),) * self.dim)

    def __repr__(self) -> str:
        return f"FDAlgebra({self.name!r}, dim={self.dim})"


def _basis_coords(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


@dataclass(frozen=True)
class AlgElement:
    algebra: FDAlgebra
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise AlgebraError("coordinate length does not match algebra dimension")

    def _same(self, other: AlgElement) -> None:
        if self.algebra != other.algebra:
            raise AlgebraError("elements of different algebras")

    def __add__(self, other: AlgElement) -> AlgElement:
        self._same(other)
        return AlgElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: AlgElement) -> AlgElement:
        self._same(other)
        return AlgElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> AlgElement:
        return AlgElement(self.algebra, tuple(-a for a in self.coords))

    def scale(self, c: Scalar) -> AlgElement:
        return AlgElement(self.algebra, tuple(c * a for a in self.coords))

    def __mul__(self, other: AlgElement) -> AlgElement:
        self._same(other)
        return AlgElement(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    def is_zero(self) -> bool:
        return all(scalar_is_zero(c) for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.algebra == other.algebra and (self - other).is_zero()

    def __str__(self) -> str:
        names = self.algebra.basis_names
        parts = [f"({c})*{n}" for c, n in zip(self.coords, names) if not scalar_is_zero(c)]
        return " + ".join(parts) if parts else "0"


def commutator(x: AlgElement, y: AlgElement) -> AlgElement:
    return x * y - y * x


# -- presets ---------------------------------------------------------------


def make_matrix_algebra(n: int) -> FDAlgebra:
    """Mat_n with matrix-unit basis (E_11, E_12, ..., E_nn); E_ij E_kl = d_jk E_il."""
    if n < 1:
        raise AlgebraError("matrix algebra needs n >= 1")
    dim = n * n
    names = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))

    def flat(i: int, j: int) -> int:
        return i * n + j

    mul = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        mul[flat(i, j)][flat(k, l)][flat(i, l)] = Fraction(1)
    unit = [Fraction(0)] * dim
    for i in range(n):
        unit[flat(i, i)] = Fraction(1)
    return FDAlgebra(
        f"mat{n}",
        names,
        tuple(unit),
        tuple(tuple(tuple(v) for v in row) for row in mul),
    )


def make_a2() -> FDAlgebra:
    """Upper-triangular 2x2 matrices: basis (e0, e1, e2), unit e1 + e2.

    Relations: e1^2=e1, e2^2=e2, e1 e0 = e0 e2 = e0, e0 e1 = e2 e0 = e0^2 = 0.
    Path algebra of the one-arrow quiver (e1, e2 the vertices, e0 the arrow).
    """
    z, o = Fraction(0), Fraction(1)
    table = {
        (1, 1): 1,  # e1 e1 = e1
        (2, 2): 2,  # e2 e2 = e2
        (1, 0): 0,  # e1 e0 = e0
        (0, 2): 0,  # e0 e2 = e0
    }
    mul = [[[z] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j), k in table.items():
        mul[i][j][k] = o
    return FDAlgebra(
        "a2",
        ("e0", "e1", "e2"),
        (z, o, o),
        tuple(tuple(tuple(v) for v in row) for row in mul),
    )


def direct_sum(a: FDAlgebra, b: FDAlgebra) -> FDAlgebra:
    """Block-diagonal sum; cross-block products vanish, unit = (1_a, 1_b)."""
    na, nb = a.dim, b.dim
    dim = na + nb
    z = Fraction(0)
    mul = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(na):
        for j in range(na):
            for k in range(na):
                mul[i][j][k] = a.mul[i][j][k]
    for i in range(nb):
        for j in range(nb):
            for k in range(nb):
                mul[na + i][na + j][na + k] = b.mul[i][j][k]
    return FDAlgebra(
        f"{a.name}+{b.name}",
        tuple(f"a.{s}" for s in a.basis_names) + tuple(f"b.{s}" for s in b.basis_names),
        a.unit + b.unit,
        tuple(tuple(tuple(v) for v in row) for row in mul),
    )


_MAT_RE = re.compile(r"^mat([1-9][0-9]*)$")


def resolve_preset(name: str) -> FDAlgebra | None:
    """Resolve preset names: "a2", "matN", and "+"-sums such as "mat1+mat1"."""
    name = name.strip()
    if "+" in name:
        parts = [resolve_preset(p) for p in name.split("+")]
        if any(p is None for p in parts):
            return None
        return reduce(direct_sum, parts)
    if name == "a2":
        return make_a2()
    m = _MAT_RE.match(name)
    if m:
        return make_matrix_algebra(int(m.group(1)))
    return None


# -- commutator subspace ----------------------------------------------------


@dataclass(frozen=True)
class CommutatorSubspace:
    """[A,A] as a subspace of A, plus the complementary trace-space data.

    ``basis`` spans [A,A] (in RREF, pivots first by column); the quotient
    A_flat = A/[A,A] is coordinatized by the non-pivot basis positions
    ``complement_indices``.
    """

    algebra: FDAlgebra
    basis: tuple[tuple[Fraction, ...], ...]
    pivot_columns: tuple[int, ...]
    complement_indices: tuple[int, ...]
    _reduced: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def flat_dim(self) -> int:
        return len(self.complement_indices)

    def contains(self, coords: Sequence[Scalar]) -> bool:
        return all(scalar_is_zero(c) for c in self.project_flat(coords))

    def project_flat(self, coords: Sequence[Scalar]) -> tuple:
        """Coordinates of the class of ``coords`` in A_flat.

        Reduction against the RREF basis of [A,A] works for polynomial
        coordinates too, since the pivots themselves are rational.
        """
        vec = list(coords)
        for row, piv in zip(self._reduced, self.pivot_columns):
            factor = vec[piv] * (Fraction(1) / row[piv])
            if scalar_is_zero(factor):
                continue
            for c, v in enumerate(row):
                if v != 0:
                    vec[c] = vec[c] - factor * v
        leftover = [
            (i, v) for i, v in enumerate(vec) if i not in self.complement_indices and not scalar_is_zero(v)
        ]
        if leftover:
            raise AlgebraError("projection failed: reduction left non-complement coordinates")
        return tuple(vec[i] for i in self.complement_indices)

    def flat_basis_elements(self) -> list[AlgElement]:
        return [self.algebra.basis_element(i) for i in self.complement_indices]


def commutator_subspace(algebra: FDAlgebra) -> CommutatorSubspace:
    """Span of all basis commutators [e_i, e_j], with flat-space bookkeeping."""
    n = algebra.dim
    elim = SparseEliminator(n)
    for i in range(n):
        for j in range(i + 1, n):
            c = commutator(algebra.basis_element(i), algebra.basis_element(j))
            elim.add_row({k: v for k, v in enumerate(c.coords) if v != 0})
    reduced = elim.reduced_pivot_rows()
    pivots = tuple(sorted(reduced))
    rows = []
    for piv in pivots:
        row = [Fraction(0)] * n
        for c, v in reduced[piv].items():
            row[c] = v
        rows.append(tuple(row))
    complement = tuple(i for i in range(n) if i not in set(pivots))
    return CommutatorSubspace(algebra, tuple(rows), pivots, complement, tuple(rows))
