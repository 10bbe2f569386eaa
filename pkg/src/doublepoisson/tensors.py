"""Tensor square and cube of an algebra, with all bimodule actions.

Conventions (fixed once, used everywhere):

* outer action on A(x)A:   x.(a(x)b) = xa(x)b,   (a(x)b).x = a(x)bx
* inner action on A(x)A:   x.(a(x)b) = a(x)xb,   (a(x)b).x = ax(x)b
* leg commutators on A(x)A(x)A:
    [a(x)b(x)c, x]_1 = a(x)xb(x)c - ax(x)b(x)c
    [a(x)b(x)c, y]_2 = a(x)b(x)yc - a(x)by(x)c
    [a(x)b(x)c, z]_3 = za(x)b(x)c - a(x)b(x)cz
* cyclic permutation: tau123(a(x)b(x)c) = c(x)a(x)b, tau132 = tau123^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraError, AlgElement, FDAlgebra
from .poly import Scalar, scalar_is_zero


def _zero_grid2(n: int) -> list[list[Scalar]]:
    return [[Fraction(0)] * n for _ in range(n)]


def _zero_grid3(n: int) -> list[list[list[Scalar]]]:
    return [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]


@dataclass(frozen=True)
class Tensor2:
    """Element of A(x)A in basis coordinates: sum grid[a][b] e_a(x)e_b."""

    algebra: FDAlgebra
    grid: tuple

    @staticmethod
    def zero(algebra: FDAlgebra) -> Tensor2:
        return Tensor2(algebra, tuple(tuple(r) for r in _zero_grid2(algebra.dim)))

    @staticmethod
    def of(algebra: FDAlgebra, grid) -> Tensor2:
        return Tensor2(algebra, tuple(tuple(row) for row in grid))

    @staticmethod
    def pure(x: AlgElement, y: AlgElement) -> Tensor2:
        """x (x) y."""
        if x.algebra != y.algebra:
            raise AlgebraError("tensor factors from different algebras")
        return Tensor2.of(
            x.algebra, [[a * b for b in y.coords] for a in x.coords]
        )

    def _same(self, other: Tensor2) -> None:
        if self.algebra != other.algebra:
            raise AlgebraError("tensors over different algebras")

    def __add__(self, other: Tensor2) -> Tensor2:
        self._same(other)
        return Tensor2.of(
            self.algebra,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.grid, other.grid)
            ],
        )

    def __sub__(self, other: Tensor2) -> Tensor2:
        self._same(other)
        return Tensor2.of(
            self.algebra,
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.grid, other.grid)
            ],
        )

    def __neg__(self) -> Tensor2:
        return Tensor2.of(self.algebra, [[-a for a in r] for r in self.grid])

    def scale(self, c: Scalar) -> Tensor2:
        return Tensor2.of(self.algebra, [[c * a for a in r] for r in self.grid])

    def flip(self) -> Tensor2:
        """(a(x)b)° = b(x)a."""
        n = self.algebra.dim
        return Tensor2.of(
            self.algebra, [[self.grid[b][a] for b in range(n)] for a in range(n)]
        )

    def is_zero(self) -> bool:
        return all(scalar_is_zero(a) for r in self.grid for a in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.algebra == other.algebra and (self - other).is_zero()

    # -- actions ---------------------------------------------------------------

    def _mult_first(self, mat) -> Tensor2:
        n = self.algebra.dim
        out = _zero_grid2(n)
        for a in range(n):
            for b in range(n):
                v = self.grid[a][b]
                if scalar_is_zero(v):
                    continue
                for c in range(n):
                    w = mat[c][a]
                    if scalar_is_zero(w):
                        continue
                    out[c][b] = out[c][b] + w * v
        return Tensor2.of(self.algebra, out)

    def _mult_second(self, mat) -> Tensor2:
        n = self.algebra.dim
        out = _zero_grid2(n)
        for a in range(n):
            for b in range(n):
                v = self.grid[a][b]
                if scalar_is_zero(v):
                    continue
                for c in range(n):
                    w = mat[c][b]
                    if scalar_is_zero(w):
                        continue
                    out[a][c] = out[a][c] + w * v
        return Tensor2.of(self.algebra, out)

    def _check_elem(self, x: AlgElement) -> None:
        if x.algebra != self.algebra:
            raise AlgebraError("element from a different algebra")

    def outer_left(self, x: AlgElement) -> Tensor2:
        """x.(a(x)b) = xa(x)b."""
        self._check_elem(x)
        return self._mult_first(_left_mult_matrix(x))

    def outer_right(self, x: AlgElement) -> Tensor2:
        """(a(x)b).x = a(x)bx."""
        self._check_elem(x)
        return self._mult_second(_right_mult_matrix(x))

    def inner_left(self, x: AlgElement) -> Tensor2:
        """x.(a(x)b) = a(x)xb."""
        self._check_elem(x)
        return self._mult_second(_left_mult_matrix(x))

    def inner_right(self, x: AlgElement) -> Tensor2:
        """(a(x)b).x = ax(x)b."""
        self._check_elem(x)
        return self._mult_first(_right_mult_matrix(x))

    def act(self, x: AlgElement, structure: str, side: str) -> Tensor2:
        """Dispatch by structure ("outer"/"inner") and side ("left"/"right")."""
        try:
            return {
                ("outer", "left"): self.outer_left,
                ("outer", "right"): self.outer_right,
                ("inner", "left"): self.inner_left,
                ("inner", "right"): self.inner_right,
            }[(structure, side)](x)
        except KeyError:
            raise AlgebraError(f"unknown action {structure}/{side}") from None

    def multiply_first_leg(self, x: AlgElement) -> Tensor2:
        """a(x)b -> ax(x)b (same as the inner right action; named for clarity)."""
        return self.inner_right(x)

    def multiply_second_leg_left(self, x: AlgElement) -> Tensor2:
        """a(x)b -> a(x)xb (same as the inner left action)."""
        return self.inner_left(x)

    def entries(self):
        for a, row in enumerate(self.grid):
            for b, v in enumerate(row):
                if not scalar_is_zero(v):
                    yield (a, b, v)

    def __str__(self) -> str:
        names = self.algebra.basis_names
        parts = [f"({v})*{names[a]}(x){names[b]}" for a, b, v in self.entries()]
        return " + ".join(parts) if parts else "0"


def _left_mult_matrix(x: AlgElement):
    """Matrix L with (x e_a) = sum_c L[c][a] e_c."""
    alg = x.algebra
    n = alg.dim
    mat = _zero_grid2(n)
    for i, xi in enumerate(x.coords):
        if scalar_is_zero(xi):
            continue
        for a in range(n):
            row = alg.mul[i][a]
            for c in range(n):
                if row[c] != 0:
                    mat[c][a] = mat[c][a] + xi * row[c]
    return mat


def _right_mult_matrix(x: AlgElement):
    """Matrix R with (e_a x) = sum_c R[c][a] e_c."""
    alg = x.algebra
    n = alg.dim
    mat = _zero_grid2(n)
    for j, xj in enumerate(x.coords):
        if scalar_is_zero(xj):
            continue
        for a in range(n):
            row = alg.mul[a][j]
            for c in range(n):
                if row[c] != 0:
                    mat[c][a] = mat[c][a] + xj * row[c]
    return mat


@dataclass(frozen=True)
class Tensor3:
    """Element of A(x)A(x)A: sum grid[a][b][c] e_a(x)e_b(x)e_c."""

    algebra: FDAlgebra
    grid: tuple

    @staticmethod
    def zero(algebra: FDAlgebra) -> Tensor3:
        n = algebra.dim
        return Tensor3.of(algebra, _zero_grid3(n))

    @staticmethod
    def of(algebra: FDAlgebra, grid) -> Tensor3:
        return Tensor3(algebra, tuple(tuple(tuple(r) for r in plane) for plane in grid))

    def _same(self, other: Tensor3) -> None:
        if self.algebra != other.algebra:
            raise AlgebraError("tensors over different algebras")

    def __add__(self, other: Tensor3) -> Tensor3:
        self._same(other)
        n = self.algebra.dim
        return Tensor3.of(
            self.algebra,
            [
                [
                    [self.grid[a][b][c] + other.grid[a][b][c] for c in range(n)]
                    for b in range(n)
                ]
                for a in range(n)
            ],
        )

    def __sub__(self, other: Tensor3) -> Tensor3:
        return self + (-other)

    def __neg__(self) -> Tensor3:
        return Tensor3.of(
            self.algebra,
            [[[-v for v in r] for r in plane] for plane in self.grid],
        )

    def scale(self, c: Scalar) -> Tensor3:
        return Tensor3.of(
            self.algebra,
            [[[c * v for v in r] for r in plane] for plane in self.grid],
        )

    def is_zero(self) -> bool:
        return all(scalar_is_zero(v) for plane in self.grid for r in plane for v in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.algebra == other.algebra and (self - other).is_zero()

    def entries(self):
        for a, plane in enumerate(self.grid):
            for b, row in enumerate(plane):
                for c, v in enumerate(row):
                    if not scalar_is_zero(v):
                        yield (a, b, c, v)

    def tau123(self) -> Tensor3:
        """tau123(a(x)b(x)c) = c(x)a(x)b."""
        n = self.algebra.dim
        return Tensor3.of(
            self.algebra,
            [
                [[self.grid[j][k][i] for k in range(n)] for j in range(n)]
                for i in range(n)
            ],
        )

    def tau132(self) -> Tensor3:
        """tau132(a(x)b(x)c) = b(x)c(x)a."""
        return self.tau123().tau123()

    def leg_commutator(self, x: AlgElement, leg: int) -> Tensor3:
        """[t, x]_leg per the displayed leg-commutator formulas (leg in 1..3)."""
        if x.algebra != self.algebra:
            raise AlgebraError("element from a different algebra")
        if leg not in (1, 2, 3):
            raise AlgebraError(f"leg must be 1, 2 or 3, got {leg}")
        left = _left_mult_matrix(x)
        right = _right_mult_matrix(x)
        n = self.algebra.dim
        out = _zero_grid3(n)
        for a, b, c, v in self.entries():
            if leg == 1:
                # a (x) xb (x) c  -  ax (x) b (x) c
                for m in range(n):
                    w = left[m][b]
                    if not scalar_is_zero(w):
                        out[a][m][c] = out[a][m][c] + v * w
                    w = right[m][a]
                    if not scalar_is_zero(w):
                        out[m][b][c] = out[m][b][c] - v * w
            elif leg == 2:
                # a (x) b (x) xc  -  a (x) bx (x) c
                for m in range(n):
                    w = left[m][c]
                    if not scalar_is_zero(w):
                        out[a][b][m] = out[a][b][m] + v * w
                    w = right[m][b]
                    if not scalar_is_zero(w):
                        out[a][m][c] = out[a][m][c] - v * w
            else:
                # xa (x) b (x) c  -  a (x) b (x) cx
                for m in range(n):
                    w = left[m][a]
                    if not scalar_is_zero(w):
                        out[m][b][c] = out[m][b][c] + v * w
                    w = right[m][c]
                    if not scalar_is_zero(w):
                        out[a][b][m] = out[a][b][m] - v * w
        return Tensor3.of(self.algebra, out)

    def legwise_product(self, other: Tensor3) -> Tensor3:
        """(a(x)b(x)c) x (p(x)q(x)r) = ap (x) bq (x) cr, extended bilinearly."""
        self._same(other)
        alg = self.algebra
        n = alg.dim
        out = _zero_grid3(n)
        for a, b, c, v in self.entries():
            for p, q, r, w in other.entries():
                coeff = v * w
                row1 = alg.mul[a][p]
                row2 = alg.mul[b][q]
                row3 = alg.mul[c][r]
                for i in range(n):
                    if row1[i] == 0:
                        continue
                    c1 = coeff * row1[i]
                    for j in range(n):
                        if row2[j] == 0:
                            continue
                        c2 = c1 * row2[j]
                        for k in range(n):
                            if row3[k] != 0:
                                out[i][j][k] = out[i][j][k] + c2 * row3[k]
        return Tensor3.of(alg, out)

    def __str__(self) -> str:
        names = self.algebra.basis_names
        parts = [
            f"({v})*{names[a]}(x){names[b]}(x){names[c]}"
            for a, b, c, v in self.entries()
        ]
        return " + ".join(parts) if parts else "0"


def tensor_from_pairs(algebra: FDAlgebra, pairs) -> Tensor2:
    """Sum of coeff * e_a (x) e_b over (a, b, coeff) triples."""
    grid = _zero_grid2(algebra.dim)
    for a, b, coeff in pairs:
        grid[a][b] = grid[a][b] + coeff
    return Tensor2.of(algebra, grid)


def tensor3_from_triples(algebra: FDAlgebra, triples) -> Tensor3:
    grid = _zero_grid3(algebra.dim)
    for a, b, c, coeff in triples:
        grid[a][b][c] = grid[a][b][c] + coeff
    return Tensor3.of(algebra, grid)
