"""Double brackets as coefficient tensors, and the three axioms.

A bracket is stored as C[i][j][a][b] with {{e_i, e_j}} = sum C[i][j][a][b]
e_a (x) e_b; coefficients may be exact rationals or polynomials in declared
formal parameters.  For parametrized brackets an axiom "holds" when every
residual coefficient is the identically-zero polynomial, unless a RelationSet
of parameter constraints is supplied to quotient by.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraError, AlgElement, FDAlgebra
from .poly import MultiPoly, RelationSet, Scalar, scalar_is_zero
from .tensors import Tensor2, Tensor3, _zero_grid2, _zero_grid3


def _zero_grid4(n: int):
    return [[[[Fraction(0)] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]


def _freeze4(grid):
    return tuple(
        tuple(tuple(tuple(v for v in row) for row in plane) for plane in block)
        for block in grid
    )


def _residual_zero(value, rels: RelationSet | None) -> bool:
    if isinstance(value, MultiPoly) and rels is not None:
        return rels.normal_form(value).is_zero()
    return scalar_is_zero(value)


def _tensor_zero_mod(t: Tensor2 | Tensor3, rels: RelationSet | None) -> bool:
    if rels is None:
        return t.is_zero()
    if isinstance(t, Tensor2):
        return all(_residual_zero(v, rels) for _, _, v in t.entries())
    return all(_residual_zero(v, rels) for _, _, _, v in t.entries())


@dataclass(frozen=True)
class AxiomReport:
    skew_ok: bool
    leibniz_ok: bool
    jacobi_ok: bool
    residuals: tuple = ()

    @property
    def all_ok(self) -> bool:
        return self.skew_ok and self.leibniz_ok and self.jacobi_ok


class CoefficientBracket:
    """Shared storage/evaluation for double and modified brackets."""

    __slots__ = ("algebra", "coeffs", "params")

    def __init__(self, algebra: FDAlgebra, coeffs, params: tuple[str, ...] = ()):
        n = algebra.dim
        if len(coeffs) != n or any(
            len(p) != n or any(len(r) != n or len(r[0]) != n for r in p) for p in coeffs
        ):
            raise AlgebraError("coefficient tensor has wrong shape")
        self.algebra = algebra
        self.coeffs = _freeze4(coeffs)
        self.params = tuple(params)

    # -- evaluation -----------------------------------------------------------

    def eval_basis(self, i: int, j: int) -> Tensor2:
        return Tensor2.of(self.algebra, self.coeffs[i][j])

    def eval(self, x: AlgElement, y: AlgElement) -> Tensor2:
        if x.algebra != self.algebra or y.algebra != self.algebra:
            raise AlgebraError("elements from a different algebra")
        n = self.algebra.dim
        out = _zero_grid2(n)
        for i, xi in enumerate(x.coords):
            if scalar_is_zero(xi):
                continue
            for j, yj in enumerate(y.coords):
                if scalar_is_zero(yj):
                    continue
                c = xi * yj
                block = self.coeffs[i][j]
                for a in range(n):
                    for b in range(n):
                        v = block[a][b]
                        if not scalar_is_zero(v):
                            out[a][b] = out[a][b] + c * v
        return Tensor2.of(self.algebra, out)

    # -- linear structure (used to form general elements) ----------------------

    def _binary(self, other, op):
        if self.algebra != other.algebra:
            raise AlgebraError("brackets over different algebras")
        n = self.algebra.dim
        grid = [
            [
                [
                    [op(self.coeffs[i][j][a][b], other.coeffs[i][j][a][b]) for b in range(n)]
                    for a in range(n)
                ]
                for j in range(n)
            ]
            for i in range(n)
        ]
        params = tuple(dict.fromkeys(self.params + other.params))
        return type(self)(self.algebra, grid, params)

    def __add__(self, other):
        return self._binary(other, lambda p, q: p + q)

    def __sub__(self, other):
        return self._binary(other, lambda p, q: p - q)

    def scale(self, c: Scalar):
        n = self.algebra.dim
        grid = [
            [
                [[c * self.coeffs[i][j][a][b] for b in range(n)] for a in range(n)]
                for j in range(n)
            ]
            for i in range(n)
        ]
        return type(self)(self.algebra, grid, self.params)

    def is_zero(self) -> bool:
        return all(
            scalar_is_zero(v)
            for block in self.coeffs
            for plane in block
            for row in plane
            for v in row
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoefficientBracket):
            return NotImplemented
        return self.algebra == other.algebra and (self - other).is_zero()

    def flat_coeffs(self) -> list:
        """Coefficient tensor flattened in (i, j, a, b) lexicographic order."""
        return [
            v
            for block in self.coeffs
            for plane in block
            for row in plane
            for v in row
        ]

    # -- axiom machinery (shared) ----------------------------------------------

    def second_leibniz_residual(self, i: int, k: int, l: int) -> Tensor2:
        """{{e_i, e_k e_l}} - (e_k(x)1){{e_i, e_l}} - {{e_i, e_k}}(1(x)e_l)."""
        alg = self.algebra
        ek = alg.basis_element(k)
        el = alg.basis_element(l)
        prod = alg.basis_product(k, l)
        lhs = Tensor2.zero(alg)
        for m, c in enumerate(prod):
            if c != 0:
                lhs = lhs + self.eval_basis(i, m).scale(c)
        rhs = self.eval_basis(i, l).outer_left(ek) + self.eval_basis(i, k).outer_right(el)
        return lhs - rhs

    def check_second_leibniz(self, rels: RelationSet | None = None):
        """All-basis-triples check of the outer-structure Leibniz rule."""
        n = self.algebra.dim
        residuals = []
        for i in range(n):
            for k in range(n):
                for l in range(n):
                    r = self.second_leibniz_residual(i, k, l)
                    if not _tensor_zero_mod(r, rels):
                        residuals.append((("second", i, k, l), r))
        return residuals


class DoubleBracket(CoefficientBracket):
    """A candidate double (Poisson) bracket; axioms are checked, not assumed."""

    @staticmethod
    def zero(algebra: FDAlgebra) -> DoubleBracket:
        return DoubleBracket(algebra, _zero_grid4(algebra.dim))

    @staticmethod
    def from_entries(algebra: FDAlgebra, entries, params: tuple[str, ...] = ()) -> DoubleBracket:
        """Build from (i, j, a, b, coeff) tuples; unspecified entries are 0."""
        grid = _zero_grid4(algebra.dim)
        for i, j, a, b, c in entries:
            grid[i][j][a][b] = grid[i][j][a][b] + c
        return DoubleBracket(algebra, grid, params)

    # -- skew symmetry ---------------------------------------------------------

    def skew_residual(self, i: int, j: int) -> Tensor2:
        """{{e_i, e_j}} + {{e_j, e_i}}° (zero iff skew holds on the pair)."""
        return self.eval_basis(i, j) + self.eval_basis(j, i).flip()

    def check_skew(self, rels: RelationSet | None = None):
        n = self.algebra.dim
        residuals = []
        for i in range(n):
            for j in range(i, n):
                r = self.skew_residual(i, j)
                if not _tensor_zero_mod(r, rels):
                    residuals.append((("skew", i, j), r))
        return residuals

    # -- Leibniz ----------------------------------------------------------------

    def check_leibniz(self, rels: RelationSet | None = None, rng: random.Random | None = None):
        """Second-argument rule on all triples; first-argument rule spot-checked.

        The first-argument rule follows from skew + the second-argument rule, so
        it is not part of the constraint system; the spot check (random element
        triples) guards against convention drift.
        """
        residuals = list(self.check_second_leibniz(rels))
        rng = rng or random.Random(0)
        alg = self.algebra
        n = alg.dim
        for _ in range(4):
            a = alg.element([Fraction(rng.randint(-3, 3)) for _ in range(n)])
            b = alg.element([Fraction(rng.randint(-3, 3)) for _ in range(n)])
            c = alg.element([Fraction(rng.randint(-3, 3)) for _ in range(n)])
            lhs = self.eval(a * b, c)
            rhs = self.eval(b, c).inner_left(a) + self.eval(a, c).inner_right(b)
            r = lhs - rhs
            if not _tensor_zero_mod(r, rels):
                residuals.append((("first-spot", a.coords, b.coords, c.coords), r))
        return residuals

    # -- double Jacobi ------------------------------------------------------------

    def _bracket_into_first_leg(self, i: int, t: Tensor2) -> Tensor3:
        """{{e_i, t}}_L = sum t[a][b] {{e_i, e_a}} (x) e_b."""
        alg = self.algebra
        n = alg.dim
        out = _zero_grid3(n)
        for a, b, v in t.entries():
            block = self.coeffs[i][a]
            for c in range(n):
                for d in range(n):
                    w = block[c][d]
                    if not scalar_is_zero(w):
                        out[c][d][b] = out[c][d][b] + v * w
        return Tensor3.of(alg, out)

    def double_jacobiator(self, i: int, j: int, k: int) -> Tensor3:
        """{{e_i,{{e_j,e_k}}}}_L + tau123 {{e_j,{{e_k,e_i}}}}_L + tau132 {{e_k,{{e_i,e_j}}}}_L."""
        t1 = self._bracket_into_first_leg(i, self.eval_basis(j, k))
        t2 = self._bracket_into_first_leg(j, self.eval_basis(k, i)).tau123()
        t3 = self._bracket_into_first_leg(k, self.eval_basis(i, j)).tau132()
        return t1 + t2 + t3

    def jacobiator_element(self, x: AlgElement, y: AlgElement, z: AlgElement) -> Tensor3:
        """Trilinear extension of the jacobiator to arbitrary elements."""
        n = self.algebra.dim
        total = Tensor3.zero(self.algebra)
        for i, xi in enumerate(x.coords):
            if scalar_is_zero(xi):
                continue
            for j, yj in enumerate(y.coords):
                if scalar_is_zero(yj):
                    continue
                for k, zk in enumerate(z.coords):
                    if scalar_is_zero(zk):
                        continue
                    total = total + self.double_jacobiator(i, j, k).scale(xi * yj * zk)
        return total

    def check_jacobi(self, rels: RelationSet | None = None, collect: bool = True):
        n = self.algebra.dim
        residuals = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    t = self.double_jacobiator(i, j, k)
                    if not _tensor_zero_mod(t, rels):
                        residuals.append((("jacobi", i, j, k), t))
                        if not collect:
                            return residuals
        return residuals

    def check_all(
        self, rels: RelationSet | None = None, rng: random.Random | None = None
    ) -> AxiomReport:
        skew = self.check_skew(rels)
        leib = self.check_leibniz(rels, rng)
        jac = self.check_jacobi(rels)
        return AxiomReport(
            skew_ok=not skew,
            leibniz_ok=not leib,
            jacobi_ok=not jac,
            residuals=tuple(skew + leib + jac),
        )


# -- double derivations (double vector fields) ---------------------------------


@dataclass(frozen=True)
class DoubleDerivation:
    """A linear map A -> A(x)A, candidate member of Der(A, A(x)A) (outer structure)."""

    algebra: FDAlgebra
    images: tuple[Tensor2, ...]

    def __post_init__(self):
        if len(self.images) != self.algebra.dim:
            raise AlgebraError("need one image per basis element")

    @staticmethod
    def from_grids(algebra: FDAlgebra, grids) -> DoubleDerivation:
        return DoubleDerivation(algebra, tuple(Tensor2.of(algebra, g) for g in grids))

    @staticmethod
    def inner(m: Tensor2) -> DoubleDerivation:
        """The inner double derivation a -> a.m - m.a (outer actions)."""
        alg = m.algebra
        images = []
        for i in range(alg.dim):
            e = alg.basis_element(i)
            images.append(m.outer_left(e) - m.outer_right(e))
        return DoubleDerivation(alg, tuple(images))

    def apply(self, x: AlgElement) -> Tensor2:
        out = Tensor2.zero(self.algebra)
        for i, xi in enumerate(x.coords):
            if not scalar_is_zero(xi):
                out = out + self.images[i].scale(xi)
        return out

    def flat_coeffs(self) -> list:
        """Images flattened in (basis index, leg a, leg b) order."""
        return [v for img in self.images for row in img.grid for v in row]

    def leibniz_residuals(self):
        """delta(e_i e_j) - delta(e_i).e_j - e_i.delta(e_j) over all pairs."""
        alg = self.algebra
        n = alg.dim
        bad = []
        for i in range(n):
            for j in range(n):
                lhs = Tensor2.zero(alg)
                for m, c in enumerate(alg.basis_product(i, j)):
                    if c != 0:
                        lhs = lhs + self.images[m].scale(c)
                rhs = self.images[i].outer_right(alg.basis_element(j)) + self.images[
                    j
                ].outer_left(alg.basis_element(i))
                r = lhs - rhs
                if not r.is_zero():
                    bad.append(((i, j), r))
        return bad

    def is_derivation(self) -> bool:
        return not self.leibniz_residuals()


def double_derivation_check(delta: DoubleDerivation) -> bool:
    """True iff delta satisfies the outer-structure Leibniz rule on all pairs."""
    return delta.is_derivation()


def bracket_from_bivector(delta1: DoubleDerivation, delta2: DoubleDerivation) -> DoubleBracket:
    """Bracket of the bivector delta1 (x) delta2, antisymmetrized over leg swap.

    {{a1, a2}}~ = delta2(a2)' delta1(a1)'' (x) delta1(a1)' delta2(a2)'' and
    {{-,-}} = {{-,-}}~ - flip o {{-,-}}~ o (argument swap).  The result always
    satisfies skew and the outer Leibniz rule when the inputs are derivations.
    """
    if delta1.algebra != delta2.algebra:
        raise AlgebraError("derivations over different algebras")
    if not delta1.is_derivation() or not delta2.is_derivation():
        raise AlgebraError("bracket_from_bivector requires genuine double derivations")
    alg = delta1.algebra
    n = alg.dim

    def tilde(i: int, j: int) -> Tensor2:
        d1 = delta1.images[i]
        d2 = delta2.images[j]
        out = _zero_grid2(n)
        for a, b, v in d1.entries():  # delta1(a1) = v * e_a (x) e_b
            for c, d, w in d2.entries():  # delta2(a2) = w * e_c (x) e_d
                coeff = v * w
                row1 = alg.mul[c][b]  # first leg: delta2' delta1''
                row2 = alg.mul[a][d]  # second leg: delta1' delta2''
                for p in range(n):
                    if row1[p] == 0:
                        continue
                    cp = coeff * row1[p]
                    for q in range(n):
                        if row2[q] != 0:
                            out[p][q] = out[p][q] + cp * row2[q]
        return Tensor2.of(alg, out)

    grid = _zero_grid4(n)
    for i in range(n):
        for j in range(n):
            t = tilde(i, j) - tilde(j, i).flip()
            for a in range(n):
                for b in range(n):
                    grid[i][j][a][b] = t.grid[a][b]
    return DoubleBracket(alg, grid)
