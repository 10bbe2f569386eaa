"""Classification engine for double and modified brackets.

Assembles the linear axioms (skew + outer Leibniz, or both Leibniz rules plus
H0-skew in the modified case) as a sparse system over the unknown coefficient
tensor C[i][j][a][b], computes an exact nullspace, and extracts the residual
quadratic Jacobi constraints in the nullspace parameters t0, t1, ...

The parameter order is the elimination order of the nullspace engine (free
columns ascending), which is deterministic but not canonical; golden tests
reparametrize to the classical parameters via documented coefficient slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import FDAlgebra, commutator_subspace
from .brackets import CoefficientBracket, DoubleBracket
from .inner import inner_bracket, wedge_basis
from .linalg import nullspace_of_rows, rank_of_vectors, subspaces_equal
from .modified import ModifiedBracket
from .poly import MultiPoly, PolyRing
from .tensors import Tensor2


@dataclass(frozen=True)
class LinearVariety:
    """General solution of the linear axioms plus residual quadratic constraints.

    Every nullspace point satisfies the linear axioms; a point yields a bracket
    satisfying the full axiom set iff it also kills every quadratic constraint.
    """

    algebra: FDAlgebra
    parameter_names: tuple[str, ...]
    nullspace_basis: tuple[CoefficientBracket, ...]
    quadratic_constraints: tuple[MultiPoly, ...]
    modified: bool = False

    @property
    def dim(self) -> int:
        return len(self.nullspace_basis)

    def ring(self) -> PolyRing:
        return PolyRing(self.parameter_names)

    def general_element(self) -> CoefficientBracket:
        """sum_k t_k * (basis bracket k), with MultiPoly coefficients."""
        ring = self.ring()
        n = self.algebra.dim
        cls = ModifiedBracket if self.modified else DoubleBracket
        total = cls.zero(self.algebra).scale(ring.zero())
        for name, basis in zip(self.parameter_names, self.nullspace_basis):
            total = total + basis.scale(ring.var(name))
        return total

    def point(self, values) -> CoefficientBracket:
        """Rational specialization of the general element."""
        cls = ModifiedBracket if self.modified else DoubleBracket
        total = cls.zero(self.algebra)
        for v, basis in zip(values, self.nullspace_basis):
            total = total + basis.scale(Fraction(v))
        return total


def _flat_index(n: int, i: int, j: int, a: int, b: int) -> int:
    return ((i * n + j) * n + a) * n + b


def _skew_rows(algebra: FDAlgebra):
    """C[i][j][a][b] + C[j][i][b][a] = 0 for every index tuple."""
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            for a in range(n):
                for b in range(n):
                    left = _flat_index(n, i, j, a, b)
                    right = _flat_index(n, j, i, b, a)
                    if left > right:
                        continue
                    if left == right:
                        yield {left: 2}
                    else:
                        yield {left: 1, right: 1}


def _second_leibniz_rows(algebra: FDAlgebra):
    """{{e_i, e_k e_l}} = (e_k(x)1){{e_i,e_l}} + {{e_i,e_k}}(1(x)e_l), componentwise."""
    n = algebra.dim
    mul = algebra.mul
    for i in range(n):
        for k in range(n):
            for l in range(n):
                for c in range(n):
                    for d in range(n):
                        row: dict[int, Fraction] = {}

                        def add(idx: int, v: Fraction):
                            s = row.get(idx, Fraction(0)) + v
                            if s == 0:
                                row.pop(idx, None)
                            else:
                                row[idx] = s

                        for m in range(n):
                            if mul[k][l][m] != 0:
                                add(_flat_index(n, i, m, c, d), mul[k][l][m])
                        for a in range(n):
                            if mul[k][a][c] != 0:
                                add(_flat_index(n, i, l, a, d), -mul[k][a][c])
                        for b in range(n):
                            if mul[b][l][d] != 0:
                                add(_flat_index(n, i, k, c, b), -mul[b][l][d])
                        if row:
                            yield row


def _first_leibniz_rows(algebra: FDAlgebra):
    """{{e_k e_l, e_i}} = (1(x)e_k){{e_l,e_i}} + {{e_k,e_i}}(e_l(x)1), componentwise."""
    n = algebra.dim
    mul = algebra.mul
    for k in range(n):
        for l in range(n):
            for i in range(n):
                for c in range(n):
                    for d in range(n):
                        row: dict[int, Fraction] = {}

                        def add(idx: int, v: Fraction):
                            s = row.get(idx, Fraction(0)) + v
                            if s == 0:
                                row.pop(idx, None)
                            else:
                                row[idx] = s

                        for m in range(n):
                            if mul[k][l][m] != 0:
                                add(_flat_index(n, m, i, c, d), mul[k][l][m])
                        for b in range(n):
                            if mul[k][b][d] != 0:
                                add(_flat_index(n, l, i, c, b), -mul[k][b][d])
                        for a in range(n):
                            if mul[a][l][c] != 0:
                                add(_flat_index(n, k, i, a, d), -mul[a][l][c])
                        if row:
                            yield row


def _h0_skew_rows(algebra: FDAlgebra):
    """Complement components of m({{e_i,e_j}}) + m({{e_j,e_i}}) must vanish."""
    n = algebra.dim
    mul = algebra.mul
    sub = commutator_subspace(algebra)
    # flat-projection of each basis product e_a e_b, as a row over A_flat coords
    flat_products = {}
    for a in range(n):
        for b in range(n):
            flat_products[(a, b)] = sub.project_flat(mul[a][b])
    for i in range(n):
        for j in range(i, n):
            for comp in range(sub.flat_dim):
                row: dict[int, Fraction] = {}
                for a in range(n):
                    for b in range(n):
                        coeff = flat_products[(a, b)][comp]
                        if coeff == 0:
                            continue
                        for idx in (
                            _flat_index(n, i, j, a, b),
                            _flat_index(n, j, i, a, b),
                        ):
                            s = row.get(idx, Fraction(0)) + coeff
                            if s == 0:
                                row.pop(idx, None)
                            else:
                                row[idx] = s
                if row:
                    yield row


def _vectors_to_variety(algebra: FDAlgebra, vectors, modified: bool) -> LinearVariety:
    n = algebra.dim
    cls = ModifiedBracket if modified else DoubleBracket
    basis = []
    for vec in vectors:
        grid = [
            [
                [[vec[_flat_index(n, i, j, a, b)] for b in range(n)] for a in range(n)]
                for j in range(n)
            ]
            for i in range(n)
        ]
        basis.append(cls(algebra, grid))
    names = tuple(f"t{k}" for k in range(len(basis)))
    return LinearVariety(algebra, names, tuple(basis), (), modified)


def solve_linear(algebra: FDAlgebra) -> LinearVariety:
    """Nullspace of the skew + second-argument-Leibniz system on C[i][j][a][b]."""
    n = algebra.dim

    def rows():
        yield from _skew_rows(algebra)
        yield from _second_leibniz_rows(algebra)

    vectors = nullspace_of_rows(rows(), n**4)
    return _vectors_to_variety(algebra, vectors, modified=False)


def solve_modified_linear(algebra: FDAlgebra) -> LinearVariety:
    """Nullspace of both Leibniz rules plus the (linear) H0-skew condition."""
    n = algebra.dim

    def rows():
        yield from _second_leibniz_rows(algebra)
        yield from _first_leibniz_rows(algebra)
        yield from _h0_skew_rows(algebra)

    vectors = nullspace_of_rows(rows(), n**4)
    return _vectors_to_variety(algebra, vectors, modified=True)


def _dedup_scalar_multiples(polys):
    kept: list[MultiPoly] = []
    for p in polys:
        if p.is_zero():
            continue
        lead = p.leading_monomial()
        q = p * (Fraction(1) / p.coefficient(lead))
        if all(q != other for other in kept):
            kept.append(q)
    return kept


def jacobi_constraints(variety: LinearVariety) -> LinearVariety:
    """Quadratic constraints from the double Jacobi identity on the general element.

    The symbolic general element is pushed through the jacobiator on every
    basis triple; the distinct nonzero coefficient polynomials (deduplicated up
    to scalar multiples) generate the constraint set.
    """
    if variety.dim == 0:
        return variety
    general = variety.general_element()
    n = variety.algebra.dim
    polys = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t = general.double_jacobiator(i, j, k)
                polys.extend(v for _, _, _, v in t.entries())
    constraints = tuple(_dedup_scalar_multiples(polys))
    return LinearVariety(
        variety.algebra,
        variety.parameter_names,
        variety.nullspace_basis,
        constraints,
        variety.modified,
    )


def h0_jacobi_constraints(variety: LinearVariety) -> LinearVariety:
    """Quadratic constraints from the modified Jacobi identity (H0 bracket)."""
    if variety.dim == 0:
        return variety
    general = variety.general_element()
    alg = variety.algebra
    n = alg.dim
    basis = [alg.basis_element(i) for i in range(n)]
    polys = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r = (
                    general.multiplied(basis[i], general.multiplied(basis[j], basis[k]))
                    - general.multiplied(basis[j], general.multiplied(basis[i], basis[k]))
                    - general.multiplied(general.multiplied(basis[i], basis[j]), basis[k])
                )
                polys.extend(c for c in r.coords if isinstance(c, MultiPoly))
    constraints = tuple(_dedup_scalar_multiples(polys))
    return LinearVariety(
        alg,
        variety.parameter_names,
        variety.nullspace_basis,
        constraints,
        variety.modified,
    )


def solve_modified(algebra: FDAlgebra) -> LinearVariety:
    """Full modified-bracket classification: linear part + quadratic constraints."""
    return h0_jacobi_constraints(solve_modified_linear(algebra))


def solve(algebra: FDAlgebra) -> LinearVariety:
    """Full double-bracket classification: linear part + quadratic constraints."""
    return jacobi_constraints(solve_linear(algebra))


# -- innerness probes ------------------------------------------------------------


def double_derivation_space(algebra: FDAlgebra):
    """(basis of Der(A, A(x)A), inner generators a -> a.m - m.a over basis m).

    The derivation space is the nullspace of the outer-structure Leibniz
    system on maps A -> A(x)A; both lists come back as DoubleDerivation
    values (the inner generators are not linearly independent in general).
    """
    from .brackets import DoubleDerivation

    n = algebra.dim
    mul = algebra.mul

    def flat(i: int, a: int, b: int) -> int:
        return (i * n + a) * n + b

    def rows():
        for i in range(n):
            for j in range(n):
                for c in range(n):
                    for d in range(n):
                        row: dict[int, Fraction] = {}

                        def add(idx, v):
                            s = row.get(idx, Fraction(0)) + v
                            if s == 0:
                                row.pop(idx, None)
                            else:
                                row[idx] = s

                        for m in range(n):
                            if mul[i][j][m] != 0:
                                add(flat(m, c, d), mul[i][j][m])
                        for b in range(n):
                            if mul[b][j][d] != 0:
                                add(flat(i, c, b), -mul[b][j][d])
                        for a in range(n):
                            if mul[i][a][c] != 0:
                                add(flat(j, a, d), -mul[i][a][c])
                        if row:
                            yield row

    der_basis = []
    for vec in nullspace_of_rows(rows(), n**3):
        grids = [
            [[vec[flat(i, a, b)] for b in range(n)] for a in range(n)]
            for i in range(n)
        ]
        der_basis.append(DoubleDerivation.from_grids(algebra, grids))

    inner_gens = []
    for p in range(n):
        for q in range(n):
            m = Tensor2.of(
                algebra,
                [
                    [Fraction(1) if (a, b) == (p, q) else Fraction(0) for b in range(n)]
                    for a in range(n)
                ],
            )
            inner_gens.append(DoubleDerivation.inner(m))
    return der_basis, inner_gens


def outer_double_derivation_dim(algebra: FDAlgebra) -> tuple[int, int, int]:
    """(dim Der(A, A(x)A), dim Inn(A, A(x)A), dim of the quotient).

    The difference of the first two is the HH^1(A, A(x)A) dimension probe.
    """
    der_basis, inner_gens = double_derivation_space(algebra)
    dim_der = len(der_basis)
    dim_inner = rank_of_vectors([d.flat_coeffs() for d in inner_gens])
    return dim_der, dim_inner, dim_der - dim_inner


def inner_bracket_span(algebra: FDAlgebra) -> list[DoubleBracket]:
    """Inner brackets of the wedge basis (their span is the inner-bracket space)."""
    return [inner_bracket(w) for w in wedge_basis(algebra)]


def inner_bracket_span_equality(algebra: FDAlgebra) -> bool:
    """True iff the solve_linear nullspace equals the span of inner brackets."""
    nullspace = [db.flat_coeffs() for db in solve_linear(algebra).nullspace_basis]
    inner = [db.flat_coeffs() for db in inner_bracket_span(algebra)]
    return subspaces_equal(nullspace, inner)
