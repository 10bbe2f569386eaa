"""Modified double Poisson brackets and the induced trace-space structure.

Modified brackets drop skew-symmetry and instead demand both Leibniz rules,
skewness of m o {{-,-}} modulo commutators, and the Jacobi identity for
m o {{-,-}}.  On the upper-triangular algebra the classical classification is
the seven-parameter family (alpha..eta); exact computation shows the space is
actually eight-dimensional -- the extra direction is the flip-swap image of
the kappa-direction, equivalently the gamma-direction of the ordinary double
bracket family, which the seven-parameter family cannot reach.
"""

from fractions import Fraction

from doublepoisson import (
    a2_double_family,
    a2_modified_family,
    a2_modified_family_symbolic,
    flat_bracket,
    h0_jacobi_check,
    h0_skew_check,
    in_span,
    make_a2,
    solve_modified,
)

mb, ring = a2_modified_family_symbolic()
print("classical 7-parameter family:")
print("  both Leibniz rules hold identically:", not mb.check_leibniz_both())
print("  H0-skew holds identically:", not h0_skew_check(mb))
print("  H0-Jacobi holds identically:", not h0_jacobi_check(mb))
table = flat_bracket(mb)
print("  induced bracket on the 2-dim trace space is zero:", table.is_zero())

a2 = make_a2()
variety = solve_modified(a2)
print("\nsolver: dimension", variety.dim, "with quadratic constraints",
      list(map(str, variety.quadratic_constraints)))

fam = []
for k in range(7):
    args = [Fraction(0)] * 7
    args[k] = Fraction(1)
    fam.append(a2_modified_family(*args).flat_coeffs())
null = [b.flat_coeffs() for b in variety.nullspace_basis]
print("classical family inside the solution space:", all(in_span(null, v) for v in fam))

gamma_dir = a2_double_family(Fraction(0), Fraction(0), Fraction(1))
print("gamma-direction double bracket inside the solution space:",
      in_span(null, gamma_dir.flat_coeffs()))
print("gamma-direction inside the classical family:",
      in_span(fam, gamma_dir.flat_coeffs()),
      "<- this is why the classical count of 7 is one short")
