"""Define exact algebras and verify double-bracket axioms.

The running example is the 3-dimensional algebra of upper-triangular 2x2
matrices, with basis (e0, e1, e2), unit e1 + e2 and relations
e1 e0 = e0 e2 = e0,  e0 e1 = e2 e0 = e0^2 = 0.
"""

from fractions import Fraction

from doublepoisson import (
    a2_double_family,
    a2_double_family_symbolic,
    commutator,
    commutator_subspace,
    make_a2,
    make_matrix_algebra,
)

a2 = make_a2()
e0, e1, e2 = (a2.basis_element(i) for i in range(3))
print("algebra:", a2)
print("e1*e0 =", e1 * e0)
print("e0*e1 =", e0 * e1)
print("[e1, e0] =", commutator(e1, e0))

sub = commutator_subspace(a2)
print("\n[A,A] has dimension", sub.dim, "so the trace space A_flat has dimension", sub.flat_dim)

# The general double bracket on this algebra carries three parameters
# (alpha, beta, gamma); the double Jacobi identity demands g^2 + a*b = 0.
db, ring = a2_double_family_symbolic()
report = db.check_all()
print("\nsymbolic family: skew", report.skew_ok, "| leibniz", report.leibniz_ok,
      "| jacobi", report.jacobi_ok)
print("jacobi residual coefficients are all multiples of:", "g^2 + a*b")

on_conic = a2_double_family(Fraction(1), Fraction(-1), Fraction(1))
off_conic = a2_double_family(Fraction(1), Fraction(1), Fraction(1))
print("\npoint (1,-1,1) with 1 + (1)(-1) = 0 passes everything:", on_conic.check_all().all_ok)
print("point (1,1,1) with 1 + 1 != 0 fails Jacobi:", not off_conic.check_all().jacobi_ok)

# matrix algebras come with the matrix-unit basis
m2 = make_matrix_algebra(2)
print("\nMat2 basis:", m2.basis_names)
print("E12 * E21 =", m2.basis_element(1) * m2.basis_element(2))
