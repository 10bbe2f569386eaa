"""Classify all double brackets on an algebra from scratch.

The solver assembles the skew and Leibniz axioms as an exact linear system on
the unknown coefficient tensor C[i][j][a][b], computes its nullspace, and then
extracts the residual quadratic constraints imposed by the double Jacobi
identity on the nullspace parameters.
"""

from fractions import Fraction

from doublepoisson import jacobi_constraints, make_a2, solve_linear
from doublepoisson.families import A2_DOUBLE_PARAM_SLOTS

a2 = make_a2()
variety = jacobi_constraints(solve_linear(a2))
print("nullspace dimension:", variety.dim)
print("solver parameters:", variety.parameter_names)
print("quadratic constraints:", [str(q) for q in variety.quadratic_constraints])

# The solver's parameters t0, t1, t2 come from elimination order.  The family
# parameters (alpha, beta, gamma) are read off fixed coefficient slots:
general = variety.general_element()
for name, (i, j, a, b) in A2_DOUBLE_PARAM_SLOTS.items():
    print(f"{name} = C[{i}][{j}][{a}][{b}] =", general.coeffs[i][j][a][b])

print("\ngeneral {{e0,e1}} =", general.eval_basis(0, 1))
print("general {{e0,e0}} =", general.eval_basis(0, 0))
print("general {{e1,e1}} =", general.eval_basis(1, 1))

# substitute a rational point on the constraint variety and double-check
point = variety.point((Fraction(2), Fraction(-2), Fraction(2)))  # gamma^2 + alpha*beta = 0
print("\npoint on the constraint conic passes all axioms:", point.check_all().all_ok)
