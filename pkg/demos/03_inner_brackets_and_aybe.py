"""Inner double brackets from wedges and the associative Yang-Baxter equation.

Every r in Lambda^2 A generates the bracket {{x,y}}_r = [[r,x]_in, y]_out.
The obstruction J(r) = r13 r12 + r23 r13 - r12 r23 controls the double Jacobi
identity: J(r) = 0 is sufficient (the AYBE), while the precise criterion is
the triple-commutator condition [[[J(r),x]_1,y]_2,z]_3 = 0.
"""

from doublepoisson import (
    WedgeElement,
    aybe_obstruction,
    aybe_solve,
    inner_bracket,
    make_a2,
    weak_jacobi_condition,
)

a2 = make_a2()
e0, e1 = a2.basis_element(0), a2.basis_element(1)
one = a2.unit_element()

r = WedgeElement.wedge(e0, e1)
db = inner_bracket(r)
print("r = e0 ^ e1")
print("  {{e0,e1}}_r =", db.eval_basis(0, 1))
print("  J(r) = 0?", aybe_obstruction(r).is_zero())

r2 = WedgeElement.wedge(one, e0)
db2 = inner_bracket(r2)
print("\nr = 1 ^ e0")
print("  {{e0,e1}}_r =", db2.eval_basis(0, 1))
print("  J(r) =", aybe_obstruction(r2))
print("  J(r) is nonzero, yet the triple-commutator condition still holds:",
      weak_jacobi_condition(r2)[0])
print("  so the bracket satisfies double Jacobi anyway:",
      db2.check_all().all_ok)

r3 = WedgeElement.wedge(one, e1)
print("\nr = 1 ^ e1 violates the weak condition:", weak_jacobi_condition(r3)[0])

# the full AYBE system over span{1^e0, 1^e1, e0^e1} with coordinates (a,b,c),
# coefficients collected over the unit-extended basis (1, e0, e1)
system = aybe_solve(a2, [r2, r3, r], ("a", "b", "c"), leg_basis=[one, e0, e1])
print("\nAYBE system on a(1^e0) + b(1^e1) + c(e0^e1):")
for eq in system.equations:
    print("  ", eq, "= 0")
print("solution line (0,0,c):", system.satisfied_by((0, 0, 5)))
print("solution line (m,0,m):", system.satisfied_by((3, 0, 3)))
print("non-solution (1,1,0):", system.satisfied_by((1, 1, 0)))
