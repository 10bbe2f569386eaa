"""Induced Poisson structures on representation spaces.

A double bracket on A induces {a_ij, b_pq} = {{a,b}}'_pj {{a,b}}''_iq on the
coordinate ring of Rep_n(A).  For the distinguished bracket
{{e0,e1}} = A e0(x)e0 on the upper-triangular algebra the structure is
verified on explicit charts:

* Rep2: exact, over Q[c,s,lam,mu]/(c^2+s^2-1); the bivector in coordinates
  (theta, lam, mu) is the single block {lam, mu} = A lam^2.
* Rep3 (rank-1 branch): spherical chart (theta, phi, ca, cb, cg, cd); the
  blocks are {ca,cg} = A ca^2, {ca,cd} = {cb,cg} = A ca cb, {cb,cd} = A cb^2,
  verified numerically at seeded on-variety samples (and, with this frame,
  even exactly).
"""

from doublepoisson import (
    chart_consistency,
    induce,
    jacobi_check_bivector,
    register_chart_rep2_a2,
    register_chart_rep3_a2,
)
from doublepoisson.families import a2_alpha_bracket_symbolic

db, _ = a2_alpha_bracket_symbolic("A")
table2 = induce(db, 2)
print("{(e0)_11, (e1)_11} =", table2.entry("e0_11", "e1_11"))
print("{(e0)_11, (e0)_22} =", table2.entry("e0_11", "e0_22"))

chart2 = register_chart_rep2_a2()
print("\nRep2 chart: rho(e0)_12 =", chart2.substitution["e0_12"])
report = chart_consistency(chart2, table2, mode="exact")
print("Rep2 exact chart consistency:", report.ok)
print("Rep2 bivector {lam, mu} =", chart2.pi_entry(1, 2))
print("Rep2 bivector satisfies Jacobi:", jacobi_check_bivector(chart2, mode="exact"))

table3 = induce(db, 3)
chart3 = register_chart_rep3_a2()
report3 = chart_consistency(chart3, table3, mode="numeric", samples=100, seed=7, tol=1e-9)
print("\nRep3 frame:", chart3.frame)
print("Rep3 numeric chart consistency:", report3.ok,
      f"(max residual {report3.max_residual:.2e} over 100 samples)")
print("Rep3 bivector satisfies Jacobi at samples:",
      jacobi_check_bivector(chart3, mode="numeric", samples=100, seed=7))
print("Rep3 bivector {ca, cg} =", chart3.pi_entry(2, 4))
