"""On matrix algebras, every double bracket is inner.

Two independent probes confirm it exactly:
  * the solver nullspace (all double brackets) coincides with the span of the
    inner brackets generated by the wedge basis of Lambda^2 A, and
  * the space of double derivations Der(A, A(x)A) equals its inner subspace,
    i.e. the HH^1(A, A(x)A) dimension probe reports 0.

The upper-triangular algebra is different on both counts: it carries a
non-inner double bracket (the beta-direction of its classified family).
"""

from doublepoisson import (
    inner_bracket_span_equality,
    make_a2,
    outer_double_derivation_dim,
    resolve_preset,
)

for name in ("mat1", "mat2", "mat1+mat1"):
    alg = resolve_preset(name)
    dims = outer_double_derivation_dim(alg)
    print(f"{name}: dim Der = {dims[0]}, dim Inn = {dims[1]}, dim outer = {dims[2]};",
          "solver span == inner span:", inner_bracket_span_equality(alg))

a2 = make_a2()
dims = outer_double_derivation_dim(a2)
print(f"\na2:   dim Der = {dims[0]}, dim Inn = {dims[1]}, dim outer = {dims[2]};",
      "solver span == inner span:", inner_bracket_span_equality(a2))
print("(the beta-direction of the a2 family is a double bracket that no wedge produces)")
