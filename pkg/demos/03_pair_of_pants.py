"""The 2d finite gauge theory as a functor: states, pants, and traces.

The circle's state space is spanned by holonomies; the pair of pants
multiplies them like the group algebra; the cylinder is the identity and
its trace reproduces the closed torus.  Gluing handles onto a sphere
recovers the bundle counts of every closed surface.
"""

from fractions import Fraction

from finsym.groups import FiniteAbelianGroup, abelian_cayley
from finsym.pathintegral import surface_gauge_count
from finsym.tqft2d import (
    bordism_matrix,
    cap,
    closed_surface,
    copants_bordism,
    cup,
    cylinder,
    glue,
    pants_bordism,
    solve_problem_one,
    trace_check,
)

Z2 = FiniteAbelianGroup([2])
Z3 = FiniteAbelianGroup([3])

print("== Problem: evaluate the theory for Z2 on the pair of pants ==")
report = solve_problem_one(Z2)
print(f"  dim Z(S^1) = {report['state_space_dim']}")
print(f"  basis = {report['state_space_basis']}")
print("  pants matrix (rows: waist holonomy, cols: cuff pairs):")
for row in report["pants"].entries:
    print("   ", [str(x) for x in row])
print("  co-pants matrix:")
for row in report["copants"].entries:
    print("   ", [str(x) for x in row])
print(f"  cylinder is the identity: {report['cylinder_is_identity']}")
tr = report["trace_check"]
print(f"  Tr(cylinder) = {tr.cylinder_trace} = closed torus = {tr.closed_torus_value}")

print()
print("== The normalization, in one line ==")
print("  every bordism carries 1/|H^0(W, incoming boundary)|;")
print("  that makes the cylinder the identity and the trace identity hold.")

print()
print("== Closed surfaces from handle gluing ==")
for group in (Z2, Z3):
    for genus in (0, 1, 2):
        b = cap()
        for _ in range(genus):
            b = glue(glue(b, copants_bordism()), pants_bordism())
        b = glue(b, cup())
        glued = bordism_matrix(b, group).scalar()
        preset_scalar = bordism_matrix(closed_surface(genus), group).scalar()
        bundles = surface_gauge_count(abelian_cayley(group), genus)
        print(f"  {group}, genus {genus}: glued {glued}, preset {preset_scalar}, "
              f"bundle count {bundles}")
        assert glued == preset_scalar == bundles

print()
print("== Caps and traces for a larger group ==")
print(f"  Z(S^2) for Z3 = {bordism_matrix(glue(cap(), cup()), Z3).scalar()} "
      f"(= 1/|G| = {Fraction(1, 3)})")
print(f"  two-circle trace check: {trace_check(2, Z2)}")
