"""Fusion rings and why some theories cannot be trivially gapped.

The Tambara-Yamagami ring adjoins one duality line N to a group's worth of
invertible lines; its quantum dimension is sqrt(|G|).  When that is not an
integer there is no fiber functor, and when a ring's rank is not a perfect
square the theory cannot factor as T* x T.  Both arguments run on nothing
but the fusion multiplicities.
"""

from finsym.fusion import (
    RingElement,
    fiber_functor_obstruction,
    group_ring,
    pf_dimensions,
    quotient_defect_composition,
    square_root_obstruction,
    tambara_yamagami,
)
from finsym.groups import named_group


def show_ring(name, ring):
    dims = pf_dimensions(ring)
    print(f"  {name}: labels {ring.labels}")
    print(f"    PF dimensions: {[round(d, 12) for d in dims]}")
    ff = fiber_functor_obstruction(ring)
    print(f"    fiber functor: {ff.verdict}"
          + (f" (witness {ff.witness}: {ff.detail})" if ff.witness else ""))


print("== The Ising fusion ring is TY(Z2) ==")
ty2 = tambara_yamagami(named_group("Z2"))
one = RingElement(ty2, (1, 0, 0))
g = RingElement(ty2, (0, 1, 0))
x = RingElement(ty2, (0, 0, 1))
print(f"  g*g = {g * g},  g*x = {g * x},  x*x = {x * x}")
show_ring("TY(Z2)", ty2)

print()
print("== Larger duality rings ==")
for name in ("Z3", "Z4", "Z2xZ2", "Z5"):
    show_ring(f"TY({name})", tambara_yamagami(named_group(name)))
print("  (sqrt of a perfect square is an integer, so TY(Z4) and TY(Z2xZ2)")
print("   pass the dimension test; the obstruction is one-sided.)")

print()
print("== The square-root obstruction ==")
for name in ("Z2", "Z3", "Z4"):
    ring = group_ring(named_group(name))
    verdict = square_root_obstruction(ring)
    print(f"  C[{name}] rank {ring.rank}: {verdict.verdict} ({verdict.detail})")

print()
print("== Quotient-defect composition ==")
for name in ("Z2", "Z3", "S3"):
    elt = quotient_defect_composition(named_group(name))
    print(f"  {name}: delta* o delta = {elt}; squared = {elt * elt}")
