"""Line lattices, abelian anyons, chiral defects, and parity anomalies.

Everything here is exact arithmetic in Q/Z: which Wilson/'t Hooft lines a
quadratic refinement selects, the spins and braiding of the minimal Z_N
theory, how non-invertible chiral defects fuse, and when theta = pi is
anomalous.
"""

from fractions import Fraction

from finsym.anomaly import (
    ChiralAngle,
    MinimalTFT,
    allowed_lines,
    chiral_fuse,
    defect_quantum_dim,
    flux_projector_action,
    fractional_instanton,
    gauss_sum,
    gauss_sum_direct,
    minimal_tft_data,
    ym_theta_pi_anomaly,
)
from finsym.groups import FiniteAbelianGroup
from finsym.quadratic import QuadraticForm

Z2 = FiniteAbelianGroup([2])

print("== Line lattices for gauge group variants of su(2) ==")
cases = [
    ("electric polarization (A' = 0)", allowed_lines(Z2, [], {(0,): 0})),
    ("magnetic, untwisted (A' = Z2, q = 0)",
     allowed_lines(Z2, [(1,)], QuadraticForm(Z2, [0]))),
    ("magnetic, twisted (A' = Z2, q = 1/4)",
     allowed_lines(Z2, [(1,)], QuadraticForm(Z2, [Fraction(1, 4)]))),
]
for label, lattice in cases:
    print(f"  {label}: pairs (m, e) = {lattice.pairs}")

print()
print("== Minimal Z_N theories ==")
for n, p in ((2, 1), (3, 1), (4, 1), (5, 2)):
    table = minimal_tft_data(MinimalTFT(n, p))
    print(f"  N={n}, p={p}: spins {[str(s) for s in table.spins]}, "
          f"charges {list(table.charges)}")
print(f"  sphere value 1/sqrt(N): N=2 gives {defect_quantum_dim(2):.15f}")
print(f"  flux projector at N=4: m=0 -> {flux_projector_action(4, 0)}, "
      f"m=2 -> {flux_projector_action(4, 2)}")

print()
print("== Fusing chiral defects ==")
quarter = ChiralAngle.of(1, 4)
result, condensed = chiral_fuse(quarter, quarter)
print(f"  1/4 x 1/4 -> {result.value} with a Z{condensed} gauged at the junction")
third = ChiralAngle.of(1, 3)
result, condensed = chiral_fuse(third, ChiralAngle.of(2, 3))
print(f"  1/3 x 2/3 -> {result.value} with a Z{condensed} gauged (inverse angles)")

print()
print("== theta = pi and fractional instantons ==")
for n in range(2, 9):
    verdict = ym_theta_pi_anomaly(n)
    tail = "anomalous" if verdict.anomalous else f"counterterm k={verdict.counterterm}"
    print(f"  SU({n}): {tail}")
print(f"  fractional instanton number for N=2, P=1: {fractional_instanton(2, 1)}")

print()
print("== Gauss-sum self-duality ==")
for n, p in ((4, 1), (5, 2), (9, 4)):
    direct = gauss_sum_direct(n, p)
    print(f"  N={n}, p={p}: exact {gauss_sum(n, p)}, "
          f"direct {direct.real:+.12f}{direct.imag:+.2e}j")
