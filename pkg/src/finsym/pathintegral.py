"""Groupoid-cardinality path integrals for finite homotopy targets.

For the target B^nA on a closed M the mapping space has homotopy groups
pi_q = H^{n-q}(M; A), so its homotopy cardinality is the alternating
product prod_q |H^{n-q}(M; A)|^{(-1)^q}.  That product is adopted as the
partition function for every n; an independent cochain-groupoid oracle
(#Z^n weighted by the gauge tower |C^{n-1}|, |C^{n-2}|, ...) validates it
at desk scale.  Nonabelian gauge groups are supported on surfaces only,
where the partition function is a normalized count of relation-satisfying
tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from . import complexes
from .complexes import ChainComplex, cohomology, count_cocycles, is_closed
from .groups import FiniteAbelianGroup, FiniteGroup
from .limits import check_enum


@dataclass(frozen=True)
class PiFiniteTarget:
    """Either BG for a finite group G (degree 1) or B^nA for abelian A."""

    group: FiniteGroup | FiniteAbelianGroup
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("target degree must be >= 1")
        if isinstance(self.group, FiniteGroup) and self.degree != 1:
            raise ValueError("nonabelian targets only exist in degree 1")


def _require_zero_weight(weight) -> None:
    # Hook for Dijkgraaf-Witten cocycle weights; only the zero weight is
    # implemented, anything else is rejected rather than silently ignored.
    if weight is not None:
        raise ValueError("nonzero topological weights are not supported")


def em_partition(
    m: ChainComplex,
    coeffs: FiniteAbelianGroup,
    n: int,
    dim: int | None = None,
    weight=None,
) -> Fraction:
    """Partition function of the B^nA theory on a closed complex.

    Returns prod_{q=0}^{n} |H^{n-q}(m; A)|^{(-1)^q} as an exact rational;
    for n = 2 this is #H^2 * #H^0 / #H^1.
    """
    _require_zero_weight(weight)
    if n < 1:
        raise ValueError("n must be >= 1")
    if dim is not None and dim != m.top_dim:
        raise ValueError(f"complex has dimension {m.top_dim}, not {dim}")
    if not is_closed(m):
        raise ValueError("em_partition requires a closed complex")
    value = Fraction(1)
    for q in range(n + 1):
        deg = n - q
        order = cohomology(m, coeffs, deg).order if deg <= m.top_dim else 1
        value *= Fraction(order) if q % 2 == 0 else Fraction(1, order)
    return value


def em_partition_bruteforce(
    m: ChainComplex, coeffs: FiniteAbelianGroup, n: int, limit=None
) -> Fraction:
    """Independent oracle: cochain-level groupoid cardinality.

    Counts degree-n cocycles exhaustively and weights by the full gauge
    tower: #Z^n * prod_{k<n} |C^k|^{(-1)^{n-k}}.  Agrees with em_partition
    because #H^q telescopes against coboundary counts.
    """
    if not is_closed(m):
        raise ValueError("oracle requires a closed complex")
    value = Fraction(count_cocycles(m, coeffs, n, limit)) if n <= m.top_dim else (
        Fraction(1)
    )
    for k in range(n):
        c_k = coeffs.order ** m.n_cells(k)
        value *= Fraction(c_k) if (n - k) % 2 == 0 else Fraction(1, c_k)
    return value


def em_state_space_dim(m: ChainComplex, coeffs: FiniteAbelianGroup, n: int) -> int:
    """dim of the state space on m: the number of components of the mapping
    space, |H^n(m; A)|."""
    if n > m.top_dim:
        return 1
    return cohomology(m, coeffs, n).order


def em_category_simple_count(m: ChainComplex, coeffs: FiniteAbelianGroup) -> int:
    """Simple objects of the category assigned to a closed 3-manifold by the
    B^2A theory: |H^2(m; A)| * |H^1(m; A)|."""
    if m.top_dim != 3:
        raise ValueError("category-level counting needs a 3-complex")
    return cohomology(m, coeffs, 2).order * cohomology(m, coeffs, 1).order


def surface_gauge_count(group: FiniteGroup, genus: int, limit=None) -> Fraction:
    """Z_G(Sigma_g) = #{(a_1,b_1,..,a_g,b_g) : prod [a_i,b_i] = e} / |G|.

    The g = 0 value is the groupoid cardinality of pt//G, i.e. 1/|G|.
    """
    if genus < 0:
        raise ValueError("genus must be >= 0")
    if genus == 0:
        return Fraction(1, group.order)
    check_enum(group.order ** (2 * genus), limit, what="gauge tuple enumeration")
    count = 0
    for tup in iproduct(range(group.order), repeat=2 * genus):
        acc = group.identity
        for i in range(genus):
            acc = group.mul(acc, group.commutator(tup[2 * i], tup[2 * i + 1]))
        if acc == group.identity:
            count += 1
    return Fraction(count, group.order)


def partition(target: PiFiniteTarget, m: ChainComplex, weight=None) -> Fraction:
    """Dispatch on the target kind.

    Abelian targets work on any closed preset; a nonabelian BG is only
    supported on the standard closed surface complexes, where the bundle
    count has the one-relator form used by surface_gauge_count.
    """
    _require_zero_weight(weight)
    if isinstance(target.group, FiniteAbelianGroup):
        return em_partition(m, target.group, target.degree)
    genus = _genus_of_surface_complex(m)
    if genus is None:
        raise ValueError(
            "nonabelian gauge groups are supported on closed surfaces only"
        )
    return surface_gauge_count(target.group, genus)


def _genus_of_surface_complex(m: ChainComplex):
    """Recognize the standard closed orientable surface complexes (including
    the torus as a product of circles); returns the genus or None."""
    if m.top_dim != 2 or not is_closed(m):
        return None
    for g in range(0, 5):
        if m == complexes.surface(g):
            return g
    if m == complexes.torus(2):
        return 1
    return None
