"""Fusion rings and obstruction tests for trivially gapped phases.

Only the Grothendieck ring is modeled: labels, the fusion tensor N_ij^k,
and the duality involution.  That is exactly the data used by the
impossibility arguments implemented here: non-integral Perron-Frobenius
dimensions obstruct fiber functors, and a non-square count of simples
obstructs writing a theory as T* x T.  Both verdicts are one-sided
(necessary conditions); the API never claims existence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup


class FusionRing:
    """Unital based ring with nonnegative structure constants.

    ``n_tensor[i][j][k]`` is the multiplicity of simple k inside i x j.
    Validated on construction: unit laws, associativity, and the duality
    pairing N_ij^1 = delta_{j, i*}.
    """

    __slots__ = ("labels", "unit", "n_tensor", "dual")

    def __init__(self, labels, unit: int, n_tensor, dual):
        labels = tuple(str(l) for l in labels)
        rank = len(labels)
        n = tuple(
            tuple(tuple(int(x) for x in row) for row in plane) for plane in n_tensor
        )
        if len(n) != rank or any(
            len(plane) != rank or any(len(row) != rank for row in plane)
            for plane in n
        ):
            raise ValueError("fusion tensor must be rank^3")
        if any(x < 0 for plane in n for row in plane for x in row):
            raise ValueError("fusion multiplicities must be nonnegative")
        dual = tuple(int(d) for d in dual)
        if sorted(dual) != list(range(rank)) or any(dual[dual[i]] != i for i in range(rank)):
            raise ValueError("dual must be an involution on labels")
        for j in range(rank):
            for k in range(rank):
                if n[unit][j][k] != (1 if j == k else 0):
                    raise ValueError("left unit law fails")
                if n[j][unit][k] != (1 if j == k else 0):
                    raise ValueError("right unit law fails")
        for i in range(rank):
            for j in range(rank):
                for k in range(rank):
                    for l in range(rank):
                        lhs = sum(n[i][j][m] * n[m][k][l] for m in range(rank))
                        rhs = sum(n[j][k][m] * n[i][m][l] for m in range(rank))
                        if lhs != rhs:
                            raise ValueError(
                                f"associativity fails at {labels[i]},{labels[j]},{labels[k]}"
                            )
        for i in range(rank):
            for j in range(rank):
                if n[i][j][unit] != (1 if j == dual[i] else 0):
                    raise ValueError("duality pairing N_ij^1 = delta_(j,i*) fails")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "unit", int(unit))
        object.__setattr__(self, "n_tensor", n)
        object.__setattr__(self, "dual", dual)

    def __setattr__(self, name, value):
        raise AttributeError("FusionRing is immutable")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def fusion_matrix(self, i: int) -> np.ndarray:
        """Left multiplication by simple i: entry (k, j) = N_ij^k."""
        rank = self.rank
        return np.array(
            [[self.n_tensor[i][j][k] for j in range(rank)] for k in range(rank)],
            dtype=float,
        )

    def multiply(self, coeffs_a, coeffs_b):
        rank = self.rank
        out = [0] * rank
        for i in range(rank):
            if not coeffs_a[i]:
                continue
            for j in range(rank):
                if not coeffs_b[j]:
                    continue
                c = coeffs_a[i] * coeffs_b[j]
                for k in range(rank):
                    out[k] += c * self.n_tensor[i][j][k]
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (self.labels, self.unit, self.n_tensor, self.dual) == (
            other.labels,
            other.unit,
            other.n_tensor,
            other.dual,
        )

    def __repr__(self):
        return f"FusionRing({list(self.labels)!r})"

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "labels": list(self.labels),
                "unit": self.unit,
                "N": [[list(r) for r in p] for p in self.n_tensor],
                "dual": list(self.dual),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "FusionRing":
        import json

        doc = json.loads(text)
        return cls(doc["labels"], doc["unit"], doc["N"], doc["dual"])


@dataclass(frozen=True)
class RingElement:
    ring: FusionRing
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.ring.rank:
            raise ValueError("coefficient vector length mismatch")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("coefficients must be nonnegative")

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.ring != other.ring:
            raise ValueError("elements of different rings")
        return RingElement(
            self.ring,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ring, tuple(other * c for c in self.coefficients))
        if self.ring != other.ring:
            raise ValueError("elements of different rings")
        return RingElement(
            self.ring, self.ring.multiply(self.coefficients, other.coefficients)
        )

    __rmul__ = __mul__

    def __str__(self):
        terms = []
        for c, lbl in zip(self.coefficients, self.ring.labels):
            if c == 1:
                terms.append(lbl)
            elif c:
                terms.append(f"{c}*{lbl}")
        return " + ".join(terms) if terms else "0"


def _element_label(group: FiniteGroup, i: int) -> str:
    return "1" if i == group.identity else f"g{i}"


def group_ring(group: FiniteGroup) -> FusionRing:
    """One simple per group element; fusion is the Cayley table, duals are
    inverses."""
    rank = group.order
    n = [
        [
            [1 if group.mul(i, j) == k else 0 for k in range(rank)]
            for j in range(rank)
        ]
        for i in range(rank)
    ]
    labels = [_element_label(group, i) for i in range(rank)]
    return FusionRing(labels, group.identity, n, group.inverses)


def tambara_yamagami(group: FiniteGroup) -> FusionRing:
    """TY(G): invertible lines L_g plus one duality line N with
    N x L_g = L_g x N = N and N x N = sum_g L_g.  Needs abelian G."""
    if not group.is_abelian():
        raise ValueError("Tambara-Yamagami requires an abelian group")
    rank = group.order + 1
    dual_idx = group.order
    n = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for i in range(group.order):
        for j in range(group.order):
            n[i][j][group.mul(i, j)] = 1
        n[i][dual_idx][dual_idx] = 1
        n[dual_idx][i][dual_idx] = 1
    for g in range(group.order):
        n[dual_idx][dual_idx][g] = 1
    labels = [_element_label(group, i) for i in range(group.order)] + ["N"]
    dual = list(group.inverses) + [dual_idx]
    return FusionRing(labels, group.identity, n, dual)


def _is_permutation_matrix(mat: np.ndarray) -> bool:
    return (
        np.all((mat == 0) | (mat == 1))
        and np.all(mat.sum(axis=0) == 1)
        and np.all(mat.sum(axis=1) == 1)
    )


def pf_dimensions(ring: FusionRing, tol: float = 1e-12, max_iter: int = 10**5):
    """Perron-Frobenius dimension of each simple object.

    Permutation fusion matrices (invertible objects) give exactly 1;
    otherwise power iteration on N_i + I, which is primitive on the
    relevant block, to the requested tolerance.
    """
    dims = []
    for i in range(ring.rank):
        mat = ring.fusion_matrix(i)
        if _is_permutation_matrix(mat):
            dims.append(1.0)
            continue
        shifted = mat + np.eye(ring.rank)
        vec = np.ones(ring.rank) / np.sqrt(ring.rank)
        for _ in range(max_iter):
            nxt = shifted @ vec
            nxt = nxt / np.linalg.norm(nxt)
            if np.linalg.norm(nxt - vec) <= tol * 1e-2:
                vec = nxt
                break
            vec = nxt
        else:
            raise RuntimeError(f"power iteration did not converge for {ring.labels[i]}")
        dims.append(float(np.linalg.norm(mat @ vec)))
    return dims


@dataclass(frozen=True)
class Obstruction:
    verdict: str
    witness: str | None = None
    detail: str | None = None


def fiber_functor_obstruction(ring: FusionRing, tol: float = 1e-9) -> Obstruction:
    """'impossible' when some PF dimension is non-integral (necessary
    condition only; 'possible' is inconclusive).

    When the witness object squares into invertibles (as in TY rings),
    d^2 is the exact integer sum of those multiplicities, and the verdict
    is confirmed by an exact perfect-square test on it.
    """
    dims = pf_dimensions(ring)
    for i, d in enumerate(dims):
        nearest = round(d)
        if abs(d - nearest) <= tol:
            continue
        detail = f"d({ring.labels[i]}) = {d:.12f} is not an integer"
        square_row = ring.n_tensor[i][ring.dual[i]]
        supports_invertible = all(
            square_row[k] == 0 or _is_permutation_matrix(ring.fusion_matrix(k))
            for k in range(ring.rank)
        )
        if supports_invertible:
            d_squared = sum(square_row)
            if _is_perfect_square(d_squared):
                continue  # float noise; d really is integral
            detail += f"; exactly, d^2 = {d_squared} is not a perfect square"
        return Obstruction("impossible", witness=ring.labels[i], detail=detail)
    return Obstruction("possible", detail="all PF dimensions integral (inconclusive)")


def _is_perfect_square(n: int) -> bool:
    from math import isqrt

    return n >= 0 and isqrt(n) ** 2 == n


def square_root_obstruction(ring: FusionRing) -> Obstruction:
    """'no_sqrt' when the rank is not a perfect square: the simples of
    T* x T number rank(T)^2, so a non-square rank has no such factorization."""
    if _is_perfect_square(ring.rank):
        return Obstruction("inconclusive", detail=f"rank {ring.rank} is a perfect square")
    return Obstruction(
        "no_sqrt", detail=f"rank {ring.rank} is not a perfect square"
    )


def quotient_defect_composition(group: FiniteGroup) -> RingElement:
    """The 't Hooft-type sum over group defects, sum_g L_g, in the group
    ring; composing the quotient wall with its adjoint lands on it.  Its
    square is |G| times itself."""
    ring = group_ring(group)
    return RingElement(ring, (1,) * ring.rank)
