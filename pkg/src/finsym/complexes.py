"""Finite cell complexes and exact cohomology with finite abelian coefficients.

A ChainComplex stores integer boundary matrices of a finite CW complex.
Cohomology with coefficients in A = Z_{n1} x ... x Z_{nk} is computed one
cyclic factor at a time: for each n, H^q(C; Z_n) = ker(delta^q mod n) /
im(delta^{q-1} mod n) is extracted from Smith normal forms over Z, together
with generator representatives, exact class coordinates for arbitrary
cocycles, and induced restriction maps.  A brute-force cochain enumerator
doubles as the independent oracle for all of this.

Cell structures for the preset manifolds are the minimal standard ones
(one-vertex surfaces, standard RP^n); their boundary matrices are spelled
out below so golden tests are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import gcd, prod

from .groups import FiniteAbelianGroup
from .intmatrix import IntMatrix, smith_normal_form_full
from .limits import check_enum


class ChainComplex:
    """Cellular chain complex: cells_per_dim and boundaries d_k: C_k -> C_{k-1}.

    ``boundaries[k-1]`` is the matrix of d_k (rows indexed by (k-1)-cells,
    columns by k-cells), for k = 1..top_dim.  d o d = 0 is checked exactly.
    """

    __slots__ = ("cells", "boundaries", "labels")

    def __init__(self, cells, boundaries, labels=None):
        cells = tuple(int(c) for c in cells)
        if not cells or any(c < 0 for c in cells):
            raise ValueError("cells_per_dim must be nonempty and nonnegative")
        bnds = tuple(boundaries)
        if len(bnds) != len(cells) - 1:
            raise ValueError("need one boundary matrix per dimension 1..top_dim")
        for k, b in enumerate(bnds, start=1):
            if (b.rows, b.cols) != (cells[k - 1], cells[k]):
                raise ValueError(f"boundary {k} has shape {(b.rows, b.cols)}, "
                                 f"expected {(cells[k - 1], cells[k])}")
        for k in range(2, len(cells)):
            if not (bnds[k - 2] * bnds[k - 1]).is_zero():
                raise ValueError(f"d_{k-1} o d_{k} != 0")
        if labels is not None:
            labels = tuple(tuple(l) for l in labels)
            if tuple(len(l) for l in labels) != cells:
                raise ValueError("labels do not match cell counts")
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "boundaries", bnds)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("ChainComplex is immutable")

    @property
    def top_dim(self) -> int:
        return len(self.cells) - 1

    def n_cells(self, k: int) -> int:
        if 0 <= k <= self.top_dim:
            return self.cells[k]
        return 0

    def boundary(self, k: int) -> IntMatrix:
        """d_k: C_k -> C_{k-1} (zero-shaped outside 1..top_dim)."""
        if 1 <= k <= self.top_dim:
            return self.boundaries[k - 1]
        return IntMatrix.zeros(self.n_cells(k - 1), self.n_cells(k))

    def coboundary(self, q: int) -> IntMatrix:
        """delta^q: C^q -> C^{q+1}, the transpose of d_{q+1}."""
        return self.boundary(q + 1).transpose()

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.cells))

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return (self.cells, self.boundaries) == (other.cells, other.boundaries)

    def __repr__(self):
        return f"ChainComplex(cells={self.cells})"

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "cells": list(self.cells),
                "boundaries": [[list(r) for r in b.data] for b in self.boundaries],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ChainComplex":
        import json

        doc = json.loads(text)
        cells = doc["cells"]
        bnds = [
            IntMatrix(rows, rows=cells[k], cols=cells[k + 1])
            for k, rows in enumerate(doc["boundaries"])
        ]
        return cls(cells, bnds)


class SubcomplexMap:
    """Inclusion of a subcomplex, as per-degree injective cell-index maps.

    ``cell_maps[k][i]`` is the target index of the i-th source k-cell.  The
    inclusion must literally commute with the boundary matrices, which in
    particular forces the image to be closed under taking boundaries.
    """

    __slots__ = ("source", "target", "cell_maps")

    def __init__(self, source: ChainComplex, target: ChainComplex, cell_maps):
        maps = []
        for k in range(source.top_dim + 1):
            m = tuple(int(i) for i in (cell_maps[k] if k < len(cell_maps) else ()))
            if len(m) != source.n_cells(k):
                raise ValueError(f"degree {k} map has wrong length")
            if len(set(m)) != len(m):
                raise ValueError(f"degree {k} map is not injective")
            if any(not 0 <= i < target.n_cells(k) for i in m):
                raise ValueError(f"degree {k} map goes out of range")
            maps.append(m)
        for k in range(1, source.top_dim + 1):
            src_b = source.boundary(k)
            tgt_b = target.boundary(k)
            for j in range(source.n_cells(k)):
                image_col = [0] * target.n_cells(k - 1)
                for i in range(source.n_cells(k - 1)):
                    image_col[maps[k - 1][i]] += src_b[i, j]
                for i in range(target.n_cells(k - 1)):
                    if image_col[i] != tgt_b[i, maps[k][j]]:
                        raise ValueError("inclusion does not commute with boundaries")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "cell_maps", tuple(maps))

    def __setattr__(self, name, value):
        raise AttributeError("SubcomplexMap is immutable")

    def image_cells(self, k: int) -> tuple[int, ...]:
        if 0 <= k < len(self.cell_maps):
            return self.cell_maps[k]
        return ()

    def pull_back(self, cochain, q: int):
        """Restrict a degree-q cochain on the target along the inclusion."""
        return tuple(cochain[i] for i in self.image_cells(q))


def empty_subcomplex(target: ChainComplex) -> SubcomplexMap:
    point_free = ChainComplex((0,), ())
    return SubcomplexMap(point_free, target, ((),))


# ---------------------------------------------------------------------------
# Presets.  Boundary conventions, fixed once and for all:
#   circle        v; e (loop)                      d1 = 0
#   interval      v0, v1; u                        d1(u) = v1 - v0
#   sphere(n>=2)  v; one n-cell                    all d = 0
#   surface(g)    v; a1,b1,..,ag,bg; f             d = 0 (commutator word)
#   rp(n)         one cell per dim; d_k = 1+(-1)^k  (0, 2, 0, 2, ...)
#   klein         v; a, b; f with word a b a b^-1  d2 = (2, 0)^T
#   disk          v; e (loop); f with word e       d2(f) = e
#   pants         v1, v2, v3; e1, e2, e3 (loops), a: v1->v3, b: v2->v3;
#                 f with word (a^-1 e1 a)(b^-1 e2 b) e3^-1
#                 d2(f) = e1 + e2 - e3; boundary circles are (vi, ei)
# ---------------------------------------------------------------------------


def circle() -> ChainComplex:
    return ChainComplex((1, 1), (IntMatrix.zeros(1, 1),), labels=(("v",), ("e",)))


def interval() -> ChainComplex:
    return ChainComplex(
        (2, 1), (IntMatrix([[-1], [1]]),), labels=(("v0", "v1"), ("u",))
    )


def sphere(n: int) -> ChainComplex:
    if not 1 <= n <= 5:
        raise ValueError("sphere(n) supports 1 <= n <= 5")
    if n == 1:
        return circle()
    cells = [1] + [0] * (n - 1) + [1]
    bnds = [IntMatrix.zeros(cells[k], cells[k + 1]) for k in range(n)]
    return ChainComplex(cells, bnds)


def torus(n: int) -> ChainComplex:
    if not 1 <= n <= 5:
        raise ValueError("torus(n) supports 1 <= n <= 5")
    out = circle()
    for _ in range(n - 1):
        out = product(out, circle())
    return out


def surface(g: int) -> ChainComplex:
    if not 0 <= g <= 4:
        raise ValueError("surface(g) supports 0 <= g <= 4")
    if g == 0:
        return sphere(2)
    # One vertex, 2g loops, one 2-cell along the product of commutators,
    # which abelianizes to zero.
    return ChainComplex(
        (1, 2 * g, 1),
        (IntMatrix.zeros(1, 2 * g), IntMatrix.zeros(2 * g, 1)),
    )


def real_projective_space(n: int) -> ChainComplex:
    if not 1 <= n <= 4:
        raise ValueError("rp(n) supports 1 <= n <= 4")
    cells = [1] * (n + 1)
    bnds = [IntMatrix([[1 + (-1) ** k]]) for k in range(1, n + 1)]
    return ChainComplex(cells, bnds)


def klein_bottle() -> ChainComplex:
    return ChainComplex(
        (1, 2, 1),
        (IntMatrix.zeros(1, 2), IntMatrix([[2], [0]])),
        labels=(("v",), ("a", "b"), ("f",)),
    )


def disk() -> tuple[ChainComplex, SubcomplexMap]:
    """The 2-disk and the inclusion of its boundary circle."""
    cx = ChainComplex(
        (1, 1, 1),
        (IntMatrix.zeros(1, 1), IntMatrix([[1]])),
        labels=(("v",), ("e",), ("f",)),
    )
    return cx, SubcomplexMap(circle(), cx, ((0,), (0,)))


def pants() -> tuple[ChainComplex, tuple[SubcomplexMap, SubcomplexMap, SubcomplexMap]]:
    """The three-holed sphere with its boundary circles exposed.

    Returns (complex, (cuff1, cuff2, waist)).  H^1 is A x A, restricting to
    (x, y) on the cuffs and x + y on the waist.
    """
    cx = ChainComplex(
        (3, 5, 1),
        (
            IntMatrix(
                [
                    [0, 0, 0, -1, 0],
                    [0, 0, 0, 0, -1],
                    [0, 0, 0, 1, 1],
                ]
            ),
            IntMatrix([[1], [1], [-1], [0], [0]]),
        ),
        labels=(("v1", "v2", "v3"), ("e1", "e2", "e3", "a", "b"), ("f",)),
    )
    cuff1 = SubcomplexMap(circle(), cx, ((0,), (0,)))
    cuff2 = SubcomplexMap(circle(), cx, ((1,), (1,)))
    waist = SubcomplexMap(circle(), cx, ((2,), (2,)))
    return cx, (cuff1, cuff2, waist)


_PRESETS = {
    "circle": (lambda: circle(), 0),
    "interval": (lambda: interval(), 0),
    "sphere": (sphere, 1),
    "torus": (torus, 1),
    "surface": (surface, 1),
    "rp": (real_projective_space, 1),
    "klein": (lambda: klein_bottle(), 0),
    "disk": (lambda: disk()[0], 0),
    "pants": (lambda: pants()[0], 0),
}


def preset(name: str, *params: int) -> ChainComplex:
    """Named manifold complexes: sphere/torus/surface/rp take one parameter."""
    if name not in _PRESETS:
        raise ValueError(f"unknown preset {name!r}")
    builder, arity = _PRESETS[name]
    if len(params) != arity:
        raise ValueError(f"preset {name!r} takes {arity} parameter(s)")
    return builder(*params)


def product(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Tensor-product complex with Koszul signs.

    Degree-k cells are pairs (x, y) with deg x + deg y = k, grouped in
    blocks of increasing deg x, each block ordered by (x index, y index).
    """
    top = a.top_dim + b.top_dim
    cells = [
        sum(a.n_cells(i) * b.n_cells(k - i) for i in range(k + 1))
        for k in range(top + 1)
    ]

    def offsets(k):
        out = {}
        pos = 0
        for i in range(k + 1):
            out[i] = pos
            pos += a.n_cells(i) * b.n_cells(k - i)
        return out

    bnds = []
    for k in range(1, top + 1):
        off_k = offsets(k)
        off_km1 = offsets(k - 1)
        rows = [[0] * cells[k] for _ in range(cells[k - 1])]
        for i in range(k + 1):
            j = k - i
            na, nb = a.n_cells(i), b.n_cells(j)
            if na == 0 or nb == 0:
                continue
            da = a.boundary(i)
            db = b.boundary(j)
            for ai in range(na):
                for bi in range(nb):
                    col = off_k[i] + ai * nb + bi
                    if i >= 1:
                        for ar in range(a.n_cells(i - 1)):
                            coeff = da[ar, ai]
                            if coeff:
                                row = off_km1[i - 1] + ar * nb + bi
                                rows[row][col] += coeff
                    if j >= 1:
                        sign = -1 if i % 2 else 1
                        for br in range(b.n_cells(j - 1)):
                            coeff = db[br, bi]
                            if coeff:
                                row = off_km1[i] + ai * b.n_cells(j - 1) + br
                                rows[row][col] += sign * coeff
        bnds.append(IntMatrix(rows, rows=cells[k - 1], cols=cells[k]))
    return ChainComplex(cells, bnds)


def product_cell_index(a: ChainComplex, b: ChainComplex, k: int, i: int,
                       a_idx: int, b_idx: int) -> int:
    """Index of the cell (a_idx in degree i) x (b_idx in degree k-i)."""
    pos = 0
    for ii in range(i):
        pos += a.n_cells(ii) * b.n_cells(k - ii)
    return pos + a_idx * b.n_cells(k - i) + b_idx


def disjoint_union(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    top = max(a.top_dim, b.top_dim)
    cells = [a.n_cells(k) + b.n_cells(k) for k in range(top + 1)]
    bnds = []
    for k in range(1, top + 1):
        da, db = a.boundary(k), b.boundary(k)
        rows = [[0] * cells[k] for _ in range(cells[k - 1])]
        for i in range(da.rows):
            for j in range(da.cols):
                rows[i][j] = da[i, j]
        for i in range(db.rows):
            for j in range(db.cols):
                rows[a.n_cells(k - 1) + i][a.n_cells(k) + j] = db[i, j]
        bnds.append(IntMatrix(rows, rows=cells[k - 1], cols=cells[k]))
    return ChainComplex(cells, bnds)


def glue_complexes(a: ChainComplex, b: ChainComplex, identifications):
    """Pushout identifying cells of ``b`` with cells of ``a``.

    ``identifications[k]`` maps b-cell indices to a-cell indices in degree k.
    Identified cells must form a subcomplex of ``b`` whose boundary data
    matches that of the target a-cells.  Returns (glued complex, b_index_map)
    where b_index_map[k][old_b_index] = index in the glued complex.
    """
    top = max(a.top_dim, b.top_dim)
    ident = {k: dict(identifications.get(k, {})) for k in range(top + 1)}
    b_map = []
    cells = []
    for k in range(top + 1):
        new_idx = {}
        pos = a.n_cells(k)
        for j in range(b.n_cells(k)):
            if j in ident[k]:
                new_idx[j] = ident[k][j]
            else:
                new_idx[j] = pos
                pos += 1
        b_map.append(tuple(new_idx[j] for j in range(b.n_cells(k))))
        cells.append(pos)
    for k in range(1, top + 1):
        db = b.boundary(k)
        da = a.boundary(k)
        for j in ident[k]:
            mapped = [0] * a.n_cells(k - 1)
            for i in range(b.n_cells(k - 1)):
                if db[i, j]:
                    if i not in ident[k - 1]:
                        raise ValueError("identified cells are not a subcomplex")
                    mapped[ident[k - 1][i]] += db[i, j]
            for i in range(a.n_cells(k - 1)):
                if mapped[i] != da[i, ident[k][j]]:
                    raise ValueError("identification breaks boundary matching")
    bnds = []
    for k in range(1, top + 1):
        rows = [[0] * cells[k] for _ in range(cells[k - 1])]
        da, db = a.boundary(k), b.boundary(k)
        for i in range(da.rows):
            for j in range(da.cols):
                rows[i][j] += da[i, j]
        for j in range(b.n_cells(k)):
            if j in ident[k]:
                continue
            for i in range(b.n_cells(k - 1)):
                if db[i, j]:
                    rows[b_map[k - 1][i]][b_map[k][j]] += db[i, j]
        bnds.append(IntMatrix(rows, rows=cells[k - 1], cols=cells[k]))
    return ChainComplex(cells, bnds), tuple(b_map)


# ---------------------------------------------------------------------------
# Cohomology.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _CyclicFactor:
    """H^q(C; Z_n) with generator representatives and class coordinates.

    Derived from Smith normal forms: cocycle lifts form the lattice
    K = V diag(m) Z^c with m_i = n/gcd(d_i, n); coboundaries plus n Z^c map
    to a relation matrix R in K-coordinates, whose Smith form gives the
    cyclic decomposition.  ``coordinates`` is a group homomorphism from
    cocycles (mod n) onto prod Z_{orders}.
    """

    n: int
    ncells: int
    orders: tuple[int, ...]
    reps: tuple[tuple[int, ...], ...]
    _v: IntMatrix
    _v_inv: IntMatrix
    _m: tuple[int, ...]
    _u_r: IntMatrix
    _kept: tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.orders)

    def coordinates(self, cochain) -> tuple[int, ...]:
        x = tuple(int(v) % self.n for v in cochain)
        if len(x) != self.ncells:
            raise ValueError("cochain length mismatch")
        y = self._v_inv.apply_vector(x)
        yk = []
        for yi, mi in zip(y, self._m):
            if yi % mi != 0:
                raise ValueError("not a cocycle mod n")
            yk.append(yi // mi)
        z = self._u_r.apply_vector(tuple(yk))
        return tuple(z[i] % f for i, f in zip(self._kept, self.orders))

    def representative(self, coords) -> tuple[int, ...]:
        if len(coords) != len(self.orders):
            raise ValueError("coordinate length mismatch")
        out = [0] * self.ncells
        for c, rep in zip(coords, self.reps):
            for i, v in enumerate(rep):
                out[i] = (out[i] + c * v) % self.n
        return tuple(out)

    def all_coords(self):
        return iproduct(*(range(f) for f in self.orders))


def _cyclic_cohomology(delta_out: IntMatrix, delta_in: IntMatrix, n: int) -> _CyclicFactor:
    c = delta_out.cols
    if delta_in.rows != c:
        raise ValueError("cochain rank mismatch between coboundaries")
    snf = smith_normal_form_full(delta_out)
    diag = [snf.d[i, i] if i < min(snf.d.rows, snf.d.cols) else 0 for i in range(c)]
    m = tuple(n // gcd(d, n) if d else 1 for d in diag)
    # Relations: columns of delta_in and the n*e_j, in K-coordinates.
    rel_cols = []
    for j in range(delta_in.cols):
        g = delta_in.column(j)
        y = snf.v_inv.apply_vector(g)
        col = []
        for yi, mi in zip(y, m):
            if yi % mi != 0:
                raise ValueError("coboundary is not a cocycle; broken complex")
            col.append(yi // mi)
        rel_cols.append(col)
    for j in range(c):
        y = tuple(n * snf.v_inv[i, j] for i in range(c))
        rel_cols.append([yi // mi for yi, mi in zip(y, m)])
    r_matrix = IntMatrix(
        [[rel_cols[j][i] for j in range(len(rel_cols))] for i in range(c)],
        rows=c,
        cols=len(rel_cols),
    )
    snf_r = smith_normal_form_full(r_matrix)
    factors = [snf_r.d[i, i] for i in range(c)]
    if any(f == 0 for f in factors):
        raise AssertionError("quotient must be finite (n*e_j relations present)")
    kept = tuple(i for i, f in enumerate(factors) if f > 1)
    orders = tuple(factors[i] for i in kept)
    reps = []
    for i in kept:
        w = [0] * c
        for s in range(c):
            coeff = snf_r.u_inv[s, i] * m[s]
            if coeff:
                vcol = snf.v.column(s)
                for t in range(c):
                    w[t] += vcol[t] * coeff
        reps.append(tuple(v % n for v in w))
    return _CyclicFactor(
        n=n,
        ncells=c,
        orders=orders,
        reps=tuple(reps),
        _v=snf.v,
        _v_inv=snf.v_inv,
        _m=m,
        _u_r=snf_r.u,
        _kept=kept,
    )


@dataclass(frozen=True)
class CohomologyGroup:
    """H^q(C; A), one _CyclicFactor per invariant factor of A.

    A degree-q cochain with A coefficients is a tuple of A-elements, one per
    q-cell.  Class labels are tuples of per-factor coordinate tuples.
    """

    degree: int
    coefficients: FiniteAbelianGroup
    group: FiniteAbelianGroup
    factors: tuple[_CyclicFactor, ...]
    ncells: int

    @property
    def order(self) -> int:
        return prod(f.order for f in self.factors) if self.factors else 1

    def classes(self):
        return iproduct(*(f.all_coords() for f in self.factors))

    def zero_class(self):
        return tuple((0,) * len(f.orders) for f in self.factors)

    def representative(self, label):
        per_factor = [f.representative(coords) for f, coords in zip(self.factors, label)]
        return tuple(
            tuple(vec[i] for vec in per_factor) for i in range(self.ncells)
        )

    def coordinates(self, cochain) -> tuple:
        if len(cochain) != self.ncells:
            raise ValueError("cochain length mismatch")
        return tuple(
            f.coordinates([cell[k] for cell in cochain])
            for k, f in enumerate(self.factors)
        )

    def generator_cochains(self):
        """(order, representative cochain) for each cyclic generator."""
        out = []
        for k, f in enumerate(self.factors):
            for order, rep in zip(f.orders, f.reps):
                cochain = tuple(
                    tuple(rep[i] if kk == k else 0 for kk in range(len(self.factors)))
                    for i in range(self.ncells)
                )
                out.append((order, cochain))
        return out


def cohomology(cx: ChainComplex, coeffs: FiniteAbelianGroup, q: int) -> CohomologyGroup:
    """H^q(cx; coeffs), exactly, via Smith normal form per cyclic factor."""
    if not 0 <= q <= cx.top_dim:
        raise ValueError(f"degree {q} out of range 0..{cx.top_dim}")
    delta_out = cx.coboundary(q)
    delta_in = cx.coboundary(q - 1)
    factors = tuple(
        _cyclic_cohomology(delta_out, delta_in, n) for n in coeffs.invariant_factors
    )
    orders = [o for f in factors for o in f.orders]
    return CohomologyGroup(
        degree=q,
        coefficients=coeffs,
        group=FiniteAbelianGroup.from_cyclic_orders(orders),
        factors=factors,
        ncells=cx.n_cells(q),
    )


def _relative_coboundaries(w: ChainComplex, sub: SubcomplexMap, q: int):
    """Coboundaries of the subcomplex-vanishing cochain complex, plus the
    kept-cell index list in degree q."""

    def kept(k):
        excluded = set(sub.image_cells(k))
        return [i for i in range(w.n_cells(k)) if i not in excluded]

    def restrict(matrix, rows_keep, cols_keep):
        return IntMatrix(
            [[matrix[i, j] for j in cols_keep] for i in rows_keep],
            rows=len(rows_keep),
            cols=len(cols_keep),
        )

    kq = kept(q)
    delta_out = restrict(w.coboundary(q), kept(q + 1), kq)
    delta_in = restrict(w.coboundary(q - 1), kq, kept(q - 1))
    return delta_out, delta_in, kq


def relative_cohomology(
    w: ChainComplex, sub: SubcomplexMap, coeffs: FiniteAbelianGroup, q: int
) -> CohomologyGroup:
    """H^q(w, sub; coeffs): cohomology of cochains vanishing on the subcomplex."""
    if sub.target != w:
        raise ValueError("subcomplex map does not land in the given complex")
    if not 0 <= q <= w.top_dim:
        raise ValueError(f"degree {q} out of range 0..{w.top_dim}")
    delta_out, delta_in, kq = _relative_coboundaries(w, sub, q)
    factors = tuple(
        _cyclic_cohomology(delta_out, delta_in, n) for n in coeffs.invariant_factors
    )
    orders = [o for f in factors for o in f.orders]
    return CohomologyGroup(
        degree=q,
        coefficients=coeffs,
        group=FiniteAbelianGroup.from_cyclic_orders(orders),
        factors=factors,
        ncells=len(kq),
    )


@dataclass(frozen=True)
class CohomologyMap:
    """Induced map H^q(target-side) -> H^q(source-side) of a SubcomplexMap,
    as one integer matrix per cyclic coefficient factor acting on class
    coordinates."""

    source: CohomologyGroup
    target: CohomologyGroup
    matrices: tuple[IntMatrix, ...]

    def apply(self, label) -> tuple:
        out = []
        for f_src, f_tgt, mat, coords in zip(
            self.source.factors, self.target.factors, self.matrices, label
        ):
            img = mat.apply_vector(coords)
            out.append(tuple(v % o for v, o in zip(img, f_tgt.orders)))
        return tuple(out)

    def is_isomorphism(self) -> bool:
        if self.source.order != self.target.order:
            return False
        seen = {self.apply(lbl) for lbl in self.source.classes()}
        return len(seen) == self.source.order


def restriction_map(
    w: ChainComplex, sub: SubcomplexMap, coeffs: FiniteAbelianGroup, q: int
) -> CohomologyMap:
    """The restriction H^q(w; A) -> H^q(sub; A) on class coordinates."""
    big = cohomology(w, coeffs, q)
    small = cohomology(sub.source, coeffs, q)
    mats = []
    for f_big, f_small in zip(big.factors, small.factors):
        cols = []
        for rep in f_big.reps:
            pulled = sub.pull_back(rep, q)
            cols.append(f_small.coordinates(pulled))
        mats.append(
            IntMatrix(
                [[col[i] for col in cols] for i in range(len(f_small.orders))],
                rows=len(f_small.orders),
                cols=len(f_big.reps),
            )
        )
    return CohomologyMap(source=big, target=small, matrices=tuple(mats))


# ---------------------------------------------------------------------------
# Brute-force oracle.
# ---------------------------------------------------------------------------


def _cyclic_cocycles(cx: ChainComplex, n: int, q: int, limit=None):
    """All degree-q cocycles mod n, by exhaustive cochain enumeration."""
    c = cx.n_cells(q)
    check_enum(n**c, limit, what=f"cochain enumeration ({n}^{c})")
    delta = cx.coboundary(q)
    out = []
    for x in iproduct(*(range(n) for _ in range(c))):
        if all(v % n == 0 for v in delta.apply_vector(x)):
            out.append(x)
    return out


def _cyclic_coboundary_group(cx: ChainComplex, n: int, q: int):
    """The subgroup of coboundaries in degree q mod n, by additive closure
    of the columns of delta^{q-1} (no enumeration of C^{q-1} needed)."""
    c = cx.n_cells(q)
    delta_in = cx.coboundary(q - 1)
    gens = [
        tuple(delta_in[i, j] % n for i in range(c)) for j in range(delta_in.cols)
    ]
    zero = (0,) * c
    seen = {zero}
    frontier = [zero]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = tuple((a + b) % n for a, b in zip(x, g))
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def count_cocycles(cx: ChainComplex, coeffs: FiniteAbelianGroup, q: int, limit=None) -> int:
    """#Z^q(cx; A) by brute force; independent of the SNF route."""
    total = 1
    for n in coeffs.invariant_factors:
        total *= len(_cyclic_cocycles(cx, n, q, limit))
    return total


def count_coboundaries(cx: ChainComplex, coeffs: FiniteAbelianGroup, q: int) -> int:
    """#B^q(cx; A) by additive closure of the coboundary generators."""
    total = 1
    for n in coeffs.invariant_factors:
        total *= len(_cyclic_coboundary_group(cx, n, q))
    return total


def enumerate_cocycles(cx: ChainComplex, coeffs: FiniteAbelianGroup, q: int, limit=None):
    """One representative cocycle per cohomology class, exhaustively.

    This is the oracle: it never touches the Smith-normal-form route.
    Representatives are tuples of A-elements, ordered lexicographically.
    """
    per_factor = []
    for n in coeffs.invariant_factors:
        cocycles = _cyclic_cocycles(cx, n, q, limit)
        coboundaries = _cyclic_coboundary_group(cx, n, q)
        reps = []
        covered = set()
        for z in cocycles:
            if z in covered:
                continue
            reps.append(z)
            for b in coboundaries:
                covered.add(tuple((a + v) % n for a, v in zip(z, b)))
        per_factor.append(reps)
    ncells = cx.n_cells(q)
    out = []
    for combo in iproduct(*per_factor):
        out.append(tuple(tuple(vec[i] for vec in combo) for i in range(ncells)))
    return out


def is_closed(cx: ChainComplex) -> bool:
    """Mod-2 closedness test: every component carries a top class.

    For the compact manifold complexes used here, |H^top(M; Z_2)| equals
    |H^0(M; Z_2)| exactly when M has no boundary.
    """
    z2 = FiniteAbelianGroup([2])
    return cohomology(cx, z2, cx.top_dim).order == cohomology(cx, z2, 0).order
