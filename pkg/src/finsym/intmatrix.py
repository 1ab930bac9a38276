"""Exact integer matrices and the Smith normal form.

Entries are Python ints, so all pivoting is overflow-free.  Matrices are
immutable after construction; every operation returns a new matrix.  The
Smith normal form is the computational backbone for all cohomology in this
package, so it is available both in the bare (U, D, V) form and in a rich
form that carries the inverse transforms needed to solve linear systems
over Z and Z/n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class IntMatrix:
    """Immutable matrix over Z.

    ``data`` is a sequence of row sequences.  Zero-width shapes are legal
    (boundary maps of empty cell ranks); pass ``rows``/``cols`` explicitly
    when ``data`` cannot determine them.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows: int | None = None, cols: int | None = None):
        tup = tuple(tuple(int(x) for x in row) for row in data)
        r = len(tup) if rows is None else int(rows)
        if len(tup) not in (0, r):
            raise ValueError("row count does not match data")
        if tup:
            widths = {len(row) for row in tup}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            c = widths.pop()
            if cols is not None and c != int(cols):
                raise ValueError("column count does not match data")
        else:
            c = 0 if cols is None else int(cols)
        if len(tup) < r:
            tup = tup + tuple(tuple(0 for _ in range(c)) for _ in range(r - len(tup)))
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "cols", c)
        object.__setattr__(self, "data", tup)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], rows=rows, cols=cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i: int):
        return self.data[i]

    def column(self, j: int):
        return tuple(self.data[i][j] for i in range(self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            rows=self.cols,
            cols=self.rows,
        )

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.data[i]
            for k in range(self.cols):
                a = row[k]
                if a:
                    orow = other.data[k]
                    for j in range(other.cols):
                        out[i][j] += a * orow[j]
        return IntMatrix(out, rows=self.rows, cols=other.cols)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in row] for row in self.data], rows=self.rows, cols=self.cols)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            rows=self.rows,
            cols=self.cols,
        )

    def apply_vector(self, vec):
        """Matrix times column vector, as a tuple."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(row[j] * vec[j] for j in range(self.cols)) for row in self.data)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]!r})"


@dataclass(frozen=True)
class SmithForm:
    """U * m * V = D with U, V unimodular and D diagonal, d1 | d2 | ...

    ``u_inv`` and ``v_inv`` are the exact inverses of ``u`` and ``v``; they
    are tracked during the reduction so no rational inversion is ever
    needed.  ``diagonal`` lists the nonzero invariant factors.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(m: IntMatrix):
    """Return (U, D, V) with U*m*V = D in Smith normal form."""
    full = smith_normal_form_full(m)
    return full.u, full.d, full.v


def smith_normal_form_full(m: IntMatrix) -> SmithForm:
    r, c = m.rows, m.cols
    a = [list(row) for row in m.data]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    u_inv = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]
    v_inv = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    # Row op a[i] += q*a[k] corresponds to U := E U, Uinv := Uinv E^-1.
    def row_add(i, k, q):
        for j in range(c):
            a[i][j] += q * a[k][j]
        for j in range(r):
            u[i][j] += q * u[k][j]
        for s in range(r):
            u_inv[s][k] -= q * u_inv[s][i]

    def row_swap(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]
        for s in range(r):
            u_inv[s][i], u_inv[s][k] = u_inv[s][k], u_inv[s][i]

    def row_negate(i):
        for j in range(c):
            a[i][j] = -a[i][j]
        for j in range(r):
            u[i][j] = -u[i][j]
        for s in range(r):
            u_inv[s][i] = -u_inv[s][i]

    # Column op col_j += q*col_l corresponds to V := V E, Vinv := E^-1 Vinv.
    def col_add(j, l, q):
        for i in range(r):
            a[i][j] += q * a[i][l]
        for i in range(c):
            v[i][j] += q * v[i][l]
        for t in range(c):
            v_inv[l][t] -= q * v_inv[j][t]

    def col_swap(j, l):
        for i in range(r):
            a[i][j], a[i][l] = a[i][l], a[i][j]
        for i in range(c):
            v[i][j], v[i][l] = v[i][l], v[i][j]
        v_inv[j], v_inv[l] = v_inv[l], v_inv[j]

    def rounded_quotient(x, p):
        # Quotient with minimal-magnitude remainder: |x - q*p| <= |p|/2.
        # divmod's remainder has the sign of p, so bumping q by one always
        # flips a too-large remainder to the complementary (smaller) piece.
        q, rem = divmod(x, p)
        if 2 * abs(rem) > abs(p):
            q += 1
        return q

    t = 0
    while t < min(r, c):
        while True:
            # Move the submatrix entry of least magnitude to the pivot; one
            # rounded reduction pass then either clears the pivot's row and
            # column or produces remainders at most half the pivot, so each
            # sweep at least halves the working minimum (no blow-up).
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    if a[i][j] != 0 and (
                        best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])
                    ):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                row_swap(t, best[0])
            if best[1] != t:
                col_swap(t, best[1])
            for i in range(t + 1, r):
                if a[i][t]:
                    row_add(i, t, -rounded_quotient(a[i][t], a[t][t]))
            for j in range(t + 1, c):
                if a[t][j]:
                    col_add(j, t, -rounded_quotient(a[t][j], a[t][t]))
            if any(a[i][t] for i in range(t + 1, r)) or any(
                a[t][j] for j in range(t + 1, c)
            ):
                continue
            # Divisibility chain: fold one bad row in and keep reducing.
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % a[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if best is None:
            break
        if a[t][t] < 0:
            row_negate(t)
        t += 1

    diag = tuple(a[i][i] for i in range(min(r, c)) if a[i][i] != 0)
    return SmithForm(
        u=IntMatrix(u, rows=r, cols=r),
        d=IntMatrix(a, rows=r, cols=c),
        v=IntMatrix(v, rows=c, cols=c),
        u_inv=IntMatrix(u_inv, rows=r, cols=r),
        v_inv=IntMatrix(v_inv, rows=c, cols=c),
        diagonal=diag,
    )


def minor_gcd(m: IntMatrix, k: int) -> int:
    """gcd of all k x k minors (0 when all vanish); oracle for SNF checks."""
    from itertools import combinations

    if k == 0:
        return 1
    g = 0
    for rows in combinations(range(m.rows), k):
        for cols in combinations(range(m.cols), k):
            g = gcd(g, _det([[m.data[i][j] for j in cols] for i in rows]))
    return g


def _det(a) -> int:
    """Determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
