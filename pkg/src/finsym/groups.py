"""Finite abelian groups, characters, and finite groups as Cayley tables.

Abelian groups are kept in invariant-factor form; elements are tuples of
residues, one per factor.  Characters evaluate into Q/Z: the value is the
exact fraction t of a full turn, i.e. the root of unity exp(2*pi*i*t).
General finite groups are multiplication tables validated on construction
(Latin square, two-sided identity, inverses, associativity); desk scale is
|G| <= 24 so the cubic associativity check is cheap.
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from itertools import product, zip_longest
from math import prod


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FiniteAbelianGroup:
    """Z_{n1} x ... x Z_{nk} with n1 | n2 | ... and every ni >= 2.

    The empty factor list is the trivial group.  Elements are tuples of
    residues in lexicographic order.
    """

    __slots__ = ("invariant_factors",)

    def __init__(self, invariant_factors=()):
        factors = tuple(int(n) for n in invariant_factors)
        for n in factors:
            if n < 2:
                raise ValueError(f"invariant factor {n} < 2")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise ValueError(f"broken divisibility chain: {a} does not divide {b}")
        object.__setattr__(self, "invariant_factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteAbelianGroup is immutable")

    @classmethod
    def from_cyclic_orders(cls, orders) -> "FiniteAbelianGroup":
        """Canonical invariant-factor form of a product of cyclic groups."""
        per_prime: dict[int, list[int]] = defaultdict(list)
        for n in orders:
            n = int(n)
            if n < 1:
                raise ValueError("cyclic order must be >= 1")
            for p, e in _factorint(n).items():
                per_prime[p].append(e)
        columns = zip_longest(
            *[sorted(exps, reverse=True) for exps in per_prime.values()], fillvalue=0
        )
        factors = sorted(
            prod(p**e for p, e in zip(sorted(per_prime), col)) for col in columns
        )
        return cls([f for f in factors if f > 1])

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def zero(self):
        return (0,) * self.rank

    def elements(self):
        return product(*(range(n) for n in self.invariant_factors))

    def contains(self, x) -> bool:
        return len(x) == self.rank and all(
            0 <= a < n for a, n in zip(x, self.invariant_factors)
        )

    def add(self, x, y):
        return tuple((a + b) % n for a, b, n in zip(x, y, self.invariant_factors))

    def neg(self, x):
        return tuple((-a) % n for a, n in zip(x, self.invariant_factors))

    def scalar_mul(self, k: int, x):
        return tuple((k * a) % n for a, n in zip(x, self.invariant_factors))

    def element_order(self, x) -> int:
        k = 1
        y = x
        while any(y):
            y = self.add(y, x)
            k += 1
        return k

    def subgroup(self, generators) -> tuple:
        """All elements generated by ``generators``, sorted lexicographically."""
        for g in generators:
            if not self.contains(tuple(g)):
                raise ValueError(f"{g} is not an element of {self}")
        seen = {self.zero()}
        frontier = [self.zero()]
        while frontier:
            x = frontier.pop()
            for g in generators:
                y = self.add(x, tuple(g))
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return tuple(sorted(seen))

    def __eq__(self, other):
        if not isinstance(other, FiniteAbelianGroup):
            return NotImplemented
        return self.invariant_factors == other.invariant_factors

    def __hash__(self):
        return hash(self.invariant_factors)

    def __str__(self):
        if not self.invariant_factors:
            return "Z1"
        return "x".join(f"Z{n}" for n in self.invariant_factors)

    def __repr__(self):
        return f"FiniteAbelianGroup({list(self.invariant_factors)!r})"

    def to_json(self) -> str:
        return json.dumps({"invariant_factors": list(self.invariant_factors)})

    @classmethod
    def from_json(cls, text: str) -> "FiniteAbelianGroup":
        doc = json.loads(text)
        return cls(doc["invariant_factors"])


class Character:
    """A character of a finite abelian group, stored by exponents.

    The character with exponents (t1, ..., tk) sends (a1, ..., ak) to the
    root of unity with angle sum(ti*ai/ni) of a full turn; ``value`` returns
    that angle as an exact element of Q/Z.
    """

    __slots__ = ("group", "exponents")

    def __init__(self, group: FiniteAbelianGroup, exponents):
        given = tuple(exponents)
        if len(given) != group.rank:
            raise ValueError("one exponent per invariant factor required")
        exps = tuple(int(t) % n for t, n in zip(given, group.invariant_factors))
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("Character is immutable")

    def value(self, element) -> Fraction:
        if not self.group.contains(tuple(element)):
            raise ValueError(f"{element} is not in {self.group}")
        total = Fraction(0)
        for t, a, n in zip(self.exponents, element, self.group.invariant_factors):
            total += Fraction(t * a, n)
        return total % 1

    __call__ = value

    def __mul__(self, other: "Character") -> "Character":
        if self.group != other.group:
            raise ValueError("characters of different groups")
        return Character(
            self.group,
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
        )

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return (self.group, self.exponents) == (other.group, other.exponents)

    def __hash__(self):
        return hash((self.group, self.exponents))

    def __repr__(self):
        return f"Character({self.group!r}, {self.exponents!r})"


def dual_group(group: FiniteAbelianGroup) -> FiniteAbelianGroup:
    """The Pontryagin dual; same invariant factors, non-canonically."""
    return FiniteAbelianGroup(group.invariant_factors)


def characters(group: FiniteAbelianGroup):
    """All |A| characters, exponent tuples in lexicographic order."""
    for exps in group.elements():
        yield Character(group, exps)


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``cayley[i][j]`` is the index of the product of elements i and j.  The
    table is fully validated on construction.
    """

    __slots__ = ("order", "cayley", "identity", "inverses")

    def __init__(self, cayley, identity: int = 0):
        table = tuple(tuple(int(x) for x in row) for row in cayley)
        n = len(table)
        idx = set(range(n))
        for row in table:
            if len(row) != n or set(row) != idx:
                raise ValueError("Cayley table rows must be permutations")
        for j in range(n):
            if {table[i][j] for i in range(n)} != idx:
                raise ValueError("Cayley table columns must be permutations")
        e = int(identity)
        if not 0 <= e < n:
            raise ValueError("identity index out of range")
        for i in range(n):
            if table[e][i] != i or table[i][e] != i:
                raise ValueError("identity is not a two-sided unit")
        inv = [None] * n
        for i in range(n):
            for j in range(n):
                if table[i][j] == e and table[j][i] == e:
                    inv[i] = j
                    break
            if inv[i] is None:
                raise ValueError(f"element {i} has no two-sided inverse")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise ValueError(f"associativity fails at ({i},{j},{k})")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "cayley", table)
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverses", tuple(inv))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteGroup is immutable")

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def commutator(self, i: int, j: int) -> int:
        return self.mul(self.mul(i, j), self.mul(self.inv(i), self.inv(j)))

    def is_abelian(self) -> bool:
        return all(
            self.cayley[i][j] == self.cayley[j][i]
            for i in range(self.order)
            for j in range(i)
        )

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return (self.cayley, self.identity) == (other.cayley, other.identity)

    def __hash__(self):
        return hash((self.cayley, self.identity))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def to_json(self) -> str:
        return json.dumps(
            {
                "order": self.order,
                "cayley": [list(r) for r in self.cayley],
                "identity": self.identity,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "FiniteGroup":
        doc = json.loads(text)
        g = cls(doc["cayley"], doc["identity"])
        if g.order != doc["order"]:
            raise ValueError("order field does not match table size")
        return g


def conjugacy_classes(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Partition of element indices into conjugacy classes.

    Classes are sorted internally and listed by smallest member, so the
    identity class comes first.
    """
    remaining = set(range(group.order))
    classes = []
    while remaining:
        x = min(remaining)
        orbit = {group.mul(group.mul(g, x), group.inv(g)) for g in range(group.order)}
        classes.append(tuple(sorted(orbit)))
        remaining -= orbit
    return tuple(sorted(classes))


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic order must be >= 1")
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], 0)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    n, m = a.order, b.order

    def idx(i, j):
        return i * m + j

    table = [
        [
            idx(a.mul(i1, i2), b.mul(j1, j2))
            for i2 in range(n)
            for j2 in range(m)
        ]
        for i1 in range(n)
        for j1 in range(m)
    ]
    return FiniteGroup(table, idx(a.identity, b.identity))


def abelian_cayley(group: FiniteAbelianGroup) -> FiniteGroup:
    """The Cayley-table avatar of an abelian group (lexicographic indexing)."""
    elems = list(group.elements())
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[group.add(x, y)] for y in elems] for x in elems]
    return FiniteGroup(table, index[group.zero()])


def symmetric_group_3() -> FiniteGroup:
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p*q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(3))

    table = [[index[compose(p, q)] for q in perms] for p in perms]
    return FiniteGroup(table, index[(0, 1, 2)])


def dihedral_group_4() -> FiniteGroup:
    """Symmetries of the square; element a + 4b stands for r^a s^b."""

    def mul(x, y):
        a1, b1 = x % 4, x // 4
        a2, b2 = y % 4, y // 4
        a = (a1 + (a2 if b1 == 0 else -a2)) % 4
        return a + 4 * ((b1 + b2) % 2)

    return FiniteGroup([[mul(x, y) for y in range(8)] for x in range(8)], 0)


def quaternion_group_8() -> FiniteGroup:
    """Unit quaternions {+-1, +-i, +-j, +-k}; index 2*axis + (sign<0)."""
    axis_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
        (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }

    def mul(x, y):
        ax, sx = x // 2, 1 - 2 * (x % 2)
        ay, sy = y // 2, 1 - 2 * (y % 2)
        s, a = axis_mul[(ax, ay)]
        sign = sx * sy * s
        return 2 * a + (0 if sign > 0 else 1)

    return FiniteGroup([[mul(x, y) for y in range(8)] for x in range(8)], 0)


def parse_abelian(name: str) -> FiniteAbelianGroup:
    """Parse the mini-language 'Z2', 'Z2xZ4', 'Z1' into an abelian group."""
    name = name.strip()
    if name in ("Z1", "1", "trivial", "0"):
        return FiniteAbelianGroup()
    orders = []
    for part in name.split("x"):
        part = part.strip()
        if not part.startswith("Z"):
            raise ValueError(f"cannot parse abelian group {name!r}")
        orders.append(int(part[1:]))
    return FiniteAbelianGroup.from_cyclic_orders(orders)


def named_group(name: str) -> FiniteGroup:
    """Group presets for the CLI mini-language and the test suite."""
    name = name.strip()
    if name == "S3":
        return symmetric_group_3()
    if name == "D4":
        return dihedral_group_4()
    if name == "Q8":
        return quaternion_group_8()
    return abelian_cayley(parse_abelian(name))


def preset_group_documents() -> dict[str, str]:
    """The shipped presets as JSON documents in the Cayley-table schema."""
    names = ("Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8")
    return {name: named_group(name).to_json() for name in names}
