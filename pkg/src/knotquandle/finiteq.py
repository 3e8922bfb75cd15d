"""Finite quandles given by Cayley tables.

``table[i][j]`` is ``i * j``; the right translation R_j is column j.
Permutations are tuples ``p`` with ``p[i]`` the image of i, composed as
functions: ``compose(p, q)`` is p after q.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    GroupTooLarge,
    NotAUnit,
    NotBijective,
    NotConnected,
    NotDistributive,
    NotIdempotent,
    NotNormal,
    NotWellDefined,
    ParseError,
)

DEFAULT_CAP = 10**6

Perm = tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


@dataclass(frozen=True)
class PermGroup:
    """Permutation group on 0..degree-1 with its enumerated elements."""

    degree: int
    generators: tuple[Perm, ...]
    elements: frozenset[Perm] = field(repr=False)

    @classmethod
    def generate(cls, degree: int, generators: Iterable[Perm], cap: int = DEFAULT_CAP) -> PermGroup:
        gens = tuple(dict.fromkeys(tuple(g) for g in generators))
        e = identity(degree)
        seen = {e}
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise GroupTooLarge(cap)
                    queue.append(y)
        return cls(degree, gens, frozenset(seen))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def is_abelian(self) -> bool:
        return all(compose(g, h) == compose(h, g) for g in self.generators for h in self.generators)

    def is_semiregular(self) -> bool:
        e = identity(self.degree)
        return all(p == e or all(p[i] != i for i in range(self.degree)) for p in self.elements)

    def orbits(self) -> list[list[int]]:
        return orbits(self.degree, self.generators)

    def derived_subgroup(self, cap: int = DEFAULT_CAP) -> PermGroup:
        """Normal closure of the generator commutators."""
        comms = [compose(compose(g, h), compose(invert(g), invert(h)))
                 for g in self.generators for h in self.generators]
        current = PermGroup.generate(self.degree, comms, cap)
        while True:
            extra = [compose(compose(g, c), invert(g))
                     for g in self.generators for c in current.generators]
            missing = [c for c in extra if c not in current]
            if not missing:
                return current
            current = PermGroup.generate(self.degree, current.generators + tuple(missing), cap)

    def normalized_by(self, others: Iterable[Perm]) -> bool:
        return all(compose(compose(g, n), invert(g)) in self
                   for g in others for n in self.generators)


def orbits(degree: int, generators: Iterable[Perm]) -> list[list[int]]:
    gens = list(generators)
    seen = [False] * degree
    out = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orb = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
                    stack.append(y)
        out.append(sorted(orb))
    return out


@dataclass(frozen=True)
class FiniteQuandle:
    size: int
    table: tuple[tuple[int, ...], ...]

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def right(self, j: int) -> Perm:
        """R_j : i -> i * j."""
        return tuple(self.table[i][j] for i in range(self.size))

    def right_division(self) -> tuple[tuple[int, ...], ...]:
        """``d[k][j]`` is the unique i with i * j = k."""
        d = [[0] * self.size for _ in range(self.size)]
        for i in range(self.size):
            for j in range(self.size):
                d[self.table[i][j]][j] = i
        return tuple(tuple(r) for r in d)

    def to_json_obj(self) -> dict:
        return {"size": self.size, "table": [list(r) for r in self.table]}

    def relabel(self, perm: Sequence[int]) -> FiniteQuandle:
        """Isomorphic copy in which element i is renamed perm[i]."""
        inv = invert(tuple(perm))
        return FiniteQuandle(self.size, tuple(
            tuple(perm[self.table[inv[a]][inv[b]]] for b in range(self.size))
            for a in range(self.size)))


def check_axioms(table: Sequence[Sequence[int]]) -> FiniteQuandle:
    """Validate a Cayley table against the three quandle axioms."""
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise ParseError("quandle table must be a nonempty square array")
    t = tuple(tuple(int(x) for x in r) for r in table)
    if any(not 0 <= x < n for r in t for x in r):
        raise ParseError("table entries out of range")
    for i in range(n):
        if t[i][i] != i:
            raise NotIdempotent(i)
    for j in range(n):
        if len({t[i][j] for i in range(n)}) != n:
            raise NotBijective(j)
    for i, j, k in product(range(n), repeat=3):
        if t[t[i][j]][k] != t[t[i][k]][t[j][k]]:
            raise NotDistributive(i, j, k)
    return FiniteQuandle(n, t)


def quandle_from_json(text: str) -> FiniteQuandle:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict) or set(obj) != {"size", "table"}:
        raise ParseError("quandle JSON must have exactly the fields size and table")
    if len(obj["table"]) != obj["size"]:
        raise ParseError("size does not match the table")
    return check_axioms(obj["table"])


# ---------------------------------------------------------------------------
# constructions

def affine_build(n: int, m: int) -> FiniteQuandle:
    """Aff(Z_n, m): i * j = m i + (1 - m) j mod n."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(m, n) != 1:
        raise NotAUnit(f"{m} is not a unit modulo {n}")
    return FiniteQuandle(n, tuple(tuple((m * i + (1 - m) * j) % n for j in range(n))
                                  for i in range(n)))


def dihedral(n: int) -> FiniteQuandle:
    """R_n = Aff(Z_n, -1)."""
    return affine_build(n, -1)


def trivial(n: int) -> FiniteQuandle:
    return FiniteQuandle(n, tuple(tuple(i for _ in range(n)) for i in range(n)))


def conjugation_quandle(elements: Sequence[Perm]) -> FiniteQuandle:
    """x * y = y^-1 x y on a conjugation-closed set of permutations."""
    idx = {tuple(p): i for i, p in enumerate(elements)}
    rows = []
    for x in elements:
        row = []
        for y in elements:
            c = compose(invert(y), compose(x, y))
            if c not in idx:
                raise ValueError("element set is not closed under conjugation")
            row.append(idx[c])
        rows.append(tuple(row))
    return check_axioms(rows)


def core_quandle(elements: Sequence, mul, inv) -> FiniteQuandle:
    """x * y = y x^-1 y on a group given by its element list and operations."""
    idx = {e: i for i, e in enumerate(elements)}
    rows = tuple(tuple(idx[mul(mul(y, inv(x)), y)] for y in elements) for x in elements)
    return check_axioms(rows)


# ---------------------------------------------------------------------------
# groups, orbits, congruences

def inn_dis(Q: FiniteQuandle, cap: int = DEFAULT_CAP) -> tuple[PermGroup, PermGroup]:
    """Inn(Q) = <R_x> and Dis(Q) = <R_x R_y^-1>."""
    rs = [Q.right(x) for x in range(Q.size)]
    inn = PermGroup.generate(Q.size, rs, cap)
    r0inv = invert(rs[0])
    # R_x R_y^-1 = (R_x R_0^-1)(R_y R_0^-1)^-1, so these generate Dis
    dis = PermGroup.generate(Q.size, [compose(r, r0inv) for r in rs], cap)
    return inn, dis


def is_connected(Q: FiniteQuandle) -> bool:
    return len(orbits(Q.size, [Q.right(x) for x in range(Q.size)])) == 1


def is_abelian(Q: FiniteQuandle, cap: int = DEFAULT_CAP) -> bool:
    """Dis(Q) commutative and semiregular."""
    _, dis = inn_dis(Q, cap)
    return dis.is_abelian() and dis.is_semiregular()


@dataclass(frozen=True)
class Congruence:
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    quotient: FiniteQuandle


def quotient_by_partition(Q: FiniteQuandle, classes: Sequence[Sequence[int]]) -> Congruence:
    """Quotient table on the classes; raises if the operation is not well defined."""
    class_of = [0] * Q.size
    for c, members in enumerate(classes):
        for x in members:
            class_of[x] = c
    k = len(classes)
    table = [[None] * k for _ in range(k)]
    for a, b in product(range(Q.size), repeat=2):
        ca, cb, cab = class_of[a], class_of[b], class_of[Q.table[a][b]]
        if table[ca][cb] is None:
            table[ca][cb] = cab
        elif table[ca][cb] != cab:
            raise NotWellDefined(f"classes {ca}*{cb} gives both {table[ca][cb]} and {cab}"
                                 f" (witness {a}*{b})")
    return Congruence(tuple(tuple(c) for c in classes), tuple(class_of), check_axioms(table))


def congruence_from_normal(Q: FiniteQuandle, N: PermGroup,
                           ambient: Iterable[Perm] | None = None) -> Congruence:
    """Orbit partition of N and the quotient quandle.

    Normality is checked against ``ambient`` (default: the generators of
    Inn(Q)), and the induced map on right translations is checked to be
    well defined rather than assumed.
    """
    amb = [Q.right(x) for x in range(Q.size)] if ambient is None else list(ambient)
    if not N.normalized_by(amb):
        raise NotNormal("subgroup is not normalized by the ambient generators")
    cong = quotient_by_partition(Q, N.orbits())
    for h in amb:
        for members in cong.classes:
            if len({cong.class_of[h[x]] for x in members}) != 1:
                raise NotWellDefined("an ambient automorphism does not act on the classes")
    return cong


def gamma_quotient(Q: FiniteQuandle, cap: int = DEFAULT_CAP) -> Congruence:
    """Quotient of a connected quandle by the orbits of Dis(Q)'s derived subgroup.

    The result is verified to be connected and abelian.
    """
    if not is_connected(Q):
        raise NotConnected("gamma quotient is only computed for connected quandles")
    _, dis = inn_dis(Q, cap)
    cong = congruence_from_normal(Q, dis.derived_subgroup(cap))
    R = cong.quotient
    if not (is_connected(R) and is_abelian(R, cap)):
        raise ArithmeticError("gamma quotient is not connected and abelian")
    return cong


def is_homomorphism(Q: FiniteQuandle, R: FiniteQuandle, h: Sequence[int]) -> bool:
    return all(h[Q.table[a][b]] == R.table[h[a]][h[b]] for a, b in product(range(Q.size), repeat=2))


def homomorphisms(Q: FiniteQuandle, R: FiniteQuandle) -> list[tuple[int, ...]]:
    """All quandle homomorphisms Q -> R by backtracking over element images."""
    out = []
    h: list[int | None] = [None] * Q.size

    def consistent(k):
        for a in range(k + 1):
            for b in range(k + 1):
                c = Q.table[a][b]
                if c <= k and h[c] != R.table[h[a]][h[b]]:
                    return False
        return True

    def rec(k):
        if k == Q.size:
            out.append(tuple(h))
            return
        for v in range(R.size):
            h[k] = v
            if consistent(k):
                rec(k + 1)
        h[k] = None

    rec(0)
    return out


def report(Q: FiniteQuandle, cap: int = DEFAULT_CAP) -> dict:
    inn, dis = inn_dis(Q, cap)
    out = {
        "size": Q.size,
        "axioms": "ok",
        "inn_order": inn.order,
        "dis_order": dis.order,
        "orbits": dis.orbits(),
        "connected": len(dis.orbits()) == 1,
        "abelian": dis.is_abelian() and dis.is_semiregular(),
    }
    if out["connected"]:
        g = gamma_quotient(Q, cap)
        out["gamma_classes"] = [list(c) for c in g.classes]
        out["gamma_quotient"] = [list(r) for r in g.quotient.table]
    else:
        out["gamma_quotient"] = None
    return out
