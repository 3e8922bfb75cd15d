"""Quandle colorings of classical knot diagrams.

Two independent routes: a backtracking search over an arbitrary finite
quandle, and for the affine quandles Aff(Z_n, m) an exact solve of the
linear system over Z_n through an integer diagonal form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .diagram import Diagram, component_cycles
from .errors import NotAUnit, WrongKind
from .finiteq import FiniteQuandle
from .lmatrix import LMatrix


def _constraints(d: Diagram) -> list[tuple[int, int, int]]:
    """(src, over, dst) triples meaning color[src] * color[over] = color[dst]."""
    if d.kind != "classical":
        raise WrongKind(f"colorings are defined for classical diagrams, got {d.kind}")
    out = []
    for c in d.crossings:
        if c.sign > 0:
            out.append((c.under_in, c.over, c.under_out))
        else:
            out.append((c.under_out, c.over, c.under_in))
    return out


def iter_colorings(d: Diagram, Q: FiniteQuandle) -> Iterator[dict[int, int]]:
    """All colorings, in a fixed order.

    Arcs are branched on in the order they are met while tracing the
    components; after each choice every crossing with two known colors
    (source and over-arc, or over-arc and target) fixes the third.
    """
    cons = _constraints(d)
    touching: dict[int, list[tuple[int, int, int]]] = {a: [] for a in d.arcs}
    for c in cons:
        for a in set(c):
            touching[a].append(c)
    order = [a for cyc in component_cycles(d) for a in cyc]
    table = Q.table
    ldiv = Q.right_division()
    color: dict[int, int] = {}

    def propagate(arc: int, trail: list[int]) -> bool:
        stack = [arc]
        while stack:
            a = stack.pop()
            for src, over, dst in touching[a]:
                cs, co, cd = color.get(src), color.get(over), color.get(dst)
                if cs is not None and co is not None:
                    want = table[cs][co]
                    if cd is None:
                        color[dst] = want
                        trail.append(dst)
                        stack.append(dst)
                    elif cd != want:
                        return False
                elif co is not None and cd is not None:
                    color[src] = ldiv[cd][co]
                    trail.append(src)
                    stack.append(src)
        return True

    def search(i: int):
        while i < len(order) and order[i] in color:
            i += 1
        if i == len(order):
            yield dict(sorted(color.items()))
            return
        arc = order[i]
        for v in range(Q.size):
            color[arc] = v
            trail = [arc]
            if propagate(arc, trail):
                yield from search(i + 1)
            for a in trail:
                del color[a]

    yield from search(0)


def count_colorings(d: Diagram, Q: FiniteQuandle) -> int:
    """Number of colorings, constant ones included."""
    return sum(1 for _ in iter_colorings(d, Q))


def find_nontrivial_coloring(d: Diagram, Q: FiniteQuandle) -> dict[int, int] | None:
    for c in iter_colorings(d, Q):
        if len(set(c.values())) > 1:
            return c
    return None


def is_coloring(d: Diagram, Q: FiniteQuandle, color: dict[int, int]) -> bool:
    return all(Q.table[color[s]][color[o]] == color[t] for s, o, t in _constraints(d))


# ---------------------------------------------------------------------------
# affine quandles Aff(Z_n, m)

@dataclass(frozen=True)
class AffineColorings:
    """``count`` solutions; ``free_rank`` of them are full Z_n summands.

    For prime n, count == n ** free_rank.
    """

    modulus: int
    multiplier: int
    count: int
    free_rank: int
    sample: dict[int, int] | None

    @property
    def nontrivial(self) -> bool:
        return self.sample is not None

    def to_json_obj(self) -> dict:
        return {
            "count": self.count,
            "nontrivial": self.nontrivial,
            "sample": None if self.sample is None else {str(k): v for k, v in self.sample.items()},
        }


def diagonalize(A: list[list[int]], ncols: int) -> tuple[list[int], list[list[int]]]:
    """Row and column operations over Z bringing A to diagonal form.

    Returns the nonzero diagonal entries (d_0, ..., d_(rank-1)) and the
    unimodular column transform V with U A V = diag(d).
    """
    a = [list(r) for r in A]
    m = len(a)
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    diag = []
    t = 0
    while t < min(m, ncols):
        best = None
        for i in range(t, m):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        for r in V:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                    for r in V:
                        r[j] -= q * r[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                break
            # a smaller remainder exists in row or column t: make it the pivot
            i_best = min((i for i in range(t + 1, m) if a[i][t]), default=None,
                         key=lambda i: abs(a[i][t]))
            j_best = min((j for j in range(t + 1, ncols) if a[t][j]), default=None,
                         key=lambda j: abs(a[t][j]))
            if i_best is not None and (j_best is None or abs(a[i_best][t]) <= abs(a[t][j_best])):
                a[t], a[i_best] = a[i_best], a[t]
            else:
                for r in a:
                    r[t], r[j_best] = r[j_best], r[t]
                for r in V:
                    r[t], r[j_best] = r[j_best], r[t]
        diag.append(a[t][t])
        t += 1
    return diag, V


def _solve_mod(A: list[list[int]], ncols: int, n: int):
    """Count solutions of A x = 0 over Z_n and list generators of the solution group."""
    diag, V = diagonalize(A, ncols)
    count = 1
    free = 0
    gens = []
    for i in range(ncols):
        g = math.gcd(diag[i], n) if i < len(diag) else n
        count *= g
        if g == n:
            free += 1
        if g > 1:
            step = n // g
            gens.append([(V[r][i] * step) % n for r in range(ncols)])
    return count, free, gens


def _unit_inverse(m: int, n: int) -> int:
    if math.gcd(m, n) != 1:
        raise NotAUnit(f"{m} is not a unit modulo {n}")
    return pow(m, -1, n)


def affine_colorings(d: Diagram, n: int, m: int) -> AffineColorings:
    """Colorings by Aff(Z_n, m), x * y = m x + (1 - m) y, by linear algebra."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    minv = _unit_inverse(m, n)
    if d.kind != "classical":
        raise WrongKind(f"colorings are defined for classical diagrams, got {d.kind}")
    arcs = list(d.arcs)
    col = {a: i for i, a in enumerate(arcs)}
    rows = []
    for c in d.crossings:
        row = [0] * len(arcs)
        k = m if c.sign > 0 else minv
        row[col[c.under_in]] += k
        row[col[c.over]] += 1 - k
        row[col[c.under_out]] -= 1
        rows.append(row)
    count, free, gens = _solve_mod(rows, len(arcs), n)
    sample = None
    for g in gens:
        if len(set(g)) > 1:
            sample = {a: g[col[a]] for a in arcs}
            break
    return AffineColorings(n, m, count, free, sample)


def matrix_affine_colorings(M: LMatrix, n: int, m: int) -> AffineColorings:
    """Affine colorings counted through a presentation matrix of the module.

    A coloring is a base color plus a module map to Z_n with t acting as m,
    i.e. a vector v with M(m) v = 0 mod n, so the count is n * |kernel|.
    The sample, if any, is a nonzero kernel vector keyed by column index.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    minv = _unit_inverse(m, n)

    def ev(p):
        total = 0
        for e, c in p.terms():
            total += c * (pow(m, e, n) if e >= 0 else pow(minv, -e, n))
        return total % n

    rows = [[ev(x) for x in r] for r in M.entries]
    count, free, gens = _solve_mod(rows, M.cols, n)
    sample = None
    for g in gens:
        if any(g):
            sample = dict(enumerate(g))
            break
    # the base color contributes one more free Z_n summand
    return AffineColorings(n, m, n * count, free + 1, sample)
