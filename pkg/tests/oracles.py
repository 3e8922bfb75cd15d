"""Independent reference computations used by the tests.

Nothing here goes through the library's polynomial or matrix code: the
Alexander oracle builds its matrix directly from crossings in sympy, the
divisor oracle is Kronecker's method over plain integers, and the coloring
oracles enumerate assignments exhaustively.
"""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from functools import lru_cache

import sympy

from knotquandle.laurent import LaurentPoly

t = sympy.Symbol("t")


# ---------------------------------------------------------------------------
# Alexander polynomials through sympy


def sympy_crossing_matrix(d) -> sympy.Matrix:
    """Fox-style matrix read off the crossings, first arc's column dropped.

    A positive crossing in*over = out contributes t e_in + (1 - t) e_over - e_out;
    a negative one swaps the roles of in and out.
    """
    n = d.arc_count
    rows = []
    for c in d.crossings:
        src, dst = (c.under_in, c.under_out) if c.sign > 0 else (c.under_out, c.under_in)
        row = [sympy.Integer(0)] * n
        row[src - 1] += t
        row[c.over - 1] += 1 - t
        row[dst - 1] -= 1
        rows.append(row)
    if not rows:
        return sympy.zeros(0, max(n - 1, 0))
    return sympy.Matrix(rows)[:, 1:]


def sympy_delta(M: sympy.Matrix, n: int = 1) -> dict[int, int]:
    """Normalized gcd of the (cols - n + 1)-minors, as {exponent: coeff}."""
    r, m = M.shape[1], M.shape[0]
    k = r - n + 1
    if k <= 0:
        return {0: 1}
    if k > m:
        return {}
    g = sympy.Integer(0)
    for rows in itertools.combinations(range(m), k):
        for cols in itertools.combinations(range(r), k):
            g = sympy.gcd(g, M.extract(list(rows), list(cols)).det(method="berkowitz"))
    return sympy_normal(g)


def sympy_normal(expr) -> dict[int, int]:
    expr = sympy.expand(expr)
    if expr == 0:
        return {}
    num, den = sympy.fraction(sympy.together(expr))
    p = sympy.Poly(sympy.expand(num), t)
    terms = {m[0]: int(c) for m, c in p.terms()}
    lo = min(terms)
    top = terms[max(terms)]
    s = 1 if top > 0 else -1
    return {e - lo: s * c for e, c in terms.items()}


def as_dict(p: LaurentPoly) -> dict[int, int]:
    return dict(p.terms())


def sympy_poly(p: dict[int, int]):
    return sum(c * t ** e for e, c in p.items())


# ---------------------------------------------------------------------------
# Kronecker divisor search in Z[t]
#
# Polynomials are coefficient tuples, lowest degree first, constant term
# nonzero (the t-power is a unit in the Laurent ring and is shifted away).


def _ev(f, x):
    return sum(c * x ** i for i, c in enumerate(f))


def _int_divisors(v):
    v = abs(v)
    ds = [d for d in range(1, v + 1) if v % d == 0]
    return ds + [-d for d in ds]


@lru_cache(maxsize=None)
def _lagrange_basis(points):
    """Coefficient lists of the Lagrange basis polynomials through ``points``."""
    out = []
    for i, xi in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        out.append([c / denom for c in basis])
    return out


def _interpolate(points, values):
    """Integer coefficients of the polynomial through the points, or None."""
    basis = _lagrange_basis(tuple(points))
    coeffs = [sum(v * b[k] for v, b in zip(values, basis)) for k in range(len(points))]
    if any(c.denominator != 1 for c in coeffs):
        return None
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _divmod_exact(f, g):
    """Quotient of f by g over Z by schoolbook division, or None."""
    f = list(f)
    q = [0] * (len(f) - len(g) + 1) if len(f) >= len(g) else []
    if not q:
        return None
    for i in range(len(q) - 1, -1, -1):
        c, r = divmod(f[i + len(g) - 1], g[-1])
        if r:
            return None
        q[i] = c
        for j, gj in enumerate(g):
            f[i + j] -= c * gj
    if any(f):
        return None
    return tuple(q)


def _normal(f):
    return tuple(f) if f[-1] > 0 else tuple(-c for c in f)


@lru_cache(maxsize=None)
def kronecker_divisors(f: tuple[int, ...]) -> frozenset:
    """All divisors of f in Z[t] with nonzero constant term, normalized to a
    positive leading coefficient.  Valid for deg f <= 5: divisors of degree
    up to 2 come from interpolation through three nonzero values, larger
    ones as cofactors of the small ones."""
    assert f and f[0] != 0 and len(f) <= 6
    pts = [x for x in (0, 1, -1, 2, -2, 3, -3, 4, -4) if _ev(f, x) != 0][:3]
    found = set()
    for deg in range(0, 3):
        p = pts[: deg + 1]
        choices = [_int_divisors(_ev(f, x)) for x in p]
        # g and -g give the same normalized divisor
        choices[0] = [v for v in choices[0] if v > 0]
        for vals in itertools.product(*choices):
            g = _interpolate(p, vals)
            if not g or g[0] == 0 or len(g) - 1 != deg:
                continue
            if _divmod_exact(f, g) is not None:
                found.add(_normal(g))
    for g in list(found):
        q = _divmod_exact(f, g)
        found.add(_normal(q))
    return frozenset(found)


def zx(p: LaurentPoly) -> tuple[int, ...]:
    lo = p.min_exp
    return tuple(p.coefficient(e) for e in range(lo, p.max_exp + 1))


def brute_gcd(a: LaurentPoly, b: LaurentPoly) -> tuple[int, ...]:
    """The common divisor every other common divisor divides: the largest
    degree, then the largest leading coefficient."""
    common = kronecker_divisors(zx(a)) & kronecker_divisors(zx(b))
    return max(common, key=lambda g: (len(g), abs(g[-1]), g))


def random_small_poly(rng: random.Random, deg: int = 4, bound: int = 3) -> LaurentPoly:
    d = rng.randint(0, deg)
    cs = [rng.randint(-bound, bound) for _ in range(d + 1)]
    shift = rng.randint(-3, 3)
    return LaurentPoly({i + shift: c for i, c in enumerate(cs) if c})


def random_gcd_case(rng: random.Random, deg: int = 4, bound: int = 3):
    """A pair that usually shares a nontrivial factor, inside the size box."""
    for _ in range(50):
        g = random_small_poly(rng, 2, 2)
        if g.is_zero():
            continue
        a = g * random_small_poly(rng, 2, 2)
        b = g * random_small_poly(rng, 2, 2)
        if all(not p.is_zero() and p.span() <= deg and max(abs(c) for _, c in p.terms()) <= bound
               for p in (a, b)):
            return a, b
    return random_small_poly(rng, deg, bound), random_small_poly(rng, deg, bound)


# ---------------------------------------------------------------------------
# colorings


def brute_colorings(d, table) -> int:
    """Count arc assignments respecting every crossing, by full enumeration."""
    n = len(table)
    count = 0
    for colors in itertools.product(range(n), repeat=d.arc_count):
        ok = True
        for c in d.crossings:
            src, dst = (c.under_in, c.under_out) if c.sign > 0 else (c.under_out, c.under_in)
            if table[colors[src - 1]][colors[c.over - 1]] != colors[dst - 1]:
                ok = False
                break
        if ok:
            count += 1
    return count


class AffineInn:
    """Inn(Aff(Z_n, m)) as pairs (k, b) acting on the right by v -> m^k v + b."""

    def __init__(self, n: int, m: int):
        self.n, self.m = n, m
        order = 1
        while pow(m, order, n) != 1 % n:
            order += 1
        self.order = order

    def elements(self):
        # only translations in the image of (1 - m) and their shifts occur,
        # but the full affine group is a harmless superset
        return [(k, b) for k in range(self.order) for b in range(self.n)]

    def act(self, v, g):
        k, b = g
        return (pow(self.m, k, self.n) * v + b) % self.n

    def then(self, g, h):
        """First g, then h."""
        k1, b1 = g
        k2, b2 = h
        return ((k1 + k2) % self.order, (pow(self.m, k2, self.n) * b1 + b2) % self.n)

    def inverse(self, g):
        k, b = g
        ki = (-k) % self.order
        return (ki, (-pow(self.m, ki, self.n) * b) % self.n)

    def right(self, x):
        """R_x: v -> m v + (1 - m) x."""
        return (1 % self.order, ((1 - self.m) * x) % self.n)

    identity = (0, 0)


def eval_word(inn: AffineInn, word, assign):
    g = inn.identity
    for sym, e in word.letters:
        h = assign[sym]
        if e < 0:
            h = inn.inverse(h)
        for _ in range(abs(e)):
            g = inn.then(g, h)
    return g


def presentation_affine_colorings(p, n: int, m: int) -> list[dict[str, int]]:
    """Every assignment of Aff(Z_n, m) colors to the primary generators that
    extends to a representation of the whole general presentation.

    Primary generators x act as R_x; operator generators range over the
    affine group.  Primary relations are checked pointwise, operator
    relations as group identities.  An operator relation with a bare
    generator on one side and known symbols on the other defines that
    generator; otherwise the solver branches over the whole group.
    """
    inn = AffineInn(n, m)
    group = inn.elements()
    prim = set(p.primary_gens)
    pure = [r for r in p.primary_rels if (r.lhs.word.symbols() | r.rhs.word.symbols()) <= prim]
    mixed = [r for r in p.primary_rels if r not in pure]

    def holds(r, col, assign):
        return (inn.act(col[r.lhs.base], eval_word(inn, r.lhs.word, assign))
                == inn.act(col[r.rhs.base], eval_word(inn, r.rhs.word, assign)))

    def bare(w):
        return w.letters[0][0] if len(w.letters) == 1 and w.letters[0][1] == 1 else None

    def extend(col, assign):
        assign = dict(assign)
        changed = True
        while changed:
            changed = False
            for r in p.operator_rels:
                lhs, rhs = (r.lhs, r.rhs) if hasattr(r, "rhs") else (None, None)
                if lhs is None:
                    continue
                for a, b in ((lhs, rhs), (rhs, lhs)):
                    g = bare(a)
                    if g is not None and g not in assign and b.symbols() <= set(assign):
                        assign[g] = eval_word(inn, b, assign)
                        changed = True
        for r in p.operator_rels:
            if r.relator().symbols() <= set(assign) and \
                    eval_word(inn, r.relator(), assign) != inn.identity:
                return False
        for r in mixed:
            syms = r.lhs.word.symbols() | r.rhs.word.symbols()
            if syms <= set(assign) and not holds(r, col, assign):
                return False
        missing = [g for g in p.operator_gens if g not in assign]
        if not missing:
            return True
        return any(extend(col, {**assign, missing[0]: h}) for h in group)

    out = []
    for colors in itertools.product(range(n), repeat=len(p.primary_gens)):
        col = dict(zip(p.primary_gens, colors))
        base = {g: inn.right(c) for g, c in col.items()}
        if all(holds(r, col, base) for r in pure) and extend(col, base):
            out.append(col)
    return out


# ---------------------------------------------------------------------------
# random finite quandles from group constructions


def _perm_mul(p, q):
    return tuple(p[i] for i in q)


def _sym_group(k):
    return [tuple(p) for p in itertools.permutations(range(k))]


def _conj_classes(k):
    G = _sym_group(k)
    seen, classes = set(), []
    for g in G:
        if g in seen:
            continue
        cl = set()
        for h in G:
            hi = tuple(sorted(range(k), key=lambda i: h[i]))
            cl.add(_perm_mul(_perm_mul(h, g), hi))
        seen |= cl
        classes.append(sorted(cl))
    return classes


def _dihedral_group(k):
    """D_k as permutations of k points."""
    rot = tuple((i + 1) % k for i in range(k))
    ref = tuple((-i) % k for i in range(k))
    els = {tuple(range(k))}
    frontier = list(els)
    while frontier:
        x = frontier.pop()
        for g in (rot, ref):
            y = _perm_mul(g, x)
            if y not in els:
                els.add(y)
                frontier.append(y)
    return sorted(els)


def _classes_in(G):
    seen, classes = set(), []
    inv = {g: tuple(sorted(range(len(g)), key=lambda i: g[i])) for g in G}
    for g in G:
        if g in seen:
            continue
        cl = {_perm_mul(_perm_mul(h, g), inv[h]) for h in G}
        seen |= cl
        classes.append(sorted(cl))
    return classes


def conjugation_table(elements):
    idx = {e: i for i, e in enumerate(elements)}
    inv = {e: tuple(sorted(range(len(e)), key=lambda i: e[i])) for e in elements}
    return [[idx[_perm_mul(inv[y], _perm_mul(x, y))] for y in elements] for x in elements]


def core_table_cyclic(n):
    return [[(2 * y - x) % n for y in range(n)] for x in range(n)]


def core_table_klein():
    els = [(a, b) for a in range(2) for b in range(2)]
    idx = {e: i for i, e in enumerate(els)}
    # y x^-1 y = x in an elementary abelian 2-group
    return [[idx[x] for y in els] for x in els]


def core_table_s3():
    G = _sym_group(3)
    idx = {g: i for i, g in enumerate(G)}
    inv = {g: tuple(sorted(range(3), key=lambda i: g[i])) for g in G}
    return [[idx[_perm_mul(_perm_mul(y, inv[x]), y)] for y in G] for x in G]


def affine_table(n, m):
    return [[(m * x + (1 - m) * y) % n for y in range(n)] for x in range(n)]


def disjoint_union(A, B):
    """x * y = x across the two parts."""
    a, b = len(A), len(B)
    T = [[0] * (a + b) for _ in range(a + b)]
    for i in range(a + b):
        for j in range(a + b):
            if i < a and j < a:
                T[i][j] = A[i][j]
            elif i >= a and j >= a:
                T[i][j] = B[i - a][j - a] + a
            else:
                T[i][j] = i
    return T


def _base_tables():
    out = []
    for k in (3, 4):
        for cl in _conj_classes(k):
            if len(cl) <= 8:
                out.append(conjugation_table(cl))
    for k in (3, 4):
        for cl in _classes_in(_dihedral_group(k)):
            out.append(conjugation_table(cl))
        G = _dihedral_group(k)
        if len(G) <= 8:
            out.append(conjugation_table(G))
    out.append(conjugation_table(_sym_group(3)))
    for n in range(1, 9):
        out.append(core_table_cyclic(n))
        for m in range(1, n):
            if math.gcd(m, n) == 1:
                out.append(affine_table(n, m))
    out.append(core_table_klein())
    out.append(core_table_s3())
    return out


BASE_TABLES = _base_tables()


def relabel(T, perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    n = len(T)
    return [[perm[T[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]


def random_quandle_table(rng: random.Random, max_size: int = 8):
    """A randomly relabelled quandle built from a group construction,
    sometimes a disjoint union of two of them."""
    small = [T for T in BASE_TABLES if len(T) <= max_size]
    T = rng.choice(small)
    if rng.random() < 0.3:
        room = [U for U in small if len(U) + len(T) <= max_size]
        if room:
            T = disjoint_union(T, rng.choice(room))
    perm = list(range(len(T)))
    rng.shuffle(perm)
    return relabel(T, perm)
