"""Integer Laurent polynomials, the ring Z[t, t^-1].

Polynomials are immutable and hashable.  Coefficients are Python ints, so
nothing overflows when minors of large presentation matrices are expanded.

The canonical text form lists terms by decreasing exponent::

    >>> LaurentPoly.parse("1 - t + t^2")
    LaurentPoly('t^2 - t + 1')
    >>> str(LaurentPoly({-1: 1, 0: -1}))
    't^-1 - 1'
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import PolynomialParseError, ZeroEvaluationPoint

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "T",
    "normalize",
    "gcd",
    "gcd_all",
    "divexact",
    "divides",
    "subst_power",
    "eval_at",
    "is_unit",
]


class LaurentPoly:
    """An element of Z[t, t^-1] stored as exponent -> nonzero coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, c in items:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def from_zx(cls, coeffs: list[int], shift: int = 0) -> LaurentPoly:
        """Build from an ascending coefficient list, lowest exponent ``shift``."""
        return cls((shift + i, c) for i, c in enumerate(coeffs))

    # -- inspection -------------------------------------------------------
    def coeffs(self) -> dict[int, int]:
        return dict(self._terms)

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    @property
    def leading_coeff(self) -> int:
        return self._terms[-1][1] if self._terms else 0

    def span(self) -> int:
        """max_exp - min_exp; the degree of the normalized polynomial."""
        return self.max_exp - self.min_exp if self._terms else -1

    def coefficient(self, e: int) -> int:
        for exp, c in self._terms:
            if exp == e:
                return c
        return 0

    def to_zx(self) -> tuple[list[int], int]:
        """Ascending coefficient list in Z[t] together with the shift removed."""
        if not self._terms:
            return [], 0
        lo = self.min_exp
        out = [0] * (self.max_exp - lo + 1)
        for e, c in self._terms:
            out[e - lo] = c
        return out, lo

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1 and abs(self._terms[0][1]) == 1:
                e, c = self._terms[0]
                return LaurentPoly({e * n: c ** (-n)})
            raise ValueError("only units can be raised to negative powers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly((e + k, c) for e, c in self._terms)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # -- text -------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly('{self}')"

    _TERM = re.compile(r"([+-])?(\d+)?(t(?:\^\(?(-?\d+)\)?)?)?")

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``; also accepts ``*`` and arbitrary spacing."""
        s = str(text).replace(" ", "").replace("*", "")
        if not s:
            raise PolynomialParseError("empty polynomial text")
        acc: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            sign, digits, var, exp = m.groups()
            if m.end() == pos or (digits is None and var is None):
                raise PolynomialParseError(f"cannot parse {text!r} at offset {pos}")
            if sign is None and not first:
                raise PolynomialParseError(f"missing operator in {text!r} at offset {pos}")
            c = int(digits) if digits is not None else 1
            if sign == "-":
                c = -c
            e = 0 if var is None else (int(exp) if exp is not None else 1)
            acc[e] = acc.get(e, 0) + c
            pos = m.end()
            first = False
        return cls(acc)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
T = LaurentPoly({1: 1})


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    return NotImplemented


# ---------------------------------------------------------------------------
# Z[t] helpers on ascending coefficient lists (no trailing zeros)

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _content(f: list[int]) -> int:
    g = 0
    for c in f:
        g = math.gcd(g, c)
    return g


def _primitive(f: list[int]) -> list[int]:
    c = _content(f)
    if c == 0:
        return []
    if f[-1] < 0:
        c = -c
    return [x // c for x in f]


def _pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        lead = r[-1]
        r = [lc * x for x in r]
        for i, gc in enumerate(g):
            r[shift + i] -= lead * gc
        _trim(r)
    return r


def _zx_gcd_primitive(f: list[int], g: list[int]) -> list[int]:
    # primitive remainder sequence; inputs are primitive and nonzero
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _pseudo_rem(f, g)
        f, g = g, _primitive(r)
    return _primitive(f)


def _zx_divexact(f: list[int], g: list[int]) -> list[int] | None:
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [] if not r else None
    q = [0] * (len(r) - dg)
    lc = g[-1]
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        lead, rem = divmod(r[-1], lc)
        if rem:
            return None
        q[shift] = lead
        for i, gc in enumerate(g):
            r[shift + i] -= lead * gc
        _trim(r)
    if r:
        return None
    return q


# ---------------------------------------------------------------------------

def normalize(a: LaurentPoly) -> LaurentPoly:
    """Associate of ``a`` with lowest exponent 0 and positive top coefficient."""
    if a.is_zero():
        return ZERO
    sign = 1 if a.leading_coeff > 0 else -1
    lo = a.min_exp
    return LaurentPoly((e - lo, sign * c) for e, c in a.terms())


def is_unit(a: LaurentPoly) -> bool:
    """True for +-t^k, the units of the ring."""
    t = a.terms()
    return len(t) == 1 and abs(t[0][1]) == 1


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Normalized greatest common divisor.

    Both arguments are shifted into Z[t]; the integer contents and the
    primitive parts are handled separately, the latter by a primitive
    remainder sequence so that every intermediate stays in Z[t].
    """
    if a.is_zero():
        return normalize(b)
    if b.is_zero():
        return normalize(a)
    fa, _ = a.to_zx()
    fb, _ = b.to_zx()
    c = math.gcd(_content(fa), _content(fb))
    g = _zx_gcd_primitive(_primitive(fa), _primitive(fb))
    return normalize(LaurentPoly.from_zx([c * x for x in g]))


def gcd_all(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    g = ZERO
    for p in polys:
        g = gcd(g, p)
        if g == ONE:
            break
    return g


def divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    """Return q with a == b*q if such q exists in Z[t, t^-1], else None."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    fa, sa = a.to_zx()
    fb, sb = b.to_zx()
    q = _zx_divexact(fa, fb)
    if q is None:
        return None
    return LaurentPoly.from_zx(q, sa - sb)


def divides(b: LaurentPoly, a: LaurentPoly) -> bool:
    if b.is_zero():
        return a.is_zero()
    return divexact(a, b) is not None


def subst_power(a: LaurentPoly, w: int) -> LaurentPoly:
    """Substitute t -> t^w.  For w == 0 this is the constant a(1)."""
    return LaurentPoly((w * e, c) for e, c in a.terms())


def eval_at(a: LaurentPoly, v: int) -> Fraction:
    """Exact value of ``a`` at the integer ``v``."""
    if v == 0:
        if a.terms() and a.min_exp < 0:
            raise ZeroEvaluationPoint("negative exponent evaluated at t = 0")
        return Fraction(a.coefficient(0))
    total = Fraction(0)
    for e, c in a.terms():
        total += c * (Fraction(v) ** e)
    return total
