"""Dense matrices over Z[t, t^-1], minor GCDs and Alexander polynomials."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from . import laurent
from .errors import BadMinorSize, ParseError
from .laurent import ONE, ZERO, LaurentPoly

__all__ = [
    "LMatrix",
    "determinant",
    "minor_gcd",
    "alexander_polys",
    "delta_n",
    "block_diag",
]


@dataclass(frozen=True)
class LMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} array")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> LMatrix:
        """Build from nested sequences of LaurentPoly, int or polynomial text.

        ``cols`` is needed only for matrices with no rows.
        """
        conv = tuple(tuple(_as_poly(x) for x in r) for r in rows)
        if cols is None:
            cols = len(conv[0]) if conv else 0
        return cls(len(conv), cols, conv)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> LMatrix:
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def map(self, f: Callable[[LaurentPoly], LaurentPoly]) -> LMatrix:
        return LMatrix(self.rows, self.cols, tuple(tuple(f(x) for x in r) for r in self.entries))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> LMatrix:
        return LMatrix(len(rows), len(cols),
                       tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(x) for x in r] for r in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> LMatrix:
        try:
            m, r, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"matrix JSON needs rows, cols and entries: {exc}") from None
        extra = set(obj) - {"rows", "cols", "entries"}
        if extra:
            raise ParseError(f"unknown matrix fields: {sorted(extra)}")
        try:
            return cls(m, r, tuple(tuple(LaurentPoly.parse(x) for x in row) for row in entries))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str) -> LMatrix:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from None
        return cls.from_json_obj(obj)

    def __str__(self):
        if not self.rows:
            return f"[] ({self.rows}x{self.cols})"
        cells = [[str(x) for x in r] for r in self.entries]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return LaurentPoly.parse(x)


def determinant(M: LMatrix) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant of a square matrix."""
    n = M.rows
    if n != M.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    a = [list(r) for r in M.entries]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                q = laurent.divexact(num, prev)
                if q is None:  # impossible in an integral domain
                    raise ArithmeticError("Bareiss step was not exact")
                a[i][j] = q
            a[i][k] = ZERO
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def minor_gcd(M: LMatrix, k: int) -> LaurentPoly:
    """Normalized GCD of all k x k minors; stops early once the GCD is 1."""
    if not 1 <= k <= min(M.rows, M.cols):
        raise BadMinorSize(f"minor size {k} outside 1..{min(M.rows, M.cols)}")
    g = ZERO
    for rows in combinations(range(M.rows), k):
        for cols in combinations(range(M.cols), k):
            d = determinant(M.submatrix(rows, cols))
            if d.is_zero():
                continue
            g = laurent.gcd(g, d)
            if g == ONE:
                return g
    return g


def delta_n(M: LMatrix, n: int) -> LaurentPoly:
    """The n-th Alexander polynomial of the module presented by ``M``.

    Rows are relations and columns generators.  With m rows, r columns and
    k = r - n + 1 this is 0 when 0 < m < k, the GCD of the k-minors when
    0 < k <= m, and 1 otherwise (in particular whenever m == 0).
    """
    if n < 1:
        raise ValueError("Alexander polynomials are indexed from 1")
    m, r = M.rows, M.cols
    k = r - n + 1
    if 0 < m < k:
        return ZERO
    if 0 < k <= m:
        return minor_gcd(M, k)
    return ONE


def alexander_polys(M: LMatrix, count: int | None = None) -> list[LaurentPoly]:
    """[Delta_1, ..., Delta_count]; ``count`` defaults to the column count."""
    if count is None:
        count = M.cols
    return [delta_n(M, n) for n in range(1, count + 1)]


def block_diag(A: LMatrix, B: LMatrix) -> LMatrix:
    rows = [tuple(r) + (ZERO,) * B.cols for r in A.entries]
    rows += [(ZERO,) * A.cols + tuple(r) for r in B.entries]
    return LMatrix(A.rows + B.rows, A.cols + B.cols, tuple(rows))
