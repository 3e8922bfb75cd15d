"""Alexander modules of quandle presentations.

A primary relation is first rewritten as ``R_{g_n}^{k_n} ... R_{g_1}^{k_1}(y) = z``
where the translations are listed in the order they are applied (g_1 first).
In an affine quandle ``R_g^k(v) = t^k v + (1 - t^k) g``, so the relation
linearizes to

    t^(k_1+...+k_n) e_y + sum_i (1 - t^(k_i)) t^(k_(i+1)+...+k_n) e_(g_i) - e_z = 0

with the basepoint generator's column dropped (its e is zero).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from . import laurent
from .errors import NotColorable, NotPrimary
from .laurent import ONE, ZERO, LaurentPoly, T
from .lmatrix import LMatrix, alexander_polys, delta_n
from .presentation import QPresentation, QRelation

log = logging.getLogger(__name__)

COLORABLE = "colorable"
NOT_COLORABLE = "not_colorable"


@dataclass(frozen=True)
class TranslatedRelation:
    source: str
    translations: tuple[tuple[str, int], ...]
    target: str

    def __str__(self):
        ts = "".join(f"R[{g}]^{k}" for g, k in reversed(self.translations))
        return f"{ts}({self.source}) = {self.target}" if ts else f"{self.source} = {self.target}"


def normalize_relation(r: QRelation, primary: set[str] | None = None) -> TranslatedRelation:
    """Rewrite [y, w] = [z, v] as the translation word w v^-1 applied to y."""
    word = r.lhs.word * r.rhs.word.inverse()
    if primary is not None:
        bad = word.symbols() - set(primary)
        if bad:
            raise NotPrimary(f"relation {r} uses operator symbols {sorted(bad)}")
    return TranslatedRelation(r.lhs.base, word.letters, r.rhs.base)


def linear_row(rel: TranslatedRelation) -> dict[str, LaurentPoly]:
    """Coefficients of LHS - RHS of the linearized relation, by generator."""
    row: dict[str, LaurentPoly] = {}

    def add(g, c):
        row[g] = row.get(g, ZERO) + c

    later = 0
    for g, k in reversed(rel.translations):
        add(g, (ONE - T ** k) * T ** later)
        later += k
    add(rel.source, T ** later)
    add(rel.target, -ONE)
    return row


def linearize(p: QPresentation) -> LMatrix:
    """Presentation matrix of the Alexander module: one row per relation,
    one column per generator except the first (the basepoint)."""
    if not p.is_primary:
        raise NotPrimary("linearize needs a primary presentation")
    gens = p.primary_gens
    cols = gens[1:]
    index = {g: i for i, g in enumerate(cols)}
    primary = set(gens)
    rows = []
    for r in p.primary_rels:
        row = linear_row(normalize_relation(r, primary))
        out = [ZERO] * len(cols)
        for g, c in row.items():
            if g in index:
                out[index[g]] = out[index[g]] + c
        rows.append(tuple(out))
    return LMatrix(len(rows), len(cols), tuple(rows))


Source = Union[QPresentation, LMatrix]


def _matrix(x: Source) -> LMatrix:
    return x if isinstance(x, LMatrix) else linearize(x)


def delta(x: Source, n: int = 1) -> LaurentPoly:
    return delta_n(_matrix(x), n)


def all_deltas(x: Source) -> list[LaurentPoly]:
    """Delta_1 .. Delta_(r+1); the last one is always 1."""
    M = _matrix(x)
    return alexander_polys(M, M.cols + 1)


def _ratios(deltas: list[LaurentPoly]) -> list[tuple[LaurentPoly, bool]]:
    """Delta_i / Delta_(i+1) for i = 1 .. len-1; (0, False) when undefined."""
    out = []
    for a, b in zip(deltas, deltas[1:]):
        if b.is_zero():
            out.append((ZERO, False))
            continue
        q = laurent.divexact(a, b)
        out.append((a, False) if q is None else (laurent.normalize(q), True))
    return out


def module_factors(x: Source) -> list[tuple[LaurentPoly, bool]]:
    """Cyclic factors Delta_(n-1), Delta_(n-2)/Delta_(n-1), ..., Delta_1/Delta_2.

    n is the first index with Delta_n a unit.  Each factor carries a flag
    telling whether the quotient was an exact division.
    """
    ds = all_deltas(x)
    n = next(i for i, d in enumerate(ds, start=1) if laurent.is_unit(d))
    if n == 1:
        return []
    head = ds[: n - 1]
    factors = [(head[-1], True)]
    factors += list(reversed(_ratios(head)))
    return factors


def affine_colorability(x: Source) -> str:
    """NOT_COLORABLE exactly when Delta_1 is 1."""
    d1 = delta(x, 1)
    if d1.is_zero():
        log.warning("Delta_1 = 0: the module is not torsion; treating as colorable")
    return NOT_COLORABLE if d1 == ONE else COLORABLE


@dataclass(frozen=True)
class ColoringTarget:
    delta1: LaurentPoly
    j: int
    multiplier: LaurentPoly

    @property
    def quandle(self) -> str:
        return f"Aff(Lambda/({self.delta1}), t)"

    @property
    def ideal(self) -> str:
        return f"({self.multiplier}) + ({self.delta1})"

    def to_json_obj(self) -> dict:
        return {
            "delta1": str(self.delta1),
            "j": self.j,
            "multiplier": str(self.multiplier),
            "quandle": self.quandle,
            "ideal": self.ideal,
        }


def coloring_target(x: Source) -> ColoringTarget:
    """Affine quandle Aff(Lambda/(Delta_1), t) that colors the knot nontrivially.

    ``j`` is the largest i with Delta_i / Delta_(i+1) not a unit and
    ``multiplier`` is Delta_(j+1); the colors used span the ideal generated
    by the multiplier modulo Delta_1.
    """
    ds = all_deltas(x)
    if ds[0] == ONE:
        raise NotColorable("Delta_1 = 1: no nontrivial affine coloring exists")
    if ds[0].is_zero():
        log.warning("Delta_1 = 0: coloring target is the free module")
    j = max(i for i, (q, ok) in enumerate(_ratios(ds), start=1)
            if not (ok and laurent.is_unit(q)))
    return ColoringTarget(ds[0], j, ds[j])
