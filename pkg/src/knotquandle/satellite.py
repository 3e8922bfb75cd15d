"""Satellite knots from a pattern in the solid torus and a companion knot."""
from __future__ import annotations

from dataclasses import dataclass

from . import alexander
from .diagram import Diagram, component_count, component_cycles, winding_number
from .errors import NotAKnot, WrongKind
from .laurent import subst_power
from .lmatrix import LMatrix, block_diag
from .presentation import (
    OPERATOR,
    GroupWord,
    OpRelation,
    QPresentation,
    close_in_sphere,
    meridian_word,
    present_knot,
    present_solid_torus,
    wirtinger_group,
)

PATTERN_PREFIX = "x"
COMPANION_PREFIX = "y"


def companion_longitude(d: Diagram, start_arc: int, prefix: str = COMPANION_PREFIX) -> GroupWord:
    """Blackboard longitude of a knot diagram.

    Walks once around the knot starting on ``start_arc`` and records the
    generator of every over-arc passed under, raised to the crossing sign.
    The word commutes with the meridian of ``start_arc`` in the knot group.
    """
    if d.kind != "classical":
        raise WrongKind(f"companion must be a classical diagram, got {d.kind}")
    cycles = component_cycles(d)
    if len(cycles) != 1:
        raise NotAKnot(f"companion diagram has {len(cycles)} components")
    if start_arc not in d.arcs:
        raise ValueError(f"arc {start_arc} is not in the companion diagram")
    cycle = cycles[0]
    i = cycle.index(start_arc)
    letters = []
    for arc in cycle[i:] + cycle[:i]:
        c = d.ending_at(arc)
        if c is not None:
            letters.append((f"{prefix}{c.over}", c.sign))
    return GroupWord(tuple(letters))


@dataclass(frozen=True)
class SatelliteSpec:
    """Pattern in the standard solid torus plus a companion knot.

    ``meridian_arc`` names the companion arc whose generator is glued to the
    pattern meridian; ``longitude_arc`` is where the longitude walk starts
    (defaults to ``meridian_arc``).
    """

    pattern: Diagram
    companion: Diagram
    meridian_arc: int = 1
    longitude_arc: int | None = None
    preferred_framing: bool = False

    def __post_init__(self):
        if self.pattern.kind != "solid_torus":
            raise WrongKind(f"pattern must be a solid_torus diagram, got {self.pattern.kind}")
        if self.companion.kind != "classical":
            raise WrongKind(f"companion must be a classical diagram, got {self.companion.kind}")
        if component_count(self.companion) != 1:
            raise NotAKnot("companion must be a knot")
        for a in (self.meridian_arc, self.longitude_arc):
            if a is not None and a not in self.companion.arcs:
                raise ValueError(f"arc {a} is not in the companion diagram")

    @property
    def winding_number(self) -> int:
        return winding_number(self.pattern)

    def longitude(self) -> GroupWord:
        start = self.meridian_arc if self.longitude_arc is None else self.longitude_arc
        lam = companion_longitude(self.companion, start)
        if self.preferred_framing:
            mu = GroupWord.gen(f"{COMPANION_PREFIX}{self.meridian_arc}")
            lam = lam * mu ** (-self.companion.writhe())
        return lam


def satellite_presentation(s: SatelliteSpec) -> QPresentation:
    """General presentation glued from the pattern and the companion group.

    Operator relations: the pattern's, the companion's Wirtinger relations,
    then mu_V = mu_U and a1 = lambda_V.
    """
    pat = present_solid_torus(s.pattern, PATTERN_PREFIX, OPERATOR)
    comp = wirtinger_group(s.companion, COMPANION_PREFIX)
    glue = (
        OpRelation(GroupWord.gen(f"{COMPANION_PREFIX}{s.meridian_arc}"),
                   meridian_word(s.pattern, PATTERN_PREFIX)),
        OpRelation(GroupWord.gen(OPERATOR), s.longitude()),
    )
    return QPresentation(
        pat.primary_gens,
        pat.operator_gens + comp.generators,
        pat.primary_rels,
        pat.operator_rels + comp.relations + glue,
    )


def pattern_matrix(pattern: Diagram) -> LMatrix:
    """V_P(t): linearization of the pattern closed up in the 3-sphere."""
    return alexander.linearize(close_in_sphere(present_solid_torus(pattern, PATTERN_PREFIX)))


def companion_matrix(companion: Diagram, w: int = 1) -> LMatrix:
    """V_C(t^w)."""
    V = alexander.linearize(present_knot(companion, COMPANION_PREFIX))
    return V.map(lambda p: subst_power(p, w))


def satellite_alexander_matrix(s: SatelliteSpec) -> LMatrix:
    """Block-diagonal presentation matrix of the satellite's Alexander module."""
    return block_diag(pattern_matrix(s.pattern), companion_matrix(s.companion, s.winding_number))
