"""Combinatorial diagrams: classical, solid-torus and lens-space surgery form.

A diagram is a list of arcs (integers 1..n) with crossings and, for the
non-classical kinds, a list of passes under the axis curve.  Sign
conventions, shared with :mod:`knotquandle.presentation`:

* crossing, sign +1:  under_in * over = under_out
* crossing, sign -1:  under_out * over = under_in
* axis pass, sign +1: under_in ^ a1 = under_out, and the arc entering the
  meridian word is under_out
* axis pass, sign -1: under_out ^ a1 = under_in, and the arc entering the
  meridian word is under_in

Arcs that occur in no crossing and no axis pass are closed loops.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Literal

from .errors import ParseError, SurgeryError, ValidationError, WrongKind

Kind = Literal["classical", "solid_torus", "lens"]
KINDS = ("classical", "solid_torus", "lens")

_DIAGRAM_KEYS = {"kind", "arcs", "crossings", "axis", "surgery"}
_CROSSING_KEYS = {"under_in", "over", "under_out", "sign"}
_AXIS_KEYS = {"under_in", "under_out", "sign"}


@dataclass(frozen=True)
class Crossing:
    under_in: int
    over: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class AxisPass:
    under_in: int
    under_out: int
    sign: int
    order_index: int

    @property
    def near_arc(self) -> int:
        """The arc x_i of the relation x_{d+i} ^ a1 = x_i."""
        return self.under_out if self.sign > 0 else self.under_in

    @property
    def far_arc(self) -> int:
        """The arc x_{d+i} of the relation x_{d+i} ^ a1 = x_i."""
        return self.under_in if self.sign > 0 else self.under_out


@dataclass(frozen=True)
class Diagram:
    kind: str
    arc_count: int
    crossings: tuple[Crossing, ...] = ()
    axis: tuple[AxisPass, ...] = ()
    surgery: tuple[int, int] | None = None
    _succ: dict = field(default=None, init=False, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_succ", _validate(self))

    @property
    def arcs(self) -> range:
        return range(1, self.arc_count + 1)

    def successor(self, arc: int) -> int:
        return self._succ[arc]

    def ending_at(self, arc: int) -> Crossing | AxisPass | None:
        """The crossing or axis pass where ``arc`` ends (None for a loop)."""
        for c in self.crossings:
            if c.under_in == arc:
                return c
        for p in self.axis:
            if p.under_in == arc:
                return p
        return None

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def to_json_obj(self) -> dict:
        obj: dict = {
            "kind": self.kind,
            "arcs": self.arc_count,
            "crossings": [
                {"under_in": c.under_in, "over": c.over, "under_out": c.under_out, "sign": c.sign}
                for c in self.crossings
            ],
        }
        if self.kind != "classical":
            obj["axis"] = [
                {"under_in": p.under_in, "under_out": p.under_out, "sign": p.sign}
                for p in sorted(self.axis, key=lambda p: p.order_index)
            ]
        if self.surgery is not None:
            obj["surgery"] = {"p": self.surgery[0], "q": self.surgery[1]}
        return obj

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    def relabel(self, perm: dict[int, int]) -> Diagram:
        """Copy with every arc id ``a`` replaced by ``perm[a]``."""
        return Diagram(
            self.kind,
            self.arc_count,
            tuple(Crossing(perm[c.under_in], perm[c.over], perm[c.under_out], c.sign)
                  for c in self.crossings),
            tuple(AxisPass(perm[p.under_in], perm[p.under_out], p.sign, p.order_index)
                  for p in self.axis),
            self.surgery,
        )


def _validate(d: Diagram) -> dict[int, int]:
    if d.kind not in KINDS:
        raise ValidationError(f"unknown diagram kind {d.kind!r}")
    if d.arc_count < 1:
        raise ValidationError("a diagram needs at least one arc")
    if d.kind == "classical" and d.axis:
        raise ValidationError("classical diagrams have no axis passes")
    if d.kind == "lens":
        if d.surgery is None:
            raise SurgeryError("lens diagrams need surgery coefficients (p, q)")
        p, q = d.surgery
        if math.gcd(p, q) != 1:
            raise SurgeryError(f"surgery coefficients p={p}, q={q} are not coprime")
    elif d.surgery is not None:
        raise SurgeryError(f"{d.kind} diagrams carry no surgery coefficients")

    def check_arc(a, what):
        if not isinstance(a, int) or isinstance(a, bool) or not 1 <= a <= d.arc_count:
            raise ValidationError(f"{what} refers to undeclared arc {a!r}")

    succ: dict[int, int] = {}
    pred: dict[int, int] = {}
    for c in d.crossings:
        for a, what in ((c.under_in, "under_in"), (c.over, "over"), (c.under_out, "under_out")):
            check_arc(a, f"crossing {what}")
        if c.sign not in (1, -1):
            raise ValidationError(f"crossing sign must be +1 or -1, got {c.sign!r}")
    for p in d.axis:
        check_arc(p.under_in, "axis under_in")
        check_arc(p.under_out, "axis under_out")
        if p.sign not in (1, -1):
            raise ValidationError(f"axis sign must be +1 or -1, got {p.sign!r}")
    orders = sorted(p.order_index for p in d.axis)
    if orders != list(range(1, len(d.axis) + 1)):
        raise ValidationError("axis order indices must be 1..d, each used once")

    for x in list(d.crossings) + list(d.axis):
        if x.under_in in succ:
            raise ValidationError(f"arc {x.under_in} ends at two undercrossings")
        if x.under_out in pred:
            raise ValidationError(f"arc {x.under_out} starts at two undercrossings")
        succ[x.under_in] = x.under_out
        pred[x.under_out] = x.under_in
    for a in d.arcs:
        if (a in succ) != (a in pred):
            raise ValidationError(f"arc {a} has a loose end")
        succ.setdefault(a, a)
    return succ


def component_cycles(d: Diagram) -> list[list[int]]:
    """Cycles of the successor map, each starting at its smallest arc."""
    seen: set[int] = set()
    cycles = []
    for a in d.arcs:
        if a in seen:
            continue
        cyc = []
        b = a
        while b not in seen:
            seen.add(b)
            cyc.append(b)
            b = d.successor(b)
        cycles.append(cyc)
    return cycles


def component_count(d: Diagram) -> int:
    return len(component_cycles(d))


def winding_number(d: Diagram) -> int:
    """Signed count of axis passes.  Orientation choice is left to the caller."""
    if d.kind == "classical":
        raise WrongKind("classical diagrams have no axis")
    return sum(p.sign for p in d.axis)


def _int_field(obj, key, where):
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{where}.{key} must be an integer, got {v!r}")
    return v


def diagram_from_obj(obj) -> Diagram:
    """Validate a decoded JSON object and build the Diagram."""
    if not isinstance(obj, dict):
        raise ParseError("diagram JSON must be an object")
    extra = set(obj) - _DIAGRAM_KEYS
    if extra:
        raise ParseError(f"unknown diagram fields: {sorted(extra)}")
    for key in ("kind", "arcs"):
        if key not in obj:
            raise ParseError(f"diagram JSON is missing {key!r}")
    kind = obj["kind"]
    if kind not in KINDS:
        raise ParseError(f"unknown diagram kind {kind!r}")
    arcs = _int_field(obj, "arcs", "diagram")

    crossings = []
    for i, c in enumerate(obj.get("crossings", [])):
        if not isinstance(c, dict) or set(c) != _CROSSING_KEYS:
            raise ParseError(f"crossing {i} must have exactly the fields {sorted(_CROSSING_KEYS)}")
        crossings.append(Crossing(*(_int_field(c, k, f"crossings[{i}]")
                                    for k in ("under_in", "over", "under_out", "sign"))))

    if kind == "classical" and "axis" in obj:
        raise ParseError("classical diagrams must omit 'axis'")
    axis = []
    for i, p in enumerate(obj.get("axis", [])):
        if not isinstance(p, dict) or set(p) != _AXIS_KEYS:
            raise ParseError(f"axis pass {i} must have exactly the fields {sorted(_AXIS_KEYS)}")
        axis.append(AxisPass(_int_field(p, "under_in", f"axis[{i}]"),
                             _int_field(p, "under_out", f"axis[{i}]"),
                             _int_field(p, "sign", f"axis[{i}]"),
                             i + 1))

    surgery = None
    if "surgery" in obj:
        s = obj["surgery"]
        if not isinstance(s, dict) or set(s) != {"p", "q"}:
            raise ParseError("surgery must be an object with fields p and q")
        surgery = (_int_field(s, "p", "surgery"), _int_field(s, "q", "surgery"))
    elif kind == "lens":
        raise SurgeryError("lens diagrams need a 'surgery' entry")

    return Diagram(kind, arcs, tuple(crossings), tuple(axis), surgery)


def parse_diagram(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return diagram_from_obj(obj)


def load_diagram(path) -> Diagram:
    with open(path) as fh:
        return parse_diagram(fh.read())
