"""Free-quandle words and quandle presentations read off diagrams.

An element of the extended free quandle is a pair ``[a, w]`` of a primary
generator and a word in the free group on primary and operator
generators, modulo ``[a, w] ~ [a, a w]``.  The group acts on the right of
the word, so ``[a, w] * [b, z] = [a, w z^-1 b z]``.

Text form of a presentation::

    primary: x1 x2 x3 x4
    operators: a1
    rel: x1 * x4 = x2
    rel: x3 ^ a1 = x1
    oprel: [a1, x1^-1 x2]

Inside a relation the letters of the word are read left to right: ``* b``
and ``/ b`` for right translation by a primary generator and its inverse,
``^ a`` and ``^ a^-1`` for the action of an operator generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .diagram import Diagram
from .errors import NotSolidTorusPresentation, WrongKind

Letter = tuple[str, int]


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +-1, got {e}")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word in a free group."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    @classmethod
    def gen(cls, symbol: str, exponent: int = 1) -> GroupWord:
        e = 1 if exponent > 0 else -1
        return cls(((symbol, e),) * abs(exponent))

    @classmethod
    def parse(cls, text: str) -> GroupWord:
        """Read ``"x1^-1 x2 a1"``; ``"1"`` or ``""`` is the identity."""
        letters = []
        for tok in text.split():
            if tok == "1":
                continue
            sym, _, exp = tok.partition("^")
            n = int(exp) if exp else 1
            letters.extend([(sym, 1 if n > 0 else -1)] * abs(n))
        return cls(tuple(letters))

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> GroupWord:
        base = self if n >= 0 else self.inverse()
        return GroupWord(base.letters * abs(n))

    def __len__(self):
        return len(self.letters)

    def is_trivial(self) -> bool:
        return not self.letters

    def symbols(self) -> set[str]:
        return {g for g, _ in self.letters}

    def exponent_sum(self, symbol: str | None = None) -> int:
        return sum(e for g, e in self.letters if symbol is None or g == symbol)

    def delete(self, symbols: set[str]) -> GroupWord:
        return GroupWord(tuple(l for l in self.letters if l[0] not in symbols))

    def rename(self, mapping: dict[str, str]) -> GroupWord:
        return GroupWord(tuple((mapping.get(g, g), e) for g, e in self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)


IDENTITY = GroupWord()


def commutator(u: GroupWord, v: GroupWord) -> GroupWord:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


@dataclass(frozen=True)
class FqElement:
    """The class [base, word], stored with the ip-redundant prefix removed."""

    base: str
    word: GroupWord = IDENTITY

    def __post_init__(self):
        letters = self.word.letters
        i = 0
        while i < len(letters) and letters[i][0] == self.base:
            i += 1
        if i:
            object.__setattr__(self, "word", GroupWord(letters[i:]))

    def epsilon(self) -> GroupWord:
        """Augmentation: [a, w] -> w^-1 a w."""
        return self.word.inverse() * GroupWord.gen(self.base) * self.word

    def rename(self, mapping: dict[str, str]) -> FqElement:
        return FqElement(mapping.get(self.base, self.base), self.word.rename(mapping))

    def format(self, operators: Iterable[str] = ()) -> str:
        ops = set(operators)
        parts = [self.base]
        for g, e in self.word.letters:
            if g in ops:
                parts.append(f"^ {g}" if e == 1 else f"^ {g}^-1")
            else:
                parts.append(f"* {g}" if e == 1 else f"/ {g}")
        return " ".join(parts)

    def __str__(self):
        return self.format()


def fq_mult(x: FqElement, y: FqElement, inverse: bool = False) -> FqElement:
    """x * y, or x *-inverse y when ``inverse`` is set."""
    b = GroupWord.gen(y.base, -1 if inverse else 1)
    return FqElement(x.base, x.word * y.word.inverse() * b * y.word)


def fq_act(x: FqElement, g: GroupWord) -> FqElement:
    return FqElement(x.base, x.word * g)


def element(base: str, *letters: str | Letter) -> FqElement:
    """Shorthand: ``element("x1", "x2", ("a1", -1))`` is [x1, x2 a1^-1]."""
    out = [(l, 1) if isinstance(l, str) else l for l in letters]
    return FqElement(base, GroupWord(tuple(out)))


@dataclass(frozen=True)
class QRelation:
    lhs: FqElement
    rhs: FqElement

    def rename(self, mapping: dict[str, str]) -> QRelation:
        return QRelation(self.lhs.rename(mapping), self.rhs.rename(mapping))

    def format(self, operators: Iterable[str] = ()) -> str:
        ops = tuple(operators)
        return f"{self.lhs.format(ops)} = {self.rhs.format(ops)}"

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class OpRelation:
    """Group relation lhs = rhs."""

    lhs: GroupWord
    rhs: GroupWord = IDENTITY

    def relator(self) -> GroupWord:
        return self.lhs * self.rhs.inverse()

    def rename(self, mapping: dict[str, str]) -> OpRelation:
        return OpRelation(self.lhs.rename(mapping), self.rhs.rename(mapping))

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class Commutator:
    """Group relation [left, right] = 1."""

    left: GroupWord
    right: GroupWord

    def relator(self) -> GroupWord:
        return commutator(self.left, self.right)

    def rename(self, mapping: dict[str, str]) -> Commutator:
        return Commutator(self.left.rename(mapping), self.right.rename(mapping))

    def __str__(self):
        return f"[{self.left}, {self.right}]"


GroupRelation = Union[OpRelation, Commutator]


@dataclass(frozen=True)
class QPresentation:
    primary_gens: tuple[str, ...]
    operator_gens: tuple[str, ...] = ()
    primary_rels: tuple[QRelation, ...] = ()
    operator_rels: tuple[GroupRelation, ...] = ()

    @property
    def is_primary(self) -> bool:
        return not self.operator_gens and not self.operator_rels

    def to_text(self) -> str:
        lines = [" ".join(["primary:", *self.primary_gens]),
                 " ".join(["operators:", *self.operator_gens])]
        lines += [f"rel: {r.format(self.operator_gens)}" for r in self.primary_rels]
        lines += [f"oprel: {r}" for r in self.operator_rels]
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "primary": list(self.primary_gens),
            "operators": list(self.operator_gens),
            "relations": [r.format(self.operator_gens) for r in self.primary_rels],
            "operator_relations": [str(r) for r in self.operator_rels],
        }


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relations: tuple[GroupRelation, ...] = ()

    def relators(self) -> list[GroupWord]:
        return [r.relator() for r in self.relations]

    def to_text(self) -> str:
        lines = ["generators: " + " ".join(self.generators)]
        lines += [f"rel: {r}" for r in self.relations]
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# builders

OPERATOR = "a1"


def _names(d: Diagram, prefix: str) -> dict[int, str]:
    return {a: f"{prefix}{a}" for a in d.arcs}


def _crossing_relations(d: Diagram, name: dict[int, str]) -> list[QRelation]:
    rels = []
    for c in d.crossings:
        src, dst = (c.under_in, c.under_out) if c.sign > 0 else (c.under_out, c.under_in)
        rels.append(QRelation(element(name[src], name[c.over]), element(name[dst])))
    return rels


def meridian_word(d: Diagram, prefix: str = "x") -> GroupWord:
    """The product of eps(x_i)^delta_i over the axis passes, in axis order."""
    name = _names(d, prefix)
    w = IDENTITY
    for p in sorted(d.axis, key=lambda p: p.order_index):
        w = w * (element(name[p.near_arc]).epsilon() ** p.sign)
    return w


def present_knot(d: Diagram, prefix: str = "x") -> QPresentation:
    """Primary presentation: one generator per arc, one relation per crossing."""
    if d.kind != "classical":
        raise WrongKind(f"present_knot needs a classical diagram, got {d.kind}")
    name = _names(d, prefix)
    return QPresentation(tuple(name[a] for a in d.arcs), (), tuple(_crossing_relations(d, name)))


def present_solid_torus(d: Diagram, prefix: str = "x", operator: str = OPERATOR) -> QPresentation:
    if d.kind != "solid_torus":
        raise WrongKind(f"present_solid_torus needs a solid_torus diagram, got {d.kind}")
    return _present_with_axis(d, prefix, operator)


def _present_with_axis(d: Diagram, prefix: str, operator: str) -> QPresentation:
    name = _names(d, prefix)
    rels = _crossing_relations(d, name)
    for p in sorted(d.axis, key=lambda p: p.order_index):
        rels.append(QRelation(element(name[p.far_arc], operator), element(name[p.near_arc])))
    mu = meridian_word(d, prefix)
    oprels: list[GroupRelation] = []
    # [a1, 1] is freely trivial and is not emitted
    if not mu.is_trivial():
        oprels.append(Commutator(GroupWord.gen(operator), mu))
    return QPresentation(tuple(name[a] for a in d.arcs), (operator,), tuple(rels), tuple(oprels))


def present_lens(d: Diagram, prefix: str = "x", operator: str = OPERATOR) -> QPresentation:
    """Solid-torus presentation plus a1^p = mu^q."""
    if d.kind != "lens":
        raise WrongKind(f"present_lens needs a lens diagram, got {d.kind}")
    base = _present_with_axis(d, prefix, operator)
    p, q = d.surgery
    extra = OpRelation(GroupWord.gen(operator) ** p, meridian_word(d, prefix) ** q)
    return QPresentation(base.primary_gens, base.operator_gens, base.primary_rels,
                         base.operator_rels + (extra,))


def present(d: Diagram, prefix: str = "x") -> QPresentation:
    """Dispatch on the diagram kind."""
    return {"classical": present_knot,
            "solid_torus": present_solid_torus,
            "lens": present_lens}[d.kind](d, prefix)


def close_in_sphere(p: QPresentation, merge: bool = True) -> QPresentation:
    """Send the single operator generator to the identity.

    Relations x ^ a1 = y become x = y.  With ``merge`` those equalities are
    consumed by a union-find whose representative is the earliest generator
    of each class, and the remaining relations are rewritten accordingly.
    Without ``merge`` the equalities stay in the relation list.
    """
    if len(p.operator_gens) != 1:
        raise NotSolidTorusPresentation(
            f"expected exactly one operator generator, got {list(p.operator_gens)}")
    drop = set(p.operator_gens)
    rels = [QRelation(FqElement(r.lhs.base, r.lhs.word.delete(drop)),
                      FqElement(r.rhs.base, r.rhs.word.delete(drop)))
            for r in p.primary_rels]
    if not merge:
        return QPresentation(p.primary_gens, (), tuple(rels))

    order = {g: i for i, g in enumerate(p.primary_gens)}
    parent = {g: g for g in p.primary_gens}

    def find(g):
        while parent[g] != g:
            parent[g] = parent[parent[g]]
            g = parent[g]
        return g

    kept = []
    for r in rels:
        if r.lhs.word.is_trivial() and r.rhs.word.is_trivial():
            a, b = find(r.lhs.base), find(r.rhs.base)
            if a != b:
                lo, hi = sorted((a, b), key=order.__getitem__)
                parent[hi] = lo
        else:
            kept.append(r)
    rep = {g: find(g) for g in p.primary_gens}
    out = []
    for r in kept:
        r2 = r.rename(rep)
        if r2.lhs != r2.rhs:
            out.append(r2)
    gens = tuple(g for g in p.primary_gens if rep[g] == g)
    return QPresentation(gens, (), tuple(out))


def wirtinger_group(d: Diagram, prefix: str = "y") -> GroupPresentation:
    """Knot group: y_over^-1 y_in y_over = y_out at a positive crossing,
    y_over y_in y_over^-1 = y_out at a negative one."""
    if d.kind != "classical":
        raise WrongKind(f"wirtinger_group needs a classical diagram, got {d.kind}")
    name = _names(d, prefix)
    rels = []
    for c in d.crossings:
        o = GroupWord.gen(name[c.over], c.sign)
        rels.append(OpRelation(o.inverse() * GroupWord.gen(name[c.under_in]) * o,
                               GroupWord.gen(name[c.under_out])))
    return GroupPresentation(tuple(name[a] for a in d.arcs), tuple(rels))
