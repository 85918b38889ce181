"""Finite/cofinite set algebra and four countable example spaces.

A :class:`SymSet` is a subset of ``ℕ ∪ E`` where ``E`` is a finite set of
named extra points: its natural part is either finite (``fin{...}`` lists
members) or cofinite (``cof{...}`` lists exceptions).

Interior and closure of every space are given as rule tables keyed on the
*shape* of the natural part (empty, finite nonempty, infinite-coinfinite,
cofinite proper, all of ℕ) and on which extras are present. Every space here
is invariant under permutations of ℕ and each rule maps the natural part to
∅, itself, or ℕ, so one representative per shape decides a question for the
whole shape. That is what lets C2 / C3 be decided by finite case analysis.

The infinite-coinfinite shape has no :class:`SymSet` representative but still
takes part in the case analysis: in the one-point compactification of a
discrete ℕ the even numbers form an infinite hsg-closed set, and no finite or
cofinite set shows it.

Semi-compactness cannot be checked through covers here. For these spaces it
is taken as "C2 and every cellular family is finite".
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Callable, NamedTuple, Optional, Union


class NotRepresentable(ValueError):
    pass


class Shape(enum.Enum):
    EMPTY = "empty"
    FINITE = "finite"  # finite, nonempty
    MIXED = "mixed"  # infinite and coinfinite
    COFINITE = "cofinite"  # cofinite, proper
    FULL = "full"

    @property
    def infinite(self) -> bool:
        return self in (Shape.MIXED, Shape.COFINITE, Shape.FULL)

    def complement(self) -> "Shape":
        return _SHAPE_COMPLEMENT[self]


_SHAPE_COMPLEMENT = {
    Shape.EMPTY: Shape.FULL,
    Shape.FULL: Shape.EMPTY,
    Shape.FINITE: Shape.COFINITE,
    Shape.COFINITE: Shape.FINITE,
    Shape.MIXED: Shape.MIXED,
}


@dataclass(frozen=True)
class SymSet:
    cofinite: bool
    support: frozenset[int] = frozenset()
    extras: frozenset[str] = frozenset()
    universe: frozenset[str] = frozenset()  # named extra points of the ambient space

    def __post_init__(self):
        if not self.extras <= self.universe:
            raise NotRepresentable(f"extras {set(self.extras)} not in {set(self.universe)}")
        if any(not isinstance(k, int) or k < 0 for k in self.support):
            raise NotRepresentable("support must hold natural numbers")

    @classmethod
    def fin(cls, members=(), extras=(), universe=()) -> "SymSet":
        return cls(False, frozenset(members), frozenset(extras), frozenset(universe) | frozenset(extras))

    @classmethod
    def cof(cls, exceptions=(), extras=(), universe=()) -> "SymSet":
        return cls(True, frozenset(exceptions), frozenset(extras), frozenset(universe) | frozenset(extras))

    @property
    def shape(self) -> Shape:
        if self.cofinite:
            return Shape.FULL if not self.support else Shape.COFINITE
        return Shape.FINITE if self.support else Shape.EMPTY

    @property
    def infinite(self) -> bool:
        return self.cofinite

    def __contains__(self, x) -> bool:
        if isinstance(x, str):
            return x in self.extras
        return (x in self.support) != self.cofinite

    def _check(self, other: "SymSet") -> None:
        if not isinstance(other, SymSet) or other.universe != self.universe:
            raise NotRepresentable("sets live in different spaces")

    def complement(self) -> "SymSet":
        return SymSet(not self.cofinite, self.support, self.universe - self.extras, self.universe)

    __invert__ = complement

    def __or__(self, other: "SymSet") -> "SymSet":
        self._check(other)
        a, b = self.support, other.support
        ex = self.extras | other.extras
        if self.cofinite and other.cofinite:
            return SymSet(True, a & b, ex, self.universe)
        if self.cofinite:
            return SymSet(True, a - b, ex, self.universe)
        if other.cofinite:
            return SymSet(True, b - a, ex, self.universe)
        return SymSet(False, a | b, ex, self.universe)

    def __and__(self, other: "SymSet") -> "SymSet":
        return (self.complement() | other.complement()).complement()

    def __sub__(self, other: "SymSet") -> "SymSet":
        return self & other.complement()

    def issubset(self, other: "SymSet") -> bool:
        return (self - other).is_empty()

    __le__ = issubset

    def is_empty(self) -> bool:
        return not self.cofinite and not self.support and not self.extras

    def nat_part(self) -> "SymSet":
        return SymSet(self.cofinite, self.support, frozenset(), self.universe)

    def with_nat(self, rule: "NatRule") -> "SymSet":
        """Natural part replaced per ``rule``; extras untouched."""
        if rule is NatRule.EMPTY:
            return SymSet(False, frozenset(), self.extras, self.universe)
        if rule is NatRule.FULL:
            return SymSet(True, frozenset(), self.extras, self.universe)
        return self

    def __str__(self):
        body = ",".join(map(str, sorted(self.support)))
        tag = "cof" if self.cofinite else "fin"
        suffix = "".join(("+" if e in self.extras else "-") + e for e in sorted(self.universe))
        return f"{tag}{{{body}}}{suffix}"


_SYMSET_RE = re.compile(r"^(fin|cof)\{([0-9,\s]*)\}((?:[+-][A-Za-z]\w*)*)$")


def parse_symset(text: str, space: "SymSpace") -> SymSet:
    """Parse ``fin{1,2}+p`` / ``cof{0,3}-inf``; unmentioned extras are absent."""
    m = _SYMSET_RE.match(text.strip().replace("∞", "inf"))
    if not m:
        raise NotRepresentable(f"cannot parse set {text!r}")
    tag, body, suffix = m.groups()
    support = frozenset(int(t) for t in body.replace(" ", "").split(",") if t)
    extras = set()
    for sign, name in re.findall(r"([+-])(\w+)", suffix):
        if name not in space.extras:
            raise NotRepresentable(f"{space.name} has no extra point {name!r}")
        if sign == "+":
            extras.add(name)
        else:
            extras.discard(name)
    return SymSet(tag == "cof", support, frozenset(extras), space.extras)


# -- rule tables ---------------------------------------------------------------


class NatRule(enum.Enum):
    EMPTY = "∅"
    SAME = "A∩ℕ"
    FULL = "ℕ"


class Rule(NamedTuple):
    """If the natural part has one of ``shapes`` and the present extras equal
    ``extras`` (``None``: any), the natural part of the result follows ``nat``
    and its extras are ``out`` (``None``: unchanged)."""

    rid: str
    shapes: frozenset
    extras: Optional[frozenset]
    nat: NatRule
    out: Optional[frozenset]


def _r(rid, shapes, extras, nat, out):
    to_set = lambda v: None if v is None else frozenset(v)
    return Rule(rid, frozenset(shapes), to_set(extras), nat, to_set(out))


ALL = tuple(Shape)
INF = (Shape.MIXED, Shape.COFINITE, Shape.FULL)
NONEMPTY = (Shape.FINITE, Shape.MIXED, Shape.COFINITE, Shape.FULL)
E, F, S = NatRule.EMPTY, NatRule.FULL, NatRule.SAME


class Family(enum.Enum):
    COFINITE_NAT = "cofinite-nat"
    INDISCRETE_NAT = "indiscrete-nat"
    INDISCRETE_PLUS_POINT = "e1-infinite"
    ONE_POINT_COMPACT_DISCRETE_NAT = "opc-discrete"


# Interior and closure tables are written independently; duality between them is a test.
_TABLES: dict[Family, dict] = {
    Family.COFINITE_NAT: {
        "extras": (),
        # opens: ∅ and the cofinite sets
        "interior": [
            _r("cof.int.open", (Shape.COFINITE, Shape.FULL), None, S, None),
            _r("cof.int.rest", (Shape.EMPTY, Shape.FINITE, Shape.MIXED), None, E, None),
        ],
        # closed: finite sets and ℕ
        "closure": [
            _r("cof.cl.closed", (Shape.EMPTY, Shape.FINITE), None, S, None),
            _r("cof.cl.rest", INF, None, F, None),
        ],
    },
    Family.INDISCRETE_NAT: {
        "extras": (),
        "interior": [
            _r("ind.int.full", (Shape.FULL,), None, F, None),
            _r("ind.int.rest", (Shape.EMPTY, Shape.FINITE, Shape.MIXED, Shape.COFINITE), None, E, None),
        ],
        "closure": [
            _r("ind.cl.empty", (Shape.EMPTY,), None, E, None),
            _r("ind.cl.rest", NONEMPTY, None, F, None),
        ],
    },
    Family.INDISCRETE_PLUS_POINT: {
        # X = ℕ ∪ {p}; opens ∅, ℕ, X
        "extras": ("p",),
        "interior": [
            _r("e1.int.X", (Shape.FULL,), {"p"}, F, {"p"}),
            _r("e1.int.A", (Shape.FULL,), (), F, ()),
            _r("e1.int.rest", (Shape.EMPTY, Shape.FINITE, Shape.MIXED, Shape.COFINITE), None, E, ()),
        ],
        # closed: ∅, {p}, X
        "closure": [
            _r("e1.cl.empty", (Shape.EMPTY,), (), E, ()),
            _r("e1.cl.p", (Shape.EMPTY,), {"p"}, E, {"p"}),
            _r("e1.cl.X", NONEMPTY, None, F, {"p"}),
        ],
    },
    Family.ONE_POINT_COMPACT_DISCRETE_NAT: {
        # X = ℕ ∪ {inf}; every subset of ℕ is open, and a set holding inf
        # is open iff its natural part is cofinite
        "extras": ("inf",),
        "interior": [
            _r("opc.int.nbhd", (Shape.COFINITE, Shape.FULL), {"inf"}, S, {"inf"}),
            _r("opc.int.drop", (Shape.EMPTY, Shape.FINITE, Shape.MIXED), {"inf"}, S, ()),
            _r("opc.int.nat", ALL, (), S, ()),
        ],
        # closed: sets holding inf, and finite subsets of ℕ
        "closure": [
            _r("opc.cl.hasinf", ALL, {"inf"}, S, {"inf"}),
            _r("opc.cl.finite", (Shape.EMPTY, Shape.FINITE), (), S, ()),
            _r("opc.cl.addinf", INF, (), S, {"inf"}),
        ],
    },
}


def _match(rules: list[Rule], shape: Shape, extras: frozenset) -> Rule:
    for rule in rules:
        if shape in rule.shapes and (rule.extras is None or rule.extras == extras):
            return rule
    raise NotRepresentable(f"no rule for shape {shape.value} with extras {set(extras)}")


class AbstractSet(NamedTuple):
    """A whole shape class: every set whose natural part has ``shape`` and whose extras are ``extras``."""

    shape: Shape
    extras: frozenset

    def apply(self, rule: Rule) -> "AbstractSet":
        shape = {NatRule.EMPTY: Shape.EMPTY, NatRule.FULL: Shape.FULL, NatRule.SAME: self.shape}[rule.nat]
        return AbstractSet(shape, self.extras if rule.out is None else rule.out)

    def is_empty(self) -> bool:
        return self.shape is Shape.EMPTY and not self.extras


@dataclass(frozen=True)
class SymSpace:
    family: Family

    @property
    def name(self) -> str:
        return self.family.value

    @property
    def extras(self) -> frozenset[str]:
        return frozenset(_TABLES[self.family]["extras"])

    @property
    def interior_rules(self) -> list[Rule]:
        return _TABLES[self.family]["interior"]

    @property
    def closure_rules(self) -> list[Rule]:
        return _TABLES[self.family]["closure"]

    def fin(self, members=(), extras=()) -> SymSet:
        return SymSet(False, frozenset(members), frozenset(extras), self.extras)

    def cof(self, exceptions=(), extras=()) -> SymSet:
        return SymSet(True, frozenset(exceptions), frozenset(extras), self.extras)

    @property
    def empty(self) -> SymSet:
        return self.fin()

    @property
    def full(self) -> SymSet:
        return self.cof(extras=self.extras)

    def extras_subsets(self) -> list[frozenset[str]]:
        ex = sorted(self.extras)
        return [frozenset(c) for c in chain.from_iterable(combinations(ex, r) for r in range(len(ex) + 1))]

    def shape_classes(self) -> list[AbstractSet]:
        return [AbstractSet(s, e) for s in Shape for e in self.extras_subsets()]

    def finite_opens(self) -> Optional[list[SymSet]]:
        """The open family when it is finite."""
        if self.family is Family.INDISCRETE_PLUS_POINT:
            return [self.empty, self.cof(), self.full]
        if self.family is Family.INDISCRETE_NAT:
            return [self.empty, self.full]
        return None


SPACE_NAMES = {f.value: f for f in Family}


def sym_space(name: Union[str, Family]) -> SymSpace:
    if isinstance(name, Family):
        return SymSpace(name)
    if name not in SPACE_NAMES:
        raise NotRepresentable(f"unknown symbolic space {name!r}; expected one of {sorted(SPACE_NAMES)}")
    return SymSpace(SPACE_NAMES[name])


COFINITE_NAT = SymSpace(Family.COFINITE_NAT)
INDISCRETE_NAT = SymSpace(Family.INDISCRETE_NAT)
INDISCRETE_PLUS_POINT = SymSpace(Family.INDISCRETE_PLUS_POINT)
ONE_POINT_COMPACT_DISCRETE_NAT = SymSpace(Family.ONE_POINT_COMPACT_DISCRETE_NAT)
ALL_SPACES = (COFINITE_NAT, INDISCRETE_NAT, INDISCRETE_PLUS_POINT, ONE_POINT_COMPACT_DISCRETE_NAT)


# -- operators ---------------------------------------------------------------


def _in_space(SP: SymSpace, A: SymSet) -> None:
    if not isinstance(A, SymSet) or A.universe != SP.extras:
        raise NotRepresentable(f"{A} is not a subset of {SP.name}")


def _apply(A: SymSet, rule: Rule) -> SymSet:
    B = A.with_nat(rule.nat)
    if rule.out is not None:
        B = SymSet(B.cofinite, B.support, rule.out, B.universe)
    return B


def sym_interior(SP: SymSpace, A: SymSet) -> SymSet:
    _in_space(SP, A)
    return _apply(A, _match(SP.interior_rules, A.shape, A.extras))


def sym_closure(SP: SymSpace, A: SymSet) -> SymSet:
    _in_space(SP, A)
    return _apply(A, _match(SP.closure_rules, A.shape, A.extras))


def abstract_interior(SP: SymSpace, A: AbstractSet) -> AbstractSet:
    return A.apply(_match(SP.interior_rules, A.shape, A.extras))


def abstract_closure(SP: SymSpace, A: AbstractSet) -> AbstractSet:
    return A.apply(_match(SP.closure_rules, A.shape, A.extras))


def sym_semi_interior(SP: SymSpace, A: SymSet) -> SymSet:
    return A & sym_closure(SP, sym_interior(SP, A))


def sym_semi_closure(SP: SymSpace, A: SymSet) -> SymSet:
    return A | sym_interior(SP, sym_closure(SP, A))


def sym_is_open(SP: SymSpace, A: SymSet) -> bool:
    return sym_interior(SP, A) == A


def sym_is_regular_open(SP: SymSpace, A: SymSet) -> bool:
    return sym_interior(SP, sym_closure(SP, A)) == A


def sym_is_nowhere_dense(SP: SymSpace, A: SymSet) -> bool:
    return sym_interior(SP, sym_closure(SP, A)).is_empty()


@dataclass(frozen=True)
class SymDecomp:
    x1: SymSet
    x2: SymSet


def sym_decompose(SP: SymSpace) -> SymDecomp:
    """X1 / X2 from singletons: ``fin{0}`` stands for every natural, plus each extra."""
    x1_nat = x2_nat = False
    rep = SP.fin({0})
    ic = sym_interior(SP, sym_closure(SP, rep))
    if ic.is_empty():
        x1_nat = True
    if 0 in ic:
        x2_nat = True
    x1_ex, x2_ex = set(), set()
    for e in sorted(SP.extras):
        ic = sym_interior(SP, sym_closure(SP, SP.fin(extras={e})))
        if ic.is_empty():
            x1_ex.add(e)
        if e in ic:
            x2_ex.add(e)
    x1 = SP.cof(extras=x1_ex) if x1_nat else SP.fin(extras=x1_ex)
    x2 = SP.cof(extras=x2_ex) if x2_nat else SP.fin(extras=x2_ex)
    if not (x1 & x2).is_empty() or (x1 | x2) != SP.full:
        raise AssertionError(f"X1/X2 decomposition failed on {SP.name}")
    return SymDecomp(x1, x2)


def sym_is_hsg_closed(SP: SymSpace, A: SymSet) -> bool:
    x1 = sym_decompose(SP).x1
    return (x1 & sym_interior(SP, sym_closure(SP, A))).is_empty()


def sym_is_sg_closed(SP: SymSpace, A: SymSet) -> bool:
    x1 = sym_decompose(SP).x1
    return (x1 & sym_interior(SP, sym_closure(SP, A))).issubset(A)


def sym_is_sg_open(SP: SymSpace, A: SymSet) -> bool:
    x1 = sym_decompose(SP).x1
    return (A & x1).issubset(sym_semi_interior(SP, A))


# -- space-level verdicts ---------------------------------------------------------


WitnessT = Union[SymSet, str, None]

MIXED_WITNESS = "even numbers {2k : k ∈ ℕ} (infinite, coinfinite)"


@dataclass(frozen=True)
class SymVerdict:
    value: bool
    witness: WitnessT = None
    witness_class: Optional[AbstractSet] = None
    justification: tuple[str, ...] = ()


def _abstract_x1(SP: SymSpace) -> AbstractSet:
    x1 = sym_decompose(SP).x1
    return AbstractSet(x1.shape, x1.extras)


def _meets(a: AbstractSet, b: AbstractSet) -> bool:
    """Do every two sets from these classes intersect? Only used with ``a`` having an empty or full natural part."""
    if a.extras & b.extras:
        return True
    return a.shape is Shape.FULL and b.shape is not Shape.EMPTY


def representative(A: AbstractSet, SP: SymSpace) -> WitnessT:
    if A.shape is Shape.MIXED:
        return MIXED_WITNESS + ("" if not A.extras else " plus " + ",".join(sorted(A.extras)))
    return {
        Shape.EMPTY: SP.fin(extras=A.extras),
        Shape.FINITE: SP.fin({0}, extras=A.extras),
        Shape.COFINITE: SP.cof({0}, extras=A.extras),
        Shape.FULL: SP.cof(extras=A.extras),
    }[A.shape]


def _decide(SP: SymSpace, bad: Callable[[AbstractSet], bool], label: str) -> SymVerdict:
    """True iff no infinite shape class is ``bad``; otherwise the first such class is the witness."""
    fired = []
    # representable classes first so witnesses are SymSets where possible
    order = (Shape.FULL, Shape.COFINITE, Shape.MIXED)
    for A in sorted((A for A in SP.shape_classes() if A.shape.infinite), key=lambda A: order.index(A.shape)):
        ri = _match(SP.closure_rules, A.shape, A.extras)
        C = A.apply(ri)
        rc = _match(SP.interior_rules, C.shape, C.extras)
        fired.append(f"{ri.rid}>{rc.rid}")
        if bad(C.apply(rc)):
            return SymVerdict(False, representative(A, SP), A, (label, *fired))
    return SymVerdict(True, None, None, (label, *fired))


def sym_is_C2(SP: SymSpace) -> SymVerdict:
    """Every nowhere dense set is finite."""
    return _decide(SP, lambda ic: ic.is_empty(), "C2: Int cl A = ∅ for some infinite A?")


def sym_is_C3(SP: SymSpace) -> SymVerdict:
    """Every hsg-closed set is finite."""
    x1 = _abstract_x1(SP)
    return _decide(SP, lambda ic: not _meets(x1, ic), "C3: X1 ∩ Int cl A = ∅ for some infinite A?")


def sym_is_sg_compact(SP: SymSpace) -> bool:
    """sg-compact exactly when C3."""
    return sym_is_C3(SP).value


@dataclass(frozen=True)
class CellularWitness:
    description: str
    member: Callable[[int], SymSet] = field(compare=False)
    union: SymSet = None
    union_in_x2: bool = False


def sym_cellular_witness(SP: SymSpace) -> Optional[CellularWitness]:
    """An infinite cellular family, when the space has one.

    Only the discrete-plus-infinity space does: its naturals are isolated. In
    the cofinite space any two nonempty opens meet, and the other two spaces
    have finitely many opens.
    """
    if SP.family is not Family.ONE_POINT_COMPACT_DISCRETE_NAT:
        return None
    union = SP.cof()
    return CellularWitness(
        "{{n} : n ∈ ℕ}",
        lambda k: SP.fin({k}),
        union,
        union.issubset(sym_decompose(SP).x2),
    )


def sym_is_semi_compact(SP: SymSpace) -> bool:
    return sym_is_C2(SP).value and sym_cellular_witness(SP) is None


def sym_subspace(SP: SymSpace, S: SymSet) -> SymSpace:
    """Infinite subspaces that are again one of the four spaces."""
    _in_space(SP, S)
    if SP.family is Family.INDISCRETE_PLUS_POINT and S == SP.cof():
        return INDISCRETE_NAT
    if SP.family is Family.COFINITE_NAT and S.cofinite:
        return COFINITE_NAT
    if SP.family is Family.INDISCRETE_NAT and S.cofinite:
        return INDISCRETE_NAT
    raise NotRepresentable(f"subspace {S} of {SP.name} is not in the catalog")


# -- sampling falsifier -----------------------------------------------------------


def random_symset(SP: SymSpace, rng: random.Random, max_support: int) -> SymSet:
    k = rng.randint(0, max_support)
    support = frozenset(rng.sample(range(3 * max_support + 3), k))
    extras = frozenset(e for e in sorted(SP.extras) if rng.random() < 0.5)
    return SymSet(rng.random() < 0.5, support, extras, SP.extras)


@dataclass
class FalsifierReport:
    space: str
    samples: int
    infinite_samples: int = 0
    contradictions: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.contradictions


def falsify(SP: SymSpace, samples: int = 10_000, seed: int = 0) -> FalsifierReport:
    """Try to contradict the C2 / C3 verdicts with random representable sets.

    Support sizes grow with the sample index. A true verdict is contradicted
    by an infinite sampled set that is nowhere dense (C2) or hsg-closed (C3).
    A false verdict with a representable witness is re-checked directly.
    """
    rng = random.Random(seed)
    c2, c3 = sym_is_C2(SP), sym_is_C3(SP)
    rep = FalsifierReport(SP.name, samples)
    for v, test, label in ((c2, sym_is_nowhere_dense, "C2"), (c3, sym_is_hsg_closed, "C3")):
        if not v.value and isinstance(v.witness, SymSet):
            if not (v.witness.infinite and test(SP, v.witness)):
                rep.contradictions.append((label, str(v.witness), "witness does not replay"))
    for i in range(samples):
        A = random_symset(SP, rng, 1 + i * 40 // samples)
        if not A.infinite:
            continue
        rep.infinite_samples += 1
        if c2.value and sym_is_nowhere_dense(SP, A):
            rep.contradictions.append(("C2", str(A), "infinite nowhere dense set"))
        if c3.value and sym_is_hsg_closed(SP, A):
            rep.contradictions.append(("C3", str(A), "infinite hsg-closed set"))
    return rep


# -- truncation to finite models -------------------------------------------------


def truncate(SP: SymSpace, A: SymSet, k: int) -> int:
    """Bit field of ``A`` in the ``k``-natural finite model of ``SP``.

    Naturals ``0..k-2`` are themselves and ``k-1`` stands for the tail
    ``{k-1, k, ...}``; the extra point is bit ``k``. Requires
    ``support ⊆ [0, k-1)``.
    """
    if any(x >= k - 1 for x in A.support):
        raise NotRepresentable(f"support of {A} does not fit a {k}-point truncation")
    nat = 0
    for x in range(k):
        if x in A:
            nat |= 1 << x
    if A.extras:
        nat |= 1 << k
    return nat


def untruncate(SP: SymSpace, bits: int, k: int) -> SymSet:
    tail = bits >> (k - 1) & 1
    pts = {x for x in range(k - 1) if bits >> x & 1}
    extras = frozenset(SP.extras) if SP.extras and bits >> k & 1 else frozenset()
    if tail:
        return SymSet(True, frozenset(set(range(k - 1)) - pts), extras, SP.extras)
    return SymSet(False, frozenset(pts), extras, SP.extras)
