"""sg-open, sg-closed and hereditarily sg-closed predicates.

Each predicate has two routes. The *definitional* route quantifies over
semi-open / semi-closed sets exactly as the definitions read. The
*characterization* route uses the pointwise criteria through the X1/X2
decomposition:

* sg-closed:  ``X1 ∩ Int cl A ⊆ A``
* sg-open:    ``A ∩ X1 ⊆ sInt A``
* hsg-closed: ``X1 ∩ Int cl A = ∅``

Both routes must agree on every input; that agreement is what the harness
checks exhaustively.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import kernels
from .core import (
    CarrierMismatch,
    FinTopology,
    PointOutOfRange,
    PtSet,
    SetLike,
    _as_bits,
    classify_bits,
    submasks,
    supermasks,
)


class PredicateMode(enum.Enum):
    DEFINITIONAL = "definitional"
    CHARACTERIZATION = "characterization"


@dataclass(frozen=True)
class SpaceDecomp:
    x1: PtSet  # points whose singleton is nowhere dense
    x2: PtSet  # points whose singleton is locally dense

    def __post_init__(self):
        if self.x1.bits & self.x2.bits or (self.x1 | self.x2).bits != (1 << self.x1.n) - 1:
            raise AssertionError("X1/X2 must partition the carrier")


def decompose_bits(T: FinTopology) -> tuple[int, int]:
    x1 = x2 = 0
    for x in range(T.n):
        p = 1 << x
        ic = T.interior_bits(T.closure_bits(p))
        if ic == 0:
            x1 |= p
        if p & ic:
            x2 |= p
    if x1 & x2 or x1 | x2 != T.full:
        raise AssertionError(f"X1/X2 decomposition failed on {T!r}")
    return x1, x2


def decompose(T: FinTopology) -> SpaceDecomp:
    x1, x2 = decompose_bits(T)
    return SpaceDecomp(PtSet(T.n, x1), PtSet(T.n, x2))


# -- set-class helpers on bit fields ------------------------------------------


def semi_open_bits(T: FinTopology, a: int) -> bool:
    return a & ~T.closure_bits(T.interior_bits(a)) == 0


def semi_closed_bits(T: FinTopology, a: int) -> bool:
    return T.interior_bits(T.closure_bits(a)) & ~a == 0


# -- characterization route ---------------------------------------------------


def sg_closed_char_bits(T: FinTopology, x1: int, a: int) -> bool:
    return x1 & T.interior_bits(T.closure_bits(a)) & ~a == 0


def sg_open_char_bits(T: FinTopology, x1: int, a: int) -> bool:
    return a & x1 & ~T.semi_interior_bits(a) == 0


def hsg_closed_char_bits(T: FinTopology, x1: int, a: int) -> bool:
    return x1 & T.interior_bits(T.closure_bits(a)) == 0


# -- definitional route -------------------------------------------------------


def sg_closed_def_bits(T: FinTopology, a: int) -> bool:
    """sCl(A) lies inside every semi-open superset of A."""
    scl = T.semi_closure_bits(a)
    for u in supermasks(a, T.full):
        if scl & ~u and semi_open_bits(T, u):
            return False
    return True


def sg_open_def_bits(T: FinTopology, a: int) -> bool:
    """Every semi-closed subset of A lies inside sInt(A)."""
    sint = T.semi_interior_bits(a)
    for s in submasks(a):
        if s & ~sint and semi_closed_bits(T, s):
            return False
    return True


def hsg_closed_def_bits(T: FinTopology, a: int) -> bool:
    return all(sg_closed_def_bits(T, b) for b in submasks(a))


# -- public API ---------------------------------------------------------------


def is_sg_closed(T: FinTopology, A: SetLike, mode: PredicateMode = PredicateMode.CHARACTERIZATION) -> bool:
    a = _as_bits(T.n, A)
    if mode is PredicateMode.DEFINITIONAL:
        return sg_closed_def_bits(T, a)
    return sg_closed_char_bits(T, decompose_bits(T)[0], a)


def is_sg_open(T: FinTopology, A: SetLike, mode: PredicateMode = PredicateMode.CHARACTERIZATION) -> bool:
    a = _as_bits(T.n, A)
    if mode is PredicateMode.DEFINITIONAL:
        return sg_open_def_bits(T, a)
    return sg_open_char_bits(T, decompose_bits(T)[0], a)


def is_hsg_closed(T: FinTopology, A: SetLike, mode: PredicateMode = PredicateMode.CHARACTERIZATION) -> bool:
    a = _as_bits(T.n, A)
    if mode is PredicateMode.DEFINITIONAL:
        return hsg_closed_def_bits(T, a)
    return hsg_closed_char_bits(T, decompose_bits(T)[0], a)


def is_semi_TD(T: FinTopology) -> bool:
    """Every singleton is open or nowhere dense."""
    for x in range(T.n):
        p = 1 << x
        if not (T.is_open_bits(p) or T.interior_bits(T.closure_bits(p)) == 0):
            return False
    return True


def is_indiscrete(T: FinTopology) -> bool:
    return T.opens == (0, T.full)


def is_cellular(T: FinTopology, family: Iterable[SetLike]) -> bool:
    """Nonempty, open, pairwise disjoint."""
    seen = 0
    for u in family:
        b = _as_bits(T.n, u)
        if b == 0 or not T.is_open_bits(b) or b & seen:
            return False
        seen |= b
    return True


def cellular_families(T: FinTopology) -> list[tuple[int, ...]]:
    """Every cellular family, as sorted tuples of bit fields (including the empty family)."""
    nonempty = [u for u in T.opens if u]
    out = []

    def grow(start, used, fam):
        out.append(tuple(fam))
        for i in range(start, len(nonempty)):
            u = nonempty[i]
            if u & used == 0:
                fam.append(u)
                grow(i + 1, used | u, fam)
                fam.pop()

    grow(0, 0, [])
    return out


def maximal_cellular_families(T: FinTopology) -> list[tuple[PtSet, ...]]:
    """Cellular families that no other cellular family refines.

    ``G`` refines ``F`` when some injection sends each member of ``F`` to a
    member of ``G`` inside it. Minimal nonempty opens are pairwise disjoint and
    every nonempty open contains one, so the unique maximal family is the set
    of minimal neighborhoods that contain no smaller minimal neighborhood.
    """
    mins = set(T.min_nbhd)
    atoms = sorted((m for m in mins if not any(o != m and o & ~m == 0 for o in mins)), key=lambda u: (bin(u).count("1"), u))
    return [tuple(PtSet(T.n, u) for u in atoms)]


@dataclass(frozen=True)
class PointMap:
    """A total function from one finite carrier to another."""

    domain_n: int
    codomain_n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.domain_n:
            raise CarrierMismatch(f"map needs {self.domain_n} images, got {len(self.images)}")
        for y in self.images:
            if not 0 <= y < self.codomain_n:
                raise PointOutOfRange(f"image {y} outside codomain of {self.codomain_n} points")

    @classmethod
    def identity(cls, n: int) -> "PointMap":
        return cls(n, n, tuple(range(n)))

    @classmethod
    def constant(cls, domain_n: int, codomain_n: int, y: int) -> "PointMap":
        return cls(domain_n, codomain_n, (y,) * domain_n)

    def preimage_bits(self, b: int) -> int:
        r = 0
        for x, y in enumerate(self.images):
            if b >> y & 1:
                r |= 1 << x
        return r

    def image_bits(self, a: int) -> int:
        r = 0
        for x, y in enumerate(self.images):
            if a >> x & 1:
                r |= 1 << y
        return r


def is_pre_sg_continuous(
    f: PointMap,
    S: FinTopology,
    T: FinTopology,
    mode: PredicateMode = PredicateMode.CHARACTERIZATION,
) -> bool:
    """Preimage of every semi-closed subset of ``T`` is sg-closed in ``S``."""
    if f.domain_n != S.n or f.codomain_n != T.n:
        raise CarrierMismatch("map does not go from S's carrier to T's carrier")
    x1 = decompose_bits(S)[0]
    for b in range(1 << T.n):
        if not semi_closed_bits(T, b):
            continue
        pre = f.preimage_bits(b)
        ok = sg_closed_def_bits(S, pre) if mode is PredicateMode.DEFINITIONAL else sg_closed_char_bits(S, x1, pre)
        if not ok:
            return False
    return True


# -- whole-space tables for exhaustive sweeps --------------------------------


class SpaceProfile:
    """Per-subset verdict tables for one topology.

    Definitional tables come from the kernel backend; characterization
    verdicts are evaluated through the module-level ``*_char_bits``
    functions at call time.
    """

    def __init__(self, T: FinTopology):
        self.T = T
        self.n = T.n
        self.size = 1 << T.n
        self.full = T.full
        self.x1, self.x2 = decompose_bits(T)
        self.interior = T.interior_table
        self.closure = T.closure_table

    @cached_property
    def definitional(self) -> tuple[Sequence[bool], Sequence[bool], Sequence[bool]]:
        return kernels.definitional_tables(self.n, self.interior, self.closure)

    @property
    def sg_open_def(self) -> Sequence[bool]:
        return self.definitional[0]

    @property
    def sg_closed_def(self) -> Sequence[bool]:
        return self.definitional[1]

    @property
    def hsg_def(self) -> Sequence[bool]:
        return self.definitional[2]

    @cached_property
    def semi_open(self) -> list[bool]:
        it, ct = self.interior, self.closure
        return [s & ~ct[it[s]] == 0 for s in range(self.size)]

    @cached_property
    def semi_closed(self) -> list[bool]:
        it, ct = self.interior, self.closure
        return [it[ct[s]] & ~s == 0 for s in range(self.size)]

    def sg_closed(self, a: int) -> bool:
        return sg_closed_char_bits(self.T, self.x1, a)

    def sg_open(self, a: int) -> bool:
        return sg_open_char_bits(self.T, self.x1, a)

    def hsg_closed(self, a: int) -> bool:
        return hsg_closed_char_bits(self.T, self.x1, a)


@lru_cache(maxsize=8192)
def profile(T: FinTopology) -> SpaceProfile:
    return SpaceProfile(T)


def predicate_vector(T: FinTopology, a: int) -> tuple:
    """All per-set predicate outputs for ``a``; used by relabeling checks."""
    x1 = decompose_bits(T)[0]
    return (
        tuple(classify_bits(T, a).as_dict().values()),
        sg_closed_char_bits(T, x1, a),
        sg_open_char_bits(T, x1, a),
        hsg_closed_char_bits(T, x1, a),
        sg_closed_def_bits(T, a),
        sg_open_def_bits(T, a),
        hsg_closed_def_bits(T, a),
    )


def space_vector(T: FinTopology) -> tuple:
    return is_semi_TD(T), is_indiscrete(T), len(maximal_cellular_families(T)[0])
