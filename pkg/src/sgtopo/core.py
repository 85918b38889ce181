"""Finite carrier set algebra, topologies, and the interior/closure operator suite.

Subsets of an ``n``-point carrier are bit fields: point ``x`` is bit ``1 << x``.
:class:`PtSet` wraps a bit field with its carrier size for the public API; the
exhaustive sweeps work on raw ints through the ``FinTopology`` ``*_bits``
methods.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

from . import kernels

DEFAULT_MAX_N = 5
PRODUCT_MAX_N = 81


class TopologyError(ValueError):
    """Base class for malformed topologies and carrier misuse."""


class MissingEmptyOrFull(TopologyError):
    pass


class NotClosedUnderUnion(TopologyError):
    def __init__(self, a: "PtSet", b: "PtSet"):
        super().__init__(f"union of {a} and {b} is not open")
        self.pair = (a, b)


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, a: "PtSet", b: "PtSet"):
        super().__init__(f"intersection of {a} and {b} is not open")
        self.pair = (a, b)


class CarrierMismatch(TopologyError):
    pass


class PointOutOfRange(TopologyError):
    pass


class CarrierTooLarge(TopologyError):
    pass


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def bits_of(points: Iterable[int]) -> int:
    b = 0
    for x in points:
        b |= 1 << x
    return b


def points_of(bits: int) -> list[int]:
    out = []
    x = 0
    while bits:
        if bits & 1:
            out.append(x)
        bits >>= 1
        x += 1
    return out


def submasks(a: int) -> Iterator[int]:
    """All subsets of ``a``, from ``a`` down to 0."""
    s = a
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & a


def supermasks(a: int, full: int) -> Iterator[int]:
    """All supersets of ``a`` inside ``full``, ascending."""
    c = a
    while True:
        yield c
        if c == full:
            return
        c = ((c + 1) | a) & full


@dataclass(frozen=True)
class PtSet:
    """A subset of the carrier ``{0, ..., n-1}``."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise TopologyError("carrier must have at least one point")
        if self.bits < 0 or self.bits >> self.n:
            raise PointOutOfRange(f"bits {self.bits:#x} exceed carrier of {self.n} points")

    @classmethod
    def of(cls, n: int, points: Iterable[int]) -> "PtSet":
        points = list(points)
        for x in points:
            if not 0 <= x < n:
                raise PointOutOfRange(f"point {x} outside carrier of {n} points")
        return cls(n, bits_of(points))

    @classmethod
    def full(cls, n: int) -> "PtSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "PtSet":
        return cls(n, 0)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(points_of(self.bits))

    def __iter__(self):
        return iter(points_of(self.bits))

    def __len__(self):
        return popcount(self.bits)

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.n and bool(self.bits >> x & 1)

    def _check(self, other: "PtSet") -> None:
        if not isinstance(other, PtSet) or other.n != self.n:
            raise CarrierMismatch(f"cannot combine sets over carriers {self.n} and {getattr(other, 'n', None)}")

    def complement(self) -> "PtSet":
        return PtSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def __invert__(self) -> "PtSet":
        return self.complement()

    def __or__(self, other: "PtSet") -> "PtSet":
        self._check(other)
        return PtSet(self.n, self.bits | other.bits)

    def __and__(self, other: "PtSet") -> "PtSet":
        self._check(other)
        return PtSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "PtSet") -> "PtSet":
        self._check(other)
        return PtSet(self.n, self.bits & ~other.bits)

    def issubset(self, other: "PtSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __le__(self, other):
        return self.issubset(other)

    def __ge__(self, other):
        self._check(other)
        return other.bits & ~self.bits == 0

    def __bool__(self):
        return self.bits != 0

    def __str__(self):
        return "{" + ",".join(map(str, points_of(self.bits))) + "}"


SetLike = Union[PtSet, Iterable[int]]


def canonical_key(bits: int) -> tuple[int, int]:
    return popcount(bits), bits


class FinTopology:
    """A topology on ``n`` labeled points, stored as its explicit open family.

    Build through :func:`validate_topology` (checked) or
    :meth:`FinTopology.from_min_nbhds` (trusted, preorder route). Instances
    are immutable; the per-subset operator tables are computed lazily and
    cached.
    """

    def __init__(self, n: int, opens: tuple[int, ...], min_nbhd: tuple[int, ...]):
        self.n = n
        self.opens = opens
        self.min_nbhd = min_nbhd
        self._open_set = frozenset(opens)

    @classmethod
    def from_min_nbhds(cls, n: int, min_nbhd: Iterable[int], max_opens: int | None = None) -> "FinTopology":
        """Topology whose opens are all unions of the given minimal neighborhoods."""
        min_nbhd = tuple(min_nbhd)
        opens = {0}
        for m in sorted(set(min_nbhd)):
            opens |= {u | m for u in opens}
            if max_opens is not None and len(opens) > max_opens:
                raise CarrierTooLarge(f"more than {max_opens} open sets")
        return cls(n, tuple(sorted(opens, key=canonical_key)), min_nbhd)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other):
        return isinstance(other, FinTopology) and self.n == other.n and self.opens == other.opens

    def __hash__(self):
        return hash((self.n, self.opens))

    def __repr__(self):
        fam = ", ".join(str(PtSet(self.n, u)) for u in self.opens)
        return f"FinTopology(n={self.n}, opens=[{fam}])"

    def key(self) -> tuple:
        """Ordering key: carrier size, number of opens, then the canonical open list."""
        return self.n, len(self.opens), self.opens

    def is_open_bits(self, a: int) -> bool:
        return a in self._open_set

    # -- operators on raw bit fields ---------------------------------------

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]] | None:
        if self.n > kernels.TABLE_MAX_N:
            return None
        return kernels.operator_tables(self.n, self.min_nbhd)

    def interior_bits(self, a: int) -> int:
        t = self._tables
        if t is not None:
            return t[0][a]
        r = 0
        for x, m in enumerate(self.min_nbhd):
            if m & ~a == 0:
                r |= 1 << x
        return r

    def closure_bits(self, a: int) -> int:
        t = self._tables
        if t is not None:
            return t[1][a]
        return self.full & ~self.interior_bits(self.full & ~a)

    def semi_interior_bits(self, a: int) -> int:
        return a & self.closure_bits(self.interior_bits(a))

    def semi_closure_bits(self, a: int) -> int:
        return a | self.interior_bits(self.closure_bits(a))

    @property
    def interior_table(self) -> list[int]:
        return self._require_tables()[0]

    @property
    def closure_table(self) -> list[int]:
        return self._require_tables()[1]

    def _require_tables(self):
        t = self._tables
        if t is None:
            raise CarrierTooLarge(f"operator tables unavailable above {kernels.TABLE_MAX_N} points")
        return t

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "opens": [points_of(u) for u in self.opens]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict | str, max_n: int = DEFAULT_MAX_N) -> "FinTopology":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = data["n"]
            opens = data["opens"]
        except (KeyError, TypeError) as exc:
            raise TopologyError(f"topology JSON needs 'n' and 'opens': {exc}") from None
        if not isinstance(n, int) or not isinstance(opens, list):
            raise TopologyError("topology JSON: 'n' must be an int and 'opens' a list")
        return validate_topology([list(u) for u in opens], n, max_n=max_n)


def _as_bits(n: int, s: SetLike) -> int:
    if isinstance(s, PtSet):
        if s.n != n:
            raise CarrierMismatch(f"set over {s.n} points used with carrier of {n}")
        return s.bits
    return PtSet.of(n, s).bits


def validate_topology(opens: Iterable[SetLike], n: int, max_n: int = DEFAULT_MAX_N) -> FinTopology:
    """Check the topology axioms and return the canonical :class:`FinTopology`.

    >>> validate_topology([[], [0], [1], [0, 1], [0, 1, 2, 3]], 4).min_nbhd
    (1, 2, 15, 15)
    """
    if n < 1:
        raise TopologyError("carrier must have at least one point")
    if n > max_n:
        raise CarrierTooLarge(f"carrier of {n} points exceeds cap {max_n}")
    fam = sorted({_as_bits(n, u) for u in opens}, key=canonical_key)
    full = (1 << n) - 1
    present = set(fam)
    if 0 not in present or full not in present:
        raise MissingEmptyOrFull("open family must contain the empty set and the full carrier")
    for i, a in enumerate(fam):
        for b in fam[i + 1:]:
            if a | b not in present:
                raise NotClosedUnderUnion(PtSet(n, a), PtSet(n, b))
            if a & b not in present:
                raise NotClosedUnderIntersection(PtSet(n, a), PtSet(n, b))
    mn = []
    for x in range(n):
        m = full
        for u in fam:
            if u >> x & 1:
                m &= u
        mn.append(m)
    return FinTopology(n, tuple(fam), tuple(mn))


# -- public operator API ----------------------------------------------------


def _arg(T: FinTopology, A: SetLike) -> int:
    return _as_bits(T.n, A)


def interior(T: FinTopology, A: SetLike) -> PtSet:
    return PtSet(T.n, T.interior_bits(_arg(T, A)))


def closure(T: FinTopology, A: SetLike) -> PtSet:
    return PtSet(T.n, T.closure_bits(_arg(T, A)))


def semi_interior(T: FinTopology, A: SetLike) -> PtSet:
    """``A ∩ cl(Int A)``: the union of all semi-open subsets of A."""
    return PtSet(T.n, T.semi_interior_bits(_arg(T, A)))


def semi_closure(T: FinTopology, A: SetLike) -> PtSet:
    """``A ∪ Int(cl A)``: the intersection of all semi-closed supersets of A."""
    return PtSet(T.n, T.semi_closure_bits(_arg(T, A)))


def min_nbhd(T: FinTopology, x: int) -> PtSet:
    if not 0 <= x < T.n:
        raise PointOutOfRange(f"point {x} outside carrier of {T.n} points")
    return PtSet(T.n, T.min_nbhd[x])


@dataclass(frozen=True)
class SetClass:
    open: bool
    closed: bool
    semi_open: bool
    semi_closed: bool
    preopen: bool
    nowhere_dense: bool
    dense: bool
    regular_open: bool
    regular_closed: bool
    alpha_open: bool
    beta_open: bool
    delta_open: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


def regular_open_bits(T: FinTopology) -> list[int]:
    return [u for u in T.opens if T.interior_bits(T.closure_bits(u)) == u]


def classify_bits(T: FinTopology, a: int) -> SetClass:
    I, C = T.interior_bits, T.closure_bits
    full = T.full
    ia, ca = I(a), C(a)
    ica = I(ca)
    cia = C(ia)
    delta = 0
    for r in regular_open_bits(T):
        if r & ~a == 0:
            delta |= r
    return SetClass(
        open=ia == a,
        closed=ca == a,
        semi_open=a & ~cia == 0,
        semi_closed=ica & ~a == 0,
        preopen=a & ~ica == 0,
        nowhere_dense=ica == 0,
        dense=ca == full,
        regular_open=ica == a,
        regular_closed=cia == a,
        alpha_open=a & ~I(cia) == 0,
        beta_open=a & ~C(ica) == 0,
        delta_open=delta == a,
    )


def classify_set(T: FinTopology, A: SetLike) -> SetClass:
    return classify_bits(T, _arg(T, A))
