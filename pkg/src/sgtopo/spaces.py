"""Constructions, the named-space catalog, and topology enumeration."""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from . import kernels
from .core import (
    DEFAULT_MAX_N,
    PRODUCT_MAX_N,
    CarrierTooLarge,
    FinTopology,
    PtSet,
    SetLike,
    TopologyError,
    _as_bits,
    canonical_key,
    points_of,
    validate_topology,
)

# catalog spaces may exceed the default cap; whole-table kernels stop here
CATALOG_MAX_N = kernels.TABLE_MAX_N
PRODUCT_MAX_OPENS = 1 << 16


class EmptySubspace(TopologyError):
    pass


class ProductTooLarge(TopologyError):
    pass


class UnknownName(TopologyError):
    pass


class BadParameter(TopologyError):
    pass


class EnumerationMode(enum.Enum):
    LABELED = "labeled"
    UP_TO_HOMEOMORPHISM = "up_to_homeomorphism"


# -- relabeling --------------------------------------------------------------


def permute_bits(perm: Sequence[int], a: int) -> int:
    """Image of ``a`` under the point map ``x -> perm[x]``."""
    r = 0
    for x, y in enumerate(perm):
        if a >> x & 1:
            r |= 1 << y
    return r


def relabel(T: FinTopology, perm: Sequence[int]) -> FinTopology:
    if sorted(perm) != list(range(T.n)):
        raise BadParameter(f"{perm!r} is not a permutation of {T.n} points")
    mn = [0] * T.n
    for x, y in enumerate(perm):
        mn[y] = permute_bits(perm, T.min_nbhd[x])
    return FinTopology.from_min_nbhds(T.n, mn)


def canonical_form(T: FinTopology) -> FinTopology:
    """Least relabeled copy of ``T`` under :meth:`FinTopology.key`."""
    best = None
    for perm in permutations(range(T.n)):
        opens = tuple(sorted((permute_bits(perm, u) for u in T.opens), key=canonical_key))
        if best is None or opens < best[0]:
            best = (opens, perm)
    return relabel(T, best[1])


def homeomorphic(T1: FinTopology, T2: FinTopology) -> bool:
    return T1.n == T2.n and len(T1.opens) == len(T2.opens) and canonical_form(T1) == canonical_form(T2)


# -- subspaces and products ----------------------------------------------------


def restrict_bits(points: Sequence[int], a: int) -> int:
    """Re-index ``a ∩ points`` onto ``0..len(points)-1``."""
    r = 0
    for i, x in enumerate(points):
        if a >> x & 1:
            r |= 1 << i
    return r


def embed_bits(points: Sequence[int], b: int) -> int:
    """Inverse of :func:`restrict_bits`: subspace bits back to original labels."""
    r = 0
    for i, x in enumerate(points):
        if b >> i & 1:
            r |= 1 << x
    return r


def subspace(T: FinTopology, S: SetLike) -> FinTopology:
    """Relative topology on ``S``; point ``i`` of the result is the ``i``-th smallest member of ``S``."""
    s = _as_bits(T.n, S)
    if s == 0:
        raise EmptySubspace("subspace carrier must be nonempty")
    pts = points_of(s)
    opens = {restrict_bits(pts, u & s) for u in T.opens}
    return validate_topology([points_of(u) for u in opens], len(pts), max_n=T.n)


def subspace_points(S: PtSet) -> tuple[int, ...]:
    return tuple(S)


def rectangle_bits(u: int, v: int, n2: int) -> int:
    r = 0
    for i in points_of(u):
        for j in points_of(v):
            r |= 1 << (i * n2 + j)
    return r


def product(T1: FinTopology, T2: FinTopology) -> FinTopology:
    """Product topology; the pair ``(i, j)`` becomes point ``i * T2.n + j``.

    Minimal neighborhoods of the product are products of minimal
    neighborhoods, so the opens are generated as their unions.
    """
    n1, n2 = T1.n, T2.n
    n = n1 * n2
    if n > PRODUCT_MAX_N:
        raise ProductTooLarge(f"product has {n} points, limit is {PRODUCT_MAX_N}")
    mn = [rectangle_bits(T1.min_nbhd[i], T2.min_nbhd[j], n2) for i in range(n1) for j in range(n2)]
    try:
        return FinTopology.from_min_nbhds(n, mn, max_opens=PRODUCT_MAX_OPENS)
    except CarrierTooLarge as exc:
        raise ProductTooLarge(str(exc)) from None


# -- derived topologies --------------------------------------------------------


def nowhere_dense_bits(T: FinTopology) -> list[int]:
    return [a for a in range(1 << T.n) if T.interior_bits(T.closure_bits(a)) == 0]


def alpha_topology(T: FinTopology) -> FinTopology:
    """Opens ``U \\ N`` with ``U`` open and ``N`` nowhere dense."""
    nd = nowhere_dense_bits(T)
    fam = {u & ~m for u in T.opens for m in nd}
    return validate_topology([points_of(u) for u in fam], T.n, max_n=T.n)


def semi_regularization(T: FinTopology) -> FinTopology:
    """Opens are all unions of regular open sets of ``T``."""
    regular = [u for u in T.opens if T.interior_bits(T.closure_bits(u)) == u]
    fam = {0}
    for r in regular:
        fam |= {u | r for u in fam}
    return validate_topology([points_of(u) for u in fam], T.n, max_n=T.n)


# -- catalog ------------------------------------------------------------------


def _check_n(n, lo=1, hi=CATALOG_MAX_N):
    if not isinstance(n, int) or not lo <= n <= hi:
        raise BadParameter(f"parameter must be an integer in [{lo}, {hi}], got {n!r}")


def discrete(n: int) -> FinTopology:
    _check_n(n)
    return FinTopology.from_min_nbhds(n, [1 << x for x in range(n)])


def indiscrete(n: int) -> FinTopology:
    _check_n(n)
    full = (1 << n) - 1
    return FinTopology.from_min_nbhds(n, [full] * n)


def sierpinski() -> FinTopology:
    return validate_topology([[], [0], [0, 1]], 2)


def p4_example() -> FinTopology:
    """``X = {a, b, c, d}`` with opens ``∅, {a}, {b}, {a, b}, X``; a..d are 0..3."""
    return validate_topology([[], [0], [1], [0, 1], [0, 1, 2, 3]], 4)


def e1_model(n: int) -> FinTopology:
    """Opens ``∅, A, X`` with ``A = {0..n-1}`` and the extra point ``p = n``."""
    _check_n(n, 1, CATALOG_MAX_N - 1)
    return validate_topology([[], list(range(n)), list(range(n + 1))], n + 1, max_n=n + 1)


def opc_model(k: int) -> FinTopology:
    """Finite model of the one-point compactification of a discrete countable set.

    Points ``0..k-1`` stand for the naturals, with ``k-1`` the tail carrying
    every natural from ``k-1`` on; point ``k`` is the point at infinity. Naturals
    are isolated, and a set containing infinity is open exactly when it
    contains the tail.
    """
    _check_n(k, 1, CATALOG_MAX_N - 1)
    inf = 1 << k
    tail = 1 << (k - 1)
    return FinTopology.from_min_nbhds(k + 1, [1 << x for x in range(k)] + [inf | tail])


_CATALOG = {
    "discrete": (discrete, True),
    "indiscrete": (indiscrete, True),
    "sierpinski": (sierpinski, False),
    "cofinite_finite": (discrete, True),
    "p4_example": (p4_example, False),
    "e1_model": (e1_model, True),
    "opc_model": (opc_model, True),
}

_ALIASES = {"p4": "p4_example", "e1": "e1_model", "cofinite": "cofinite_finite", "opc": "opc_model"}


def catalog(name: str, param: int | None = None) -> FinTopology:
    """Named space; ``cofinite_finite(n)`` is ``discrete(n)`` since every finite complement is finite."""
    name = _ALIASES.get(name, name)
    if name not in _CATALOG:
        raise UnknownName(f"unknown catalog space {name!r}")
    fn, takes_param = _CATALOG[name]
    if takes_param:
        if param is None:
            raise BadParameter(f"{name} needs an integer parameter")
        return fn(param)
    if param is not None:
        raise BadParameter(f"{name} takes no parameter")
    return fn()


def parse_space(spec: str) -> FinTopology:
    """Parse CLI strings like ``p4``, ``e1:4``, ``discrete:3``."""
    name, _, arg = spec.strip().partition(":")
    if arg:
        try:
            param = int(arg)
        except ValueError:
            raise BadParameter(f"bad parameter in {spec!r}") from None
        return catalog(name, param)
    return catalog(name)


# -- enumeration --------------------------------------------------------------


def _check_enum_n(n: int, allow_large: bool) -> None:
    if not isinstance(n, int) or n < 1:
        raise BadParameter("carrier size must be a positive integer")
    if n > DEFAULT_MAX_N or (n == DEFAULT_MAX_N and not allow_large):
        hint = "" if n > DEFAULT_MAX_N else " (pass allow_large=True for n = 5)"
        raise CarrierTooLarge(f"enumeration supports n <= {DEFAULT_MAX_N}{hint}")


@lru_cache(maxsize=None)
def _labeled(n: int) -> tuple[FinTopology, ...]:
    tops = [FinTopology.from_min_nbhds(n, rows) for rows in kernels.enumerate_preorders(n)]
    tops.sort(key=FinTopology.key)
    return tuple(tops)


@lru_cache(maxsize=None)
def _unlabeled(n: int) -> tuple[FinTopology, ...]:
    reps = {canonical_form(T) for T in _labeled(n)}
    return tuple(sorted(reps, key=FinTopology.key))


def enumerate_topologies(
    n: int,
    mode: EnumerationMode | str = EnumerationMode.LABELED,
    allow_large: bool = False,
) -> Iterator[FinTopology]:
    """Every topology on ``n`` points, once each, in :meth:`FinTopology.key` order.

    Topologies are generated from preorders: each reflexive transitive relation
    gives minimal neighborhoods (down-sets of points) and the opens are their
    unions. ``n = 5`` is opt-in through ``allow_large``.
    """
    mode = EnumerationMode(mode)
    _check_enum_n(n, allow_large)
    src = _labeled(n) if mode is EnumerationMode.LABELED else _unlabeled(n)
    return iter(src)


def count_topologies(n: int, mode: EnumerationMode | str = EnumerationMode.LABELED, allow_large: bool = False) -> int:
    mode = EnumerationMode(mode)
    _check_enum_n(n, allow_large)
    return len(_labeled(n) if mode is EnumerationMode.LABELED else _unlabeled(n))


def topologies_up_to(max_n: int, allow_large: bool = False) -> Iterator[FinTopology]:
    for n in range(1, max_n + 1):
        yield from enumerate_topologies(n, allow_large=allow_large)


# -- independent oracle ---------------------------------------------------------


def _closed_under(fam: set[int]) -> bool:
    items = list(fam)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if a | b not in fam or a & b not in fam:
                return False
    return True


def _close(fam: set[int]) -> frozenset[int]:
    fam = set(fam)
    frontier = list(fam)
    while frontier:
        new = []
        for a in frontier:
            for b in list(fam):
                for c in (a | b, a & b):
                    if c not in fam:
                        fam.add(c)
                        new.append(c)
        frontier = new
    return frozenset(fam)


def direct_open_families(n: int) -> set[frozenset[int]]:
    """All open-set families on ``n`` points, without preorders.

    For ``n <= 4`` every family of proper nonempty subsets is filtered for
    closure under union and intersection. For ``n = 5`` that is 2^30 families,
    so the search instead starts from ``{∅, X}`` and adds one subset at a
    time, closing under union and intersection. Every topology is reached
    that way since adding its opens in any order stays inside it.
    """
    if n < 1 or n > DEFAULT_MAX_N:
        raise CarrierTooLarge(f"direct oracle supports 1 <= n <= {DEFAULT_MAX_N}")
    full = (1 << n) - 1
    proper = list(range(1, full))
    out: set[frozenset[int]] = set()
    if n <= 4:
        for choice in range(1 << len(proper)):
            fam = {0, full}
            for i, s in enumerate(proper):
                if choice >> i & 1:
                    fam.add(s)
            if _closed_under(fam):
                out.add(frozenset(fam))
        return out
    start = frozenset((0, full))
    out.add(start)
    stack = [start]
    while stack:
        fam = stack.pop()
        for s in proper:
            if s in fam:
                continue
            grown = _close(fam | {s})
            if grown not in out:
                out.add(grown)
                stack.append(grown)
    return out


def enumerate_topologies_direct(n: int) -> list[FinTopology]:
    tops = [validate_topology([points_of(u) for u in fam], n) for fam in direct_open_families(n)]
    tops.sort(key=FinTopology.key)
    return tops
