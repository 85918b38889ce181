from __future__ import annotations

import os
import sys

from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from sgtopo.core import FinTopology, points_of, validate_topology  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def _close(n, seeds):
    full = (1 << n) - 1
    fam = {0, full, *seeds}
    while True:
        new = {a | b for a in fam for b in fam} | {a & b for a in fam for b in fam}
        if new <= fam:
            return fam
        fam |= new


@st.composite
def topologies(draw, min_n=1, max_n=4):
    """Random topology: close a random family of subsets under ∪ and ∩."""
    n = draw(st.integers(min_n, max_n))
    seeds = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=5))
    fam = _close(n, seeds)
    return validate_topology([points_of(u) for u in fam], n)


@st.composite
def space_and_set(draw, min_n=1, max_n=4):
    T = draw(topologies(min_n, max_n))
    return T, draw(st.integers(0, T.full))


def as_frozen(bits: int) -> frozenset:
    return frozenset(points_of(bits))


def to_bits(s) -> int:
    return sum(1 << x for x in s)


def oracle_space(T: FinTopology):
    from oracles import Space

    return Space(T.n, [points_of(u) for u in T.opens])
