from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import as_frozen, oracle_space, space_and_set, topologies
from sgtopo import spaces
from sgtopo.core import CarrierMismatch, PointOutOfRange, PtSet
from sgtopo.predicates import (
    PointMap,
    PredicateMode,
    cellular_families,
    decompose,
    is_cellular,
    is_hsg_closed,
    is_indiscrete,
    is_pre_sg_continuous,
    is_semi_TD,
    is_sg_closed,
    is_sg_open,
    maximal_cellular_families,
    profile,
)

DEF, CHAR = PredicateMode.DEFINITIONAL, PredicateMode.CHARACTERIZATION
P4 = spaces.p4_example()


def S(*pts, n=4):
    return PtSet.of(n, pts)


def test_decompose_examples():
    d = decompose(P4)
    assert d.x1 == S(2, 3) and d.x2 == S(0, 1)
    assert decompose(spaces.discrete(3)).x1 == PtSet.empty(3)
    for n in range(1, 8):
        assert decompose(spaces.e1_model(n)).x1 == PtSet.of(n + 1, [n])


@pytest.mark.parametrize("mode", [DEF, CHAR])
def test_sg_examples(mode):
    assert not is_sg_closed(P4, S(0, 1), mode)
    assert is_sg_closed(P4, S(0), mode)
    I3 = spaces.indiscrete(3)
    assert all(is_sg_closed(I3, PtSet(3, a), mode) for a in range(8))
    assert is_sg_open(P4, S(0, 1, 2), mode) == is_sg_closed(P4, S(3), mode)
    assert is_sg_open(spaces.indiscrete(2), S(0, n=2), mode)
    sier = spaces.sierpinski()
    assert is_hsg_closed(sier, S(1, n=2), mode)
    assert not is_hsg_closed(sier, S(0, n=2), mode)
    one = spaces.discrete(1)
    assert is_hsg_closed(one, PtSet.full(1), mode)


def test_hsg_not_nowhere_dense_on_single_point():
    from sgtopo.core import classify_set

    one = spaces.discrete(1)
    assert is_hsg_closed(one, PtSet.full(1)) and not classify_set(one, PtSet.full(1)).nowhere_dense


@given(space_and_set(max_n=3))
def test_modes_agree_with_frozenset_oracle(t):
    T, a = t
    O = oracle_space(T)
    A = as_frozen(a)
    for mode in (DEF, CHAR):
        assert is_sg_closed(T, PtSet(T.n, a), mode) == O.sg_closed(A)
        assert is_sg_open(T, PtSet(T.n, a), mode) == O.sg_open(A)
        assert is_hsg_closed(T, PtSet(T.n, a), mode) == O.hsg_closed(A)


def test_mode_equivalence_exhaustive():
    for n in range(1, 5):
        for T in spaces.enumerate_topologies(n):
            P = profile(T)
            for a in range(P.size):
                A = PtSet(n, a)
                assert is_sg_closed(T, A, DEF) == is_sg_closed(T, A, CHAR) == P.sg_closed_def[a]
                assert is_sg_open(T, A, DEF) == is_sg_open(T, A, CHAR) == P.sg_open_def[a]
                assert is_hsg_closed(T, A, DEF) == is_hsg_closed(T, A, CHAR) == P.hsg_def[a]


@given(space_and_set())
def test_structural_properties(t):
    T, a = t
    P = profile(T)
    comp = T.full & ~a
    assert P.sg_open_def[a] == P.sg_closed_def[comp]
    if P.interior[P.closure[a]] == 0:
        assert P.hsg_def[a]
    if P.semi_closed[a]:
        assert P.sg_closed_def[a]
    if a & ~P.x2 == 0:
        assert P.sg_open_def[a]


def test_semi_td_examples():
    assert is_semi_TD(P4)
    assert not is_semi_TD(spaces.indiscrete(2))
    assert all(is_semi_TD(spaces.discrete(n)) for n in range(1, 6))


def test_every_subset_hsg_iff_x1_empty():
    for n in range(1, 5):
        for T in spaces.enumerate_topologies(n):
            P = profile(T)
            assert all(P.hsg_def) == (P.x1 == 0)
            if is_indiscrete(T):
                assert all(P.hsg_def)


def test_discrete_spaces_have_every_subset_hsg_closed():
    # X1 is empty, so the indiscrete spaces are not the only ones with this property
    for n in range(2, 5):
        D = spaces.discrete(n)
        assert not is_indiscrete(D)
        assert all(is_hsg_closed(D, PtSet(n, a)) for a in range(1 << n))


def test_cellular():
    assert is_cellular(P4, [S(0), S(1)])
    assert not is_cellular(P4, [S(0), S(0, 1)])
    assert is_cellular(P4, [])
    assert not is_cellular(P4, [S(2)])
    assert maximal_cellular_families(spaces.discrete(2)) == [(PtSet.of(2, [0]), PtSet.of(2, [1]))]
    assert maximal_cellular_families(spaces.indiscrete(3)) == [(PtSet.full(3),)]
    assert maximal_cellular_families(P4) == [(S(0), S(1))]


def _refines(g, f):
    # injective assignment of members of f to members of g inside them
    def go(i, used):
        if i == len(f):
            return True
        return any(j not in used and g[j] & ~f[i] == 0 and go(i + 1, used | {j}) for j in range(len(g)))

    return go(0, frozenset())


@given(topologies())
def test_maximal_cellular_against_enumeration(T):
    fams = cellular_families(T)
    best = [u.bits for u in maximal_cellular_families(T)[0]]
    assert is_cellular(T, [PtSet(T.n, u) for u in best])
    # refines every cellular family and has the maximum size
    assert all(_refines(best, list(f)) for f in fams)
    assert len(best) == max(len(f) for f in fams)


def test_point_map_validation():
    with pytest.raises(CarrierMismatch):
        PointMap(2, 2, (0,))
    with pytest.raises(PointOutOfRange):
        PointMap(2, 2, (0, 2))
    f = PointMap(3, 2, (1, 0, 1))
    assert f.preimage_bits(0b10) == 0b101 and f.image_bits(0b011) == 0b11


def test_pre_sg_continuity_examples():
    assert is_pre_sg_continuous(PointMap.identity(4), P4, P4)
    one = spaces.indiscrete(1)
    for T in spaces.enumerate_topologies(3):
        assert is_pre_sg_continuous(PointMap.constant(3, 1, 0), T, one)
    x2 = decompose(P4).x2
    for y in x2:
        for T in spaces.enumerate_topologies(3):
            f = PointMap.constant(3, 4, y)
            expect = all(
                is_sg_closed(T, PtSet(3, f.preimage_bits(b)), DEF)
                for b in range(16)
                if profile(P4).semi_closed[b]
            )
            assert is_pre_sg_continuous(f, T, P4) == expect == is_pre_sg_continuous(f, T, P4, DEF)
    with pytest.raises(CarrierMismatch):
        is_pre_sg_continuous(PointMap.identity(3), P4, P4)


@given(topologies(max_n=3), topologies(max_n=3), st.data())
def test_pre_sg_continuity_modes_agree(S_, T, data):
    images = tuple(data.draw(st.lists(st.integers(0, T.n - 1), min_size=S_.n, max_size=S_.n)))
    f = PointMap(S_.n, T.n, images)
    assert is_pre_sg_continuous(f, S_, T, DEF) == is_pre_sg_continuous(f, S_, T, CHAR)
