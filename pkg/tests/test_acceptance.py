"""Acceptance criteria, one test each, every one printing a PASS/FAIL line.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import Space  # noqa: E402
from sgtopo import harness, kernels, spaces, symbolic as sym  # noqa: E402
from sgtopo.core import PtSet, points_of  # noqa: E402
from sgtopo.predicates import PredicateMode, is_hsg_closed, is_sg_closed, is_sg_open, profile  # noqa: E402

DEF, CHAR = PredicateMode.DEFINITIONAL, PredicateMode.CHARACTERIZATION


def report(num: int, title: str, ok: bool, detail: str, seconds: float, limit: float | None) -> bool:
    within = limit is None or seconds < limit
    status = "PASS" if ok and within else "FAIL"
    budget = f" (< {limit:g} s)" if limit else ""
    line = f"[{status}] criterion {num:>2}: {title} | {detail} | {seconds:.2f} s{budget}"
    _emit(line)
    return ok and within


_capman = None


def _emit(line: str) -> None:
    if _capman is not None:
        with _capman.global_and_fixture_disabled():
            print(line, flush=True)
    else:
        print(line, flush=True)


@pytest.fixture(autouse=True)
def _uncaptured(request):
    global _capman
    _capman = request.config.pluginmanager.getplugin("capturemanager")
    yield
    _capman = None


def _all(max_n=4):
    for n in range(1, max_n + 1):
        yield from spaces.enumerate_topologies(n)


# 1 -----------------------------------------------------------------------------


def criterion_1() -> bool:
    t0 = time.perf_counter()
    checked = bad = 0
    for T in _all():
        it, ct = T.interior_table, T.closure_table
        sint_o, scl_o = kernels.backend.semi_oracle_tables(T.n, it, ct)
        O = Space(T.n, [points_of(u) for u in T.opens])
        for a in range(1 << T.n):
            checked += 1
            A = frozenset(points_of(a))
            closed_form = (T.semi_interior_bits(a), T.semi_closure_bits(a))
            oracle_bits = (sint_o[a], scl_o[a])
            oracle_sets = (sum(1 << x for x in O.sint(A)), sum(1 << x for x in O.scl(A)))
            bad += not (closed_form == oracle_bits == oracle_sets)
    return report(1, "semi-interior/closure closed forms = brute-force oracles, n <= 4", bad == 0, f"{checked} (T, A) pairs, {bad} mismatches", time.perf_counter() - t0, 30)


# 2 -----------------------------------------------------------------------------


def criterion_2() -> bool:
    t0 = time.perf_counter()
    checked = bad = 0
    for T in _all():
        for a in range(1 << T.n):
            A = PtSet(T.n, a)
            checked += 1
            bad += is_sg_open(T, A, DEF) != is_sg_open(T, A, CHAR)
            bad += is_sg_closed(T, A, DEF) != is_sg_closed(T, A, CHAR)
            bad += is_hsg_closed(T, A, DEF) != is_hsg_closed(T, A, CHAR)
    return report(2, "definitional and characterization modes agree, n <= 4", bad == 0, f"{checked} (T, A) pairs x 3 predicates, {bad} disagreements", time.perf_counter() - t0, 60)


# 3 -----------------------------------------------------------------------------


def criterion_3() -> bool:
    t0 = time.perf_counter()
    r1 = harness.verify_claim("R3_i_union_closed", 4)
    r2 = harness.verify_claim("R3_ii_int_open", 4)
    T = spaces.p4_example()
    a, b = PtSet.of(4, [0]), PtSet.of(4, [1])
    p4_ok = all(is_sg_closed(T, s, m) for s in (a, b) for m in (DEF, CHAR)) and not any(is_sg_closed(T, a | b, m) for m in (DEF, CHAR))
    small = harness.search_counterexample("union-of-two-sg-closed-sg-closed", 3)
    none_small = small is None
    detail = f"(i) {r1.passed}, (ii) {r2.passed}, P4 witness {p4_ok}, no violation at n <= 3: {none_small}"
    if small is not None:
        detail += f" (found n={small.n}, opens={small.topology['opens']}, sets={small.sets})"
    return report(3, "union/intersection behaviour, P4 witness, minimality", r1.passed and r2.passed and p4_ok and none_small, detail, time.perf_counter() - t0, None)


# 4 -----------------------------------------------------------------------------


def criterion_4() -> bool:
    t0 = time.perf_counter()
    ids = ["DP1_regular_open_iff", "BL1_T3_transfer", "P4_regular_open_transfer", "C2_delta_open_transfer"]
    reps = [harness.verify_claim(c, 4) for c in ids]
    detail = ", ".join(f"{r.claim}={r.passed}({r.instances})" for r in reps)
    return report(4, "regular-open equivalence and subspace transfers, n <= 4", all(r.passed for r in reps), detail, time.perf_counter() - t0, 120)


# 5 -----------------------------------------------------------------------------


def criterion_5() -> bool:
    t0 = time.perf_counter()
    ids = ["X2_subsets_sg_open", "SEMITD_coincide", "INDISCRETE_iff_hsg", "R2i_X1_full_coincide", "SG_implies_beta", "INT_sg_closed_stable"]
    reps = [harness.verify_claim(c, 4) for c in ids]
    nd_bad = 0
    for T in _all():
        P = profile(T)
        nd_bad += sum(P.interior[P.closure[a]] == 0 and not P.hsg_def[a] for a in range(P.size))
    converse = harness.search_counterexample("hsg-implies-nowhere-dense", 4)
    ok = all(r.passed for r in reps) and nd_bad == 0 and converse is not None
    detail = ", ".join(f"{r.claim}={r.passed}" for r in reps)
    detail += f", nowhere dense => hsg: {nd_bad == 0}, converse counterexample at n={converse.n if converse else None}"
    failing = [r for r in reps if not r.passed]
    for r in failing:
        detail += f"; {r.claim} witness opens={r.witness.get('topology', {}).get('opens')}"
    return report(5, "structural properties, n <= 4", ok, detail, time.perf_counter() - t0, None)


# 6 -----------------------------------------------------------------------------


def criterion_6(include_n5: bool = False) -> bool:
    t0 = time.perf_counter()
    rows = []
    ok = True
    for n in range(1, 6 if include_n5 else 5):
        pre = spaces.count_topologies(n, allow_large=True)
        direct = len(spaces.direct_open_families(n))
        same = {T.opens for T in spaces.enumerate_topologies(n, allow_large=True)} == {T.opens for T in spaces.enumerate_topologies_direct(n)}
        ok = ok and pre == direct and same
        rows.append(f"n={n}: {pre}/{direct}")
    limit = 1800 if include_n5 else None
    return report(6, "preorder enumeration = direct family-closure oracle" + (" incl. n = 5" if include_n5 else ""), ok, ", ".join(rows), time.perf_counter() - t0, limit)


# 7 -----------------------------------------------------------------------------


def criterion_7() -> bool:
    t0 = time.perf_counter()
    CN, IN, E1, OPC = sym.ALL_SPACES
    c3_in = sym.sym_is_C3(IN)
    w = sym.sym_cellular_witness(OPC)
    checks = {
        "cofinite C3 and sg-compact": sym.sym_is_C3(CN).value and sym.sym_is_sg_compact(CN),
        "indiscrete-nat not C3 with witness": not c3_in.value and c3_in.witness is not None,
        "e1 sg-compact, open subspace not": sym.sym_is_sg_compact(E1) and not sym.sym_is_sg_compact(sym.sym_subspace(E1, E1.cof())),
        "opc C2 with infinite cellular family in X2": sym.sym_is_C2(OPC).value and w is not None and w.union_in_x2,
        "C3 => C2": all(sym.sym_is_C2(SP).value for SP in sym.ALL_SPACES if sym.sym_is_C3(SP).value),
    }
    fals = [sym.falsify(SP, samples=10_000, seed=0) for SP in sym.ALL_SPACES]
    checks["falsifiers clean (4 x 10000)"] = all(f.ok for f in fals)
    detail = ", ".join(f"{k}: {v}" for k, v in checks.items())
    return report(7, "symbolic catalog verdicts", all(checks.values()), detail, time.perf_counter() - t0, 30)


# 8 -----------------------------------------------------------------------------


def criterion_8() -> bool:
    t0 = time.perf_counter()
    models = {sym.INDISCRETE_PLUS_POINT: spaces.e1_model, sym.ONE_POINT_COMPACT_DISCRETE_NAT: spaces.opc_model}
    checked = bad = 0
    for SP, model in models.items():
        for k in range(2, 9):
            T = model(k)
            for bits in range(1 << (k - 1)):
                pts = points_of(bits)
                for ex in SP.extras_subsets():
                    A = SP.fin(pts, ex)
                    a = sym.truncate(SP, A, k)
                    checked += 1
                    bad += sym.truncate(SP, sym.sym_interior(SP, A), k) != T.interior_bits(a)
                    bad += sym.truncate(SP, sym.sym_closure(SP, A), k) != T.closure_bits(a)
    return report(8, "symbolic operators = finite engine on truncations, k = 2..8", bad == 0, f"{checked} finite-tagged sets, {bad} mismatches", time.perf_counter() - t0, None)


# 9 -----------------------------------------------------------------------------


def criterion_9() -> bool:
    t0 = time.perf_counter()
    rows = harness.product_nd_sizes(range(2, 9))
    ok = all(nd and size == 2 * n + 1 for n, size, nd in rows)
    detail = ", ".join(f"n={n}: |S|={size} nd={nd}" for n, size, nd in rows)
    return report(9, "X x X minus A x A nowhere dense in e1_model(n)^2", ok, detail, time.perf_counter() - t0, None)


# 10 ----------------------------------------------------------------------------


def criterion_10() -> bool:
    t0 = time.perf_counter()
    rep = harness.verify_claim("TOPOLOGICAL_invariance", 4, seed=0)
    return report(10, "1000 random relabelings keep every predicate equivariant", rep.passed, f"{rep.instances} pairs", time.perf_counter() - t0, None)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_criterion(crit):
    assert crit()


@pytest.mark.slow
def test_criterion_6_with_n5():
    assert criterion_6(include_n5=True)


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    if "--with-n5" in sys.argv:
        results.append(criterion_6(include_n5=True))
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
