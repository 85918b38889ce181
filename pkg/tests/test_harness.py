from __future__ import annotations

import json

import pytest

from sgtopo import harness, spaces
from sgtopo.core import CarrierTooLarge, FinTopology
from sgtopo.harness import SuiteConfig

KNOWN_FALSE = {"INDISCRETE_iff_hsg"}


def _reports(summary):
    return {r["claim"]: r for r in summary["reports"]}


@pytest.fixture(scope="module")
def suite():
    return harness.run_suite(SuiteConfig(max_n=4, samples=2000))


def test_registry_is_closed():
    assert len(harness.CLAIM_IDS) == 24 == len(set(harness.CLAIM_IDS))
    with pytest.raises(harness.UnknownClaim):
        harness.verify_claim("NOT_A_CLAIM", 3)
    with pytest.raises(CarrierTooLarge):
        harness.verify_claim("P1_hsg_char", 6)


def test_p1_instance_count_matches_direct_oracle():
    expected = sum(len(spaces.direct_open_families(n)) * 2**n for n in range(1, 5))
    rep = harness.verify_claim("P1_hsg_char", 4)
    assert rep.passed and rep.instances == expected
    assert rep.universe["topologies_per_n"] == {"1": 1, "2": 4, "3": 29, "4": 355}


def test_suite_outcomes(suite):
    summary, code = suite
    reps = _reports(summary)
    assert {c for c, r in reps.items() if not r["passed"]} == KNOWN_FALSE
    assert code == 1
    assert summary["schema_version"] == 1


def test_failing_witness_replays(suite):
    summary, _ = suite
    for r in summary["reports"]:
        if not r["passed"]:
            w = r["witness"]
            assert w is not None
            assert harness.replay_witness(json.loads(json.dumps(w))) is False


def test_indiscrete_claim_fails_on_discrete_space():
    rep = harness.verify_claim("INDISCRETE_iff_hsg", 4)
    assert not rep.passed
    T = FinTopology.from_json(rep.witness["topology"])
    assert T == spaces.discrete(2)
    assert rep.evidence["every-subset-hsg vs X1 empty: disagreements"] == 0


def test_r3_iii_reports_p4_and_minimal_violation():
    rep = harness.verify_claim("R3_iii_counterexample", 4)
    assert rep.passed
    assert rep.evidence["A"] == [0] and rep.evidence["B"] == [1]
    assert rep.evidence["minimal union counterexample"]["n"] == 3


def test_symbolic_claims_report_universe(suite):
    summary, _ = suite
    reps = _reports(summary)
    for cid in ("R1i_opc", "L1_instance", "L2_i_sym", "E1_i_subspace"):
        assert "symbolic" in reps[cid]["universe"]
    assert reps["R2ii_cofinite"]["passed"]
    rows = reps["E1_ii_product_nd"]["evidence"]["rows"]
    assert [r["size"] for r in rows] == [2 * n + 1 for n in range(2, 9)]


def test_no_symbolic_flag():
    summary, _ = harness.run_suite(SuiteConfig(max_n=2, symbolic=False, claims=["P1_hsg_char", "L1_instance"]))
    assert [r["claim"] for r in summary["reports"]] == ["P1_hsg_char"]


def test_report_determinism():
    cfg = dict(max_n=3, samples=500, seed=7)
    a, _ = harness.run_suite(SuiteConfig(**cfg))
    b, _ = harness.run_suite(SuiteConfig(**cfg, workers=2))

    def strip(s):
        s = json.loads(harness.dumps_report(s))
        for r in s["reports"]:
            r["wall_time"] = 0
        return json.dumps(s, sort_keys=True)

    assert strip(a) == strip(b)


@pytest.mark.parametrize("mutation,claim", [("sg_closed_ignores_x1", "SG_char_closed"), ("hsg_drops_closure", "P1_hsg_char")])
def test_mutation_hook_is_caught(mutation, claim):
    summary, code = harness.run_suite(SuiteConfig(claims=[claim], max_n=3, mutation=mutation))
    assert code == 1
    w = summary["reports"][0]["witness"]
    assert w is not None
    with harness.mutated(mutation):
        assert harness.replay_witness(w) is False
    # the unmutated predicate holds on the same witness
    assert harness.replay_witness(w) is True


def test_mutation_is_restored():
    from sgtopo import predicates

    before = predicates.sg_closed_char_bits
    with harness.mutated("sg_closed_ignores_x1"):
        assert predicates.sg_closed_char_bits is not before
    assert predicates.sg_closed_char_bits is before


def test_bad_config():
    with pytest.raises(CarrierTooLarge):
        harness.run_suite(SuiteConfig(max_n=7))
    with pytest.raises(harness.UnknownClaim):
        harness.run_suite(SuiteConfig(claims=["nope"]))
    with pytest.raises(ValueError):
        harness.run_suite(SuiteConfig(mutation="nope"))


# -- counterexample search -----------------------------------------------------------


def test_search_union_of_sg_closed():
    rec = harness.search_counterexample("union-of-two-sg-closed-sg-closed", 4)
    assert rec is not None and rec.n <= 4
    assert rec.replay()
    assert harness.search_counterexample("union-of-two-sg-closed-sg-closed", 2) is None


def test_search_hsg_not_nowhere_dense():
    rec = harness.search_counterexample("hsg-implies-nowhere-dense", 4)
    assert rec.n == 1 and rec.sets == [[0]] and rec.replay()


def test_search_sg_open_not_semi_open():
    rec = harness.search_counterexample("sg-open-implies-semi-open", 4)
    assert rec is not None and rec.replay()
    T = FinTopology.from_json(rec.topology)
    from sgtopo.predicates import profile

    a = sum(1 << x for x in rec.sets[0])
    assert profile(T).sg_open_def[a] and not profile(T).semi_open[a]


def test_search_errors():
    with pytest.raises(harness.UnknownTarget):
        harness.search_counterexample("pigs-fly", 3)
    with pytest.raises(CarrierTooLarge):
        harness.search_counterexample("hsg-implies-nowhere-dense", 6)


def test_search_order_is_minimal():
    # brute check: nothing at smaller n for each found record
    for name in harness.TARGETS:
        rec = harness.search_counterexample(name, 4)
        if rec is not None and rec.n > 1:
            assert harness.search_counterexample(name, rec.n - 1) is None
