"""Claim registry, counterexample miner and suite runner.

Every claim is a closed, auditable check: finite claims quantify over all
labeled topologies up to ``max_n`` and a claim-specific tuple of subsets;
symbolic claims evaluate the countable catalog spaces. Failing reports carry a
witness that :func:`replay_witness` re-checks on a freshly built topology.
"""

from __future__ import annotations

import contextlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from . import predicates as pred
from . import spaces, symbolic as sym
from .core import DEFAULT_MAX_N, CarrierTooLarge, FinTopology, classify_bits, points_of, popcount, submasks
from .kernels import BACKEND
from .predicates import SpaceProfile

SCHEMA_VERSION = 1


class UnknownClaim(KeyError):
    pass


class UnknownTarget(KeyError):
    pass


@dataclass
class PropertyReport:
    claim: str
    description: str
    universe: dict
    instances: int
    passed: bool
    witness: Optional[dict] = None
    evidence: Optional[dict] = None
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


# -- finite claims --------------------------------------------------------------


@dataclass(frozen=True)
class FiniteClaim:
    id: str
    description: str
    instances: Callable[[SpaceProfile], Iterable[tuple]]
    check: Callable[..., bool]
    # claims quantifying over whole families cap the carrier for that part
    instance_cap: Optional[Callable[[int], Callable[[SpaceProfile], Iterable[tuple]]]] = None

    def instances_for(self, P: SpaceProfile) -> Iterable[tuple]:
        if self.instance_cap is not None:
            return self.instance_cap(P.n)(P)
        return self.instances(P)


def _all_sets(P):
    return ((a,) for a in range(P.size))


def _space(P):
    return ((),)


def _closed(P, a):
    return P.T.is_open_bits(P.full & ~a)


def _alpha_open(P, a):
    it, ct = P.interior, P.closure
    return a & ~it[ct[it[a]]] == 0


def _beta_open(P, a):
    it, ct = P.interior, P.closure
    return a & ~ct[it[ct[a]]] == 0


def _regular_open(P, a):
    return P.interior[P.closure[a]] == a


def _sub_profile(P, s):
    pts = points_of(s)
    return pred.profile(spaces.subspace(P.T, pts)), pts


def _p1(P, a):
    return P.hsg_def[a] == P.hsg_closed(a)


def _sg_open_char(P, a):
    return P.sg_open_def[a] == P.sg_open(a)


def _sg_closed_char(P, a):
    # definitional sCl route, characterization, and the complement of the definitional sg-open route
    return P.sg_closed_def[a] == P.sg_closed(a) == P.sg_open_def[P.full & ~a]


def _x2_instances(P):
    return ((a,) for a in submasks(P.x2))


def _x2_check(P, a):
    return a & ~P.x2 == 0 and P.sg_open_def[a]


def _r3i_instances(P):
    closed = [a for a in range(P.size) if _closed(P, a)]
    for a in range(P.size):
        if P.sg_closed_def[a]:
            for b in closed:
                yield a, b


def _r3i_check(P, a, b):
    return not (P.sg_closed_def[a] and _closed(P, b)) or P.sg_closed_def[a | b]


def _r3ii_instances(P):
    for a in range(P.size):
        if P.sg_open_def[a]:
            for u in P.T.opens:
                yield a, u


def _r3ii_check(P, a, u):
    return not (P.sg_open_def[a] and P.T.is_open_bits(u)) or P.sg_open_def[a & u]


def _int_families(P):
    closed = [a for a in range(P.size) if P.sg_closed_def[a]]
    for choice in range(1, 1 << len(closed)):
        yield ([closed[i] for i in range(len(closed)) if choice >> i & 1],)


def _int_pairs(P):
    closed = [a for a in range(P.size) if P.sg_closed_def[a]]
    for i, a in enumerate(closed):
        for b in closed[i:]:
            yield ([a, b],)


def _int_cap(n):
    return _int_families if n <= 3 else _int_pairs


def _int_check(P, fam):
    r = P.full
    for a in fam:
        if not P.sg_closed_def[a]:
            return True
        r &= a
    return P.sg_closed_def[r]


def _bl1_instances(P):
    for a in P.T.opens:
        if a and P.sg_closed_def[a]:
            for b in submasks(a):
                yield a, b


def _bl1_check(P, a, b):
    S, pts = _sub_profile(P, a)
    return S.sg_closed_def[spaces.restrict_bits(pts, b)] == P.sg_closed_def[b]


def _transfer_instances(supersets):
    def gen(P):
        for r in supersets(P):
            if r:
                for a in submasks(r):
                    yield r, a

    return gen


def _transfer_check(P, r, a):
    S, pts = _sub_profile(P, r)
    return not S.sg_open_def[spaces.restrict_bits(pts, a)] or P.sg_open_def[a]


def _regular_opens(P):
    return [u for u in P.T.opens if _regular_open(P, u)]


def _delta_opens(P):
    return list(spaces.semi_regularization(P.T).opens)


def _p4_check(P, r, a):
    return _regular_open(P, r) and _transfer_check(P, r, a)


def _c2_check(P, r, a):
    return r in _delta_opens(P) and _transfer_check(P, r, a)


def _dp1_check(P, a):
    return _regular_open(P, a) == (_alpha_open(P, a) and P.sg_closed_def[a])


def _semitd_check(P):
    same = all(P.sg_closed_def[a] == P.semi_closed[a] for a in range(P.size))
    return pred.is_semi_TD(P.T) == same


def _indiscrete_check(P):
    return pred.is_indiscrete(P.T) == all(P.hsg_def) == (P.x1 == 0)


def _indiscrete_split(max_n: int) -> dict:
    """Tally the two halves of the indiscrete equivalence separately."""
    hsg_x1 = indiscrete_hsg = 0
    first = None
    for n in range(1, max_n + 1):
        for T in spaces.enumerate_topologies(n, allow_large=True):
            P = pred.profile(T)
            every = all(P.hsg_def)
            hsg_x1 += every != (P.x1 == 0)
            if every != pred.is_indiscrete(T):
                indiscrete_hsg += 1
                first = first or T.to_json()
    return {
        "every-subset-hsg vs X1 empty: disagreements": hsg_x1,
        "indiscrete vs every-subset-hsg: disagreements": indiscrete_hsg,
        "first disagreement": first,
    }


def _r2i_instances(P):
    return ((),) if P.x1 == P.full else ()


def _r2i_check(P):
    return P.x1 != P.full or all(P.sg_closed_def[a] == P.semi_closed[a] for a in range(P.size))


def _r2i_symbolic(rep: PropertyReport, seed: int, samples: int = 2000) -> None:
    # no nonempty finite space has X1 = X, so the cofinite naturals carry the claim
    SP = sym.COFINITE_NAT
    rep.notes.append("finite universe is vacuous (a minimal open set lies in the closure of each of its points)")
    full = sym.sym_decompose(SP).x1 == SP.full
    rng = random.Random(seed)
    bad = None
    for i in range(samples):
        A = sym.random_symset(SP, rng, 1 + i * 20 // samples)
        semi_closed = sym.sym_interior(SP, sym.sym_closure(SP, A)).issubset(A)
        if sym.sym_is_sg_closed(SP, A) != semi_closed:
            bad = str(A)
            break
    rep.instances += samples
    rep.universe["symbolic"] = [SP.name]
    rep.evidence = {"X1 = X": full, "samples": samples}
    if not full or bad is not None:
        rep.passed = False
        rep.witness = {"claim": rep.claim, "space": SP.name, "set": bad}


def _beta_check(P, a):
    return not P.sg_open_def[a] or _beta_open(P, a)


def _thm1_cover_instances(P):
    for a in range(P.size):
        if P.hsg_def[a]:
            for x in points_of(a):
                yield a, x


def _thm1_cover_check(P, a, x):
    # for hsg-closed A, each (X \ A) ∪ {x} with x in A is sg-open
    return not P.hsg_def[a] or P.sg_open_def[(P.full & ~a) | (1 << x)]


FINITE_CLAIMS: dict[str, FiniteClaim] = {
    c.id: c
    for c in [
        FiniteClaim("P1_hsg_char", "hsg-closed iff X1 ∩ Int cl A = ∅ (definition vs characterization)", _all_sets, _p1),
        FiniteClaim("SG_char_open", "sg-open iff A ∩ X1 ⊆ sInt A", _all_sets, _sg_open_char),
        FiniteClaim("SG_char_closed", "sg-closed iff X1 ∩ Int cl A ⊆ A; agrees with complement of sg-open", _all_sets, _sg_closed_char),
        FiniteClaim("X2_subsets_sg_open", "every subset of X2 is sg-open", _x2_instances, _x2_check),
        FiniteClaim("R3_i_union_closed", "sg-closed ∪ closed is sg-closed", _r3i_instances, _r3i_check),
        FiniteClaim("R3_ii_int_open", "sg-open ∩ open is sg-open", _r3ii_instances, _r3ii_check),
        FiniteClaim(
            "INT_sg_closed_stable",
            "intersections of sg-closed sets are sg-closed (all families n <= 3, pairs above)",
            _int_pairs,
            _int_check,
            instance_cap=_int_cap,
        ),
        FiniteClaim("BL1_T3_transfer", "for open sg-closed A and B ⊆ A: B sg-closed in A iff in X", _bl1_instances, _bl1_check),
        FiniteClaim(
            "P4_regular_open_transfer",
            "A ⊆ R regular open, A sg-open in R ⇒ A sg-open in X",
            _transfer_instances(_regular_opens),
            _p4_check,
        ),
        FiniteClaim(
            "C2_delta_open_transfer",
            "A ⊆ B δ-open, A sg-open in B ⇒ A sg-open in X",
            _transfer_instances(_delta_opens),
            _c2_check,
        ),
        FiniteClaim("DP1_regular_open_iff", "regular open iff α-open and sg-closed", _all_sets, _dp1_check),
        FiniteClaim("SEMITD_coincide", "semi-T_D iff sg-closed sets = semi-closed sets", _space, _semitd_check),
        FiniteClaim("INDISCRETE_iff_hsg", "indiscrete iff every subset hsg-closed iff X1 = ∅", _space, _indiscrete_check),
        FiniteClaim("R2i_X1_full_coincide", "X1 = X ⇒ sg-closed sets = semi-closed sets", _r2i_instances, _r2i_check),
        FiniteClaim("SG_implies_beta", "sg-open ⇒ β-open", _all_sets, _beta_check),
    ]
}

# finite engine of the sg-compact ⇒ C3 direction, run inside THM1_sym
THM1_COVER = FiniteClaim(
    "THM1_cover",
    "hsg-closed A: (X \\ A) ∪ {x} is sg-open for x in A",
    _thm1_cover_instances,
    _thm1_cover_check,
)


def _witness(claim: FiniteClaim, T: FinTopology, args: tuple) -> dict:
    sets = [points_of(a) if isinstance(a, int) and claim.id != "THM1_cover" else a for a in args]
    transcript = {}
    for a in args:
        if isinstance(a, int):
            x1 = pred.decompose_bits(T)[0]
            transcript[str(points_of(a))] = {
                "sg_closed": pred.sg_closed_char_bits(T, x1, a),
                "sg_open": pred.sg_open_char_bits(T, x1, a),
                "hsg_closed": pred.hsg_closed_char_bits(T, x1, a),
                "sg_closed_def": pred.sg_closed_def_bits(T, a),
                "sg_open_def": pred.sg_open_def_bits(T, a),
                **classify_bits(T, a).as_dict(),
            }
    return {"claim": claim.id, "topology": T.to_json(), "args": list(args), "sets": sets, "transcript": transcript}


def replay_witness(witness: dict) -> bool:
    """Re-run a witness on a freshly validated topology; True means the claim holds there."""
    claim = THM1_COVER if witness["claim"] == "THM1_cover" else FINITE_CLAIMS[witness["claim"]]
    T = FinTopology.from_json(witness["topology"], max_n=spaces.CATALOG_MAX_N)
    return bool(claim.check(SpaceProfile(T), *witness["args"]))


def run_finite(claim: FiniteClaim, max_n: int) -> tuple[int, dict, Optional[dict]]:
    counts: dict[str, int] = {}
    total = 0
    for n in range(1, max_n + 1):
        per_n = 0
        for T in spaces.enumerate_topologies(n, allow_large=True):
            P = pred.profile(T)
            for args in claim.instances_for(P):
                per_n += 1
                if not claim.check(P, *args):
                    counts[str(n)] = per_n
                    return total + per_n, counts, _witness(claim, T, args)
        counts[str(n)] = per_n
        total += per_n
    return total, counts, None


def _universe(max_n: int) -> dict:
    return {"max_n": max_n, "topologies_per_n": {str(n): spaces.count_topologies(n, allow_large=True) for n in range(1, max_n + 1)}}


# -- claims with custom drivers --------------------------------------------------


def _r3iii(max_n: int, rep: PropertyReport) -> None:
    T = spaces.p4_example()
    a, b = 0b0001, 0b0010
    x1 = pred.decompose_bits(T)[0]
    semi_closed = pred.semi_closed_bits(T, a) and pred.semi_closed_bits(T, b)
    sgc = [pred.sg_closed_def_bits(T, s) and pred.sg_closed_char_bits(T, x1, s) for s in (a, b)]
    union_bad = not pred.sg_closed_def_bits(T, a | b) and not pred.sg_closed_char_bits(T, x1, a | b)
    rep.evidence = {
        "topology": T.to_json(),
        "A": points_of(a),
        "B": points_of(b),
        "A,B semi-closed": semi_closed,
        "A,B sg-closed": sgc,
        "A∪B sg-closed": not union_bad,
    }
    ok = semi_closed and all(sgc) and union_bad
    rec, scanned = search_counterexample("union-of-two-sg-closed-sg-closed", max_n, count=True)
    rep.instances = 3 + scanned
    rep.evidence["minimal union counterexample"] = None if rec is None else rec.to_dict()
    rep.notes.append(f"pairwise-union scan n <= {max_n}: first violation at n = {None if rec is None else rec.n} after {scanned} pairs")
    rep.passed = ok


def _thm1_sym(max_n: int, rep: PropertyReport, seed: int, samples: int) -> None:
    ok = True
    total, counts, w = run_finite(THM1_COVER, max_n)
    rep.universe["cover_instances_per_n"] = counts
    rep.instances = total
    if w is not None:
        rep.witness = w
        ok = False
    expected = {
        sym.COFINITE_NAT: True,
        sym.INDISCRETE_NAT: False,
        sym.INDISCRETE_PLUS_POINT: True,
    }
    verdicts = {}
    for SP in sym.ALL_SPACES:
        c2, c3 = sym.sym_is_C2(SP), sym.sym_is_C3(SP)
        sgc = sym.sym_is_sg_compact(SP)
        verdicts[SP.name] = {"C2": c2.value, "C3": c3.value, "sg_compact": sgc, "witness": None if c3.witness is None else str(c3.witness)}
        rep.instances += 1
        if SP in expected and sgc != expected[SP]:
            ok = False
        if c3.value and not c2.value:
            ok = False
        if not c3.value and c3.witness is None:
            ok = False
        # cover from the sg-compact ⇒ C3 direction, on a representable witness
        if isinstance(c3.witness, sym.SymSet):
            A = c3.witness
            B = A.complement()
            xs = [x for x in range(60) if x in A][:25]
            for x in xs:
                rep.instances += 1
                if not sym.sym_is_sg_open(SP, B | SP.fin({x})):
                    ok = False
        fr = sym.falsify(SP, samples=samples, seed=seed)
        rep.instances += fr.samples
        verdicts[SP.name]["falsifier"] = {"samples": fr.samples, "infinite": fr.infinite_samples, "contradictions": len(fr.contradictions)}
        if not fr.ok:
            ok = False
            rep.witness = {"space": SP.name, "contradictions": fr.contradictions[:5]}
    rep.evidence = verdicts
    rep.passed = ok


def _r1i_opc(rep: PropertyReport) -> None:
    SP = sym.ONE_POINT_COMPACT_DISCRETE_NAT
    w = sym.sym_cellular_witness(SP)
    c2 = sym.sym_is_C2(SP)
    ok = c2.value and w is not None
    members = [w.member(k) for k in range(100)] if w else []
    for i, m in enumerate(members):
        rep.instances += 1
        if not (sym.sym_is_open(SP, m) and not m.is_empty()):
            ok = False
        if i and not (m & members[i - 1]).is_empty():
            ok = False
    semi = sym.sym_is_semi_compact(SP)
    ok = ok and not semi
    rep.evidence = {"C2": c2.value, "cellular_family": w.description if w else None, "semi_compact": semi}
    rep.passed = ok


def _r2ii(rep: PropertyReport, seed: int) -> None:
    SP = sym.COFINITE_NAT
    c3 = sym.sym_is_C3(SP)
    ok = c3.value and sym.sym_is_sg_compact(SP)
    rng = random.Random(seed)
    for _ in range(200):
        S = SP.cof(rng.sample(range(50), rng.randint(0, 6)))
        rep.instances += 1
        ok = ok and sym.sym_is_C3(sym.sym_subspace(SP, S)).value
    rep.notes.append("hereditary part read as: every subspace sg-compact; finite subspaces are trivially so, infinite ones are cofinite-nat again")
    rep.evidence = {"C3": c3.value, "sg_compact": sym.sym_is_sg_compact(SP)}
    rep.passed = ok


def _e1i(rep: PropertyReport) -> None:
    SP = sym.INDISCRETE_PLUS_POINT
    A = SP.cof()
    regular = [U for U in SP.finite_opens() if sym.sym_is_regular_open(SP, U)]
    delta_part = SP.empty
    for R in regular:
        if R.issubset(A):
            delta_part = delta_part | R
    sub = sym.sym_subspace(SP, A)
    facts = {
        "X sg-compact": sym.sym_is_sg_compact(SP),
        "A open": sym.sym_is_open(SP, A),
        "A δ-open": delta_part == A,
        "subspace A": sub.name,
        "subspace A sg-compact": sym.sym_is_sg_compact(sub),
    }
    ok = facts["X sg-compact"] and facts["A open"] and not facts["A δ-open"] and not facts["subspace A sg-compact"]
    rep.instances = 5
    for k in range(2, 9):
        rep.instances += 1
        if spaces.subspace(spaces.e1_model(k), list(range(k))) != spaces.indiscrete(k):
            ok = False
    rep.notes.append("finite shadow: subspace A of e1_model(k) is indiscrete(k) for k = 2..8")
    rep.evidence = facts
    rep.passed = ok


def product_nd_sizes(ns: Iterable[int] = range(2, 9)) -> list[tuple[int, int, bool]]:
    out = []
    for n in ns:
        T = spaces.e1_model(n)
        P = spaces.product(T, T)
        a = (1 << n) - 1
        s = P.full & ~spaces.rectangle_bits(a, a, T.n)
        out.append((n, popcount(s), P.interior_bits(P.closure_bits(s)) == 0))
    return out


def _e1ii(rep: PropertyReport) -> None:
    rows = product_nd_sizes()
    sizes = [s for _, s, _ in rows]
    ok = all(nd and s == 2 * n + 1 for n, s, nd in rows) and all(x < y for x, y in zip(sizes, sizes[1:]))
    rep.instances = len(rows)
    rep.evidence = {"rows": [{"n": n, "size": s, "nowhere_dense": nd} for n, s, nd in rows]}
    rep.passed = ok
    if not ok:
        rep.witness = rep.evidence


def _l1(rep: PropertyReport) -> None:
    SP = sym.ONE_POINT_COMPACT_DISCRETE_NAT
    w = sym.sym_cellular_witness(SP)
    ok = sym.sym_is_C2(SP).value and w is not None and w.union_in_x2
    rep.instances = 1
    rep.evidence = {"family": w.description if w else None, "union": str(w.union) if w else None, "X2": str(sym.sym_decompose(SP).x2)}
    rep.passed = ok


def _l2i(rep: PropertyReport) -> None:
    rows = {}
    ok = True
    for SP in sym.ALL_SPACES:
        c3 = sym.sym_is_C3(SP).value
        semi = sym.sym_is_semi_compact(SP)
        rows[SP.name] = {"C3": c3, "sg_compact": sym.sym_is_sg_compact(SP), "semi_compact": semi}
        rep.instances += 1
        if c3 and not semi:
            ok = False
    rep.evidence = rows
    rep.passed = ok


def _invariance(max_n: int, rep: PropertyReport, seed: int, pairs: int = 1000) -> None:
    rng = random.Random(seed)
    top_n = min(max_n, 4)
    pool = [T for n in range(1, top_n + 1) for T in spaces.enumerate_topologies(n)]
    ok = True
    for _ in range(pairs):
        T = rng.choice(pool)
        perm = list(range(T.n))
        rng.shuffle(perm)
        U = spaces.relabel(T, perm)
        rep.instances += 1
        x1, x2 = pred.decompose_bits(T)
        good = pred.space_vector(T) == pred.space_vector(U)
        good = good and pred.decompose_bits(U) == (spaces.permute_bits(perm, x1), spaces.permute_bits(perm, x2))
        for a in range(1 << T.n):
            if pred.predicate_vector(T, a) != pred.predicate_vector(U, spaces.permute_bits(perm, a)):
                good = False
                break
        # relabeling is a homeomorphism onto U, hence pre-sg-continuous
        h = pred.PointMap(T.n, T.n, tuple(perm))
        good = good and pred.is_pre_sg_continuous(h, T, U)
        # pre-sg-continuity of a random map is unchanged by relabeling the codomain
        S = rng.choice(pool)
        f = pred.PointMap(S.n, T.n, tuple(rng.randrange(T.n) for _ in range(S.n)))
        g = pred.PointMap(S.n, T.n, tuple(perm[y] for y in f.images))
        good = good and pred.is_pre_sg_continuous(f, S, T) == pred.is_pre_sg_continuous(g, S, U)
        if not good:
            ok = False
            rep.witness = {"topology": T.to_json(), "perm": perm}
            break
    rep.universe = {"max_n": top_n, "pairs": pairs, "seed": seed}
    rep.passed = ok


SYMBOLIC_IDS = ("THM1_sym", "R1i_opc", "R2ii_cofinite", "E1_i_subspace", "E1_ii_product_nd", "L1_instance", "L2_i_sym")

CLAIM_IDS = (
    "P1_hsg_char",
    "SG_char_open",
    "SG_char_closed",
    "X2_subsets_sg_open",
    "R3_i_union_closed",
    "R3_ii_int_open",
    "R3_iii_counterexample",
    "INT_sg_closed_stable",
    "BL1_T3_transfer",
    "P4_regular_open_transfer",
    "C2_delta_open_transfer",
    "DP1_regular_open_iff",
    "SEMITD_coincide",
    "INDISCRETE_iff_hsg",
    "R2i_X1_full_coincide",
    "SG_implies_beta",
    "THM1_sym",
    "R1i_opc",
    "R2ii_cofinite",
    "E1_i_subspace",
    "E1_ii_product_nd",
    "L1_instance",
    "L2_i_sym",
    "TOPOLOGICAL_invariance",
)

_DESCRIPTIONS = {
    "R3_iii_counterexample": "union of two sg-closed sets need not be sg-closed (4-point witness); records the minimal violation",
    "THM1_sym": "sg-compact iff C3: cover construction, symbolic verdicts, C3 ⇒ C2, sampling falsifier",
    "R1i_opc": "one-point compactification of discrete ℕ is C2 with an infinite cellular family",
    "R2ii_cofinite": "cofinite ℕ is (hereditarily) sg-compact",
    "E1_i_subspace": "ℕ ∪ {p} with opens ∅, ℕ, X is sg-compact; its open non-δ-open subspace ℕ is not",
    "E1_ii_product_nd": "e1_model(n)² has X×X \\ A×A nowhere dense of size 2n+1, n = 2..8",
    "L1_instance": "C2 space with infinite cellular family: an infinite subfamily has union in X2",
    "L2_i_sym": "C3 ⇒ semi-compact on the symbolic catalog",
    "TOPOLOGICAL_invariance": "every predicate is equivariant under relabeling",
}


def verify_claim(claim_id: str, max_n: int = 4, seed: int = 0, samples: int = 10_000) -> PropertyReport:
    if claim_id not in CLAIM_IDS:
        raise UnknownClaim(claim_id)
    if not isinstance(max_n, int) or not 1 <= max_n <= DEFAULT_MAX_N:
        raise CarrierTooLarge(f"max_n must be in [1, {DEFAULT_MAX_N}], got {max_n}")
    t0 = time.perf_counter()
    if claim_id in FINITE_CLAIMS:
        claim = FINITE_CLAIMS[claim_id]
        total, counts, w = run_finite(claim, max_n)
        rep = PropertyReport(claim_id, claim.description, _universe(max_n), total, w is None, w)
        rep.universe["instances_per_n"] = counts
        if claim_id == "INDISCRETE_iff_hsg":
            rep.evidence = _indiscrete_split(max_n)
        elif claim_id == "R2i_X1_full_coincide":
            _r2i_symbolic(rep, seed)
    else:
        rep = PropertyReport(claim_id, _DESCRIPTIONS[claim_id], {}, 0, False)
        if claim_id in SYMBOLIC_IDS:
            rep.universe = {"symbolic": [SP.name for SP in sym.ALL_SPACES]}
        if claim_id == "R3_iii_counterexample":
            rep.universe = _universe(max_n)
            _r3iii(max_n, rep)
        elif claim_id == "THM1_sym":
            rep.universe.update(_universe(max_n))
            _thm1_sym(max_n, rep, seed, samples)
        elif claim_id == "R1i_opc":
            _r1i_opc(rep)
        elif claim_id == "R2ii_cofinite":
            _r2ii(rep, seed)
        elif claim_id == "E1_i_subspace":
            _e1i(rep)
        elif claim_id == "E1_ii_product_nd":
            rep.universe = {"e1_model_n": [2, 8]}
            _e1ii(rep)
        elif claim_id == "L1_instance":
            _l1(rep)
        elif claim_id == "L2_i_sym":
            _l2i(rep)
        elif claim_id == "TOPOLOGICAL_invariance":
            _invariance(max_n, rep, seed)
        if not rep.passed and rep.witness is None:
            rep.witness = {"claim": claim_id, "evidence": rep.evidence}
    rep.wall_time = round(time.perf_counter() - t0, 4)
    return rep


# -- counterexample search ----------------------------------------------------------


@dataclass
class CounterexampleRecord:
    target: str
    n: int
    topology: dict
    sets: list[list[int]]
    transcript: dict

    def to_dict(self) -> dict:
        return asdict(self)

    def replay(self) -> bool:
        """True iff the violation reproduces on a freshly validated topology."""
        T = FinTopology.from_json(self.topology)
        args = [sum(1 << x for x in s) for s in self.sets]
        return not TARGETS[self.target].holds(SpaceProfile(T), *args)


@dataclass(frozen=True)
class Target:
    name: str
    statement: str
    tuples: Callable[[SpaceProfile], Iterator[tuple]]
    holds: Callable[..., bool]


def _singles(P):
    return ((a,) for a in range(P.size))


def _ordered_pairs(P):
    return ((a, b) for a in range(P.size) for b in range(a, P.size))


def _all_pairs(P):
    return ((a, b) for a in range(P.size) for b in range(P.size))


def _open_sub(P):
    return ((r, a) for r in P.T.opens for a in range(P.size) if r and a & ~r == 0)


TARGETS: dict[str, Target] = {
    t.name: t
    for t in [
        Target(
            "union-of-two-sg-closed-sg-closed",
            "A, B sg-closed ⇒ A ∪ B sg-closed",
            _ordered_pairs,
            lambda P, a, b: not (P.sg_closed_def[a] and P.sg_closed_def[b]) or P.sg_closed_def[a | b],
        ),
        Target(
            "union-of-sg-closed-and-semi-closed-sg-closed",
            "A sg-closed, B semi-closed ⇒ A ∪ B sg-closed",
            _all_pairs,
            lambda P, a, b: not (P.sg_closed_def[a] and P.semi_closed[b]) or P.sg_closed_def[a | b],
        ),
        Target(
            "intersection-of-two-sg-open-sg-open",
            "A, B sg-open ⇒ A ∩ B sg-open",
            _ordered_pairs,
            lambda P, a, b: not (P.sg_open_def[a] and P.sg_open_def[b]) or P.sg_open_def[a & b],
        ),
        Target(
            "hsg-implies-nowhere-dense",
            "hsg-closed ⇒ nowhere dense",
            _singles,
            lambda P, a: not P.hsg_def[a] or P.interior[P.closure[a]] == 0,
        ),
        Target(
            "sg-open-implies-semi-open",
            "sg-open ⇒ semi-open",
            _singles,
            lambda P, a: not P.sg_open_def[a] or P.semi_open[a],
        ),
        Target(
            "sg-closed-implies-semi-closed",
            "sg-closed ⇒ semi-closed",
            _singles,
            lambda P, a: not P.sg_closed_def[a] or P.semi_closed[a],
        ),
        Target(
            "open-subspace-sg-open-transfer",
            "A ⊆ R open, A sg-open in R ⇒ A sg-open in X",
            _open_sub,
            _transfer_check,
        ),
    ]
}


def search_counterexample(target: str, max_n: int, count: bool = False):
    """First violation in order: ascending n, topology order, subset encoding.

    Returns the :class:`CounterexampleRecord` or ``None``; with ``count=True``
    returns ``(record, tuples_scanned)``.
    """
    if target not in TARGETS:
        raise UnknownTarget(target)
    if not isinstance(max_n, int) or not 1 <= max_n <= DEFAULT_MAX_N:
        raise CarrierTooLarge(f"max_n must be in [1, {DEFAULT_MAX_N}], got {max_n}")
    t = TARGETS[target]
    scanned = 0
    found = None
    for n in range(1, max_n + 1):
        for T in spaces.enumerate_topologies(n, allow_large=True):
            P = pred.profile(T)
            for args in t.tuples(P):
                scanned += 1
                if not t.holds(P, *args):
                    found = CounterexampleRecord(target, n, T.to_json(), [points_of(a) for a in args], _witness(FiniteClaim(target, t.statement, _singles, t.holds), T, args)["transcript"])
                    break
            if found:
                break
        if found:
            break
    return (found, scanned) if count else found


# -- suite ------------------------------------------------------------------------


MUTATIONS = {
    # sg-closed characterization without the X1 restriction (collapses to semi-closed)
    "sg_closed_ignores_x1": ("sg_closed_char_bits", lambda T, x1, a: T.interior_bits(T.closure_bits(a)) & ~a == 0),
    # hsg characterization with the closure dropped
    "hsg_drops_closure": ("hsg_closed_char_bits", lambda T, x1, a: x1 & T.interior_bits(a) == 0),
}


@contextlib.contextmanager
def mutated(name: Optional[str]):
    """Temporarily replace one characterization predicate (fault injection)."""
    if name is None:
        yield
        return
    if name not in MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}; expected one of {sorted(MUTATIONS)}")
    attr, fn = MUTATIONS[name]
    saved = getattr(pred, attr)
    setattr(pred, attr, fn)
    try:
        yield
    finally:
        setattr(pred, attr, saved)


@dataclass
class SuiteConfig:
    claims: Optional[list[str]] = None
    max_n: int = 4
    symbolic: bool = True
    workers: int = 1
    seed: int = 0
    samples: int = 10_000
    mutation: Optional[str] = None

    def selected(self) -> list[str]:
        ids = list(CLAIM_IDS) if not self.claims else list(self.claims)
        for c in ids:
            if c not in CLAIM_IDS:
                raise UnknownClaim(c)
        if not self.symbolic:
            ids = [c for c in ids if c not in SYMBOLIC_IDS]
        return ids

    def validate(self) -> None:
        if not isinstance(self.max_n, int) or not 1 <= self.max_n <= DEFAULT_MAX_N:
            raise CarrierTooLarge(f"max_n must be in [1, {DEFAULT_MAX_N}], got {self.max_n}")
        if self.workers < 1 or self.samples < 0:
            raise ValueError("workers must be >= 1 and samples >= 0")
        if self.mutation is not None and self.mutation not in MUTATIONS:
            raise ValueError(f"unknown mutation {self.mutation!r}")
        self.selected()


def _job(args) -> dict:
    claim_id, max_n, seed, samples, mutation = args
    with mutated(mutation):
        return verify_claim(claim_id, max_n, seed, samples).to_dict()


def run_suite(config: SuiteConfig) -> tuple[dict, int]:
    """Run the selected claims; returns the JSON-ready summary and the exit code."""
    config.validate()
    jobs = [(c, config.max_n, config.seed, config.samples, config.mutation) for c in config.selected()]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as ex:
            reports = list(ex.map(_job, jobs))
    else:
        reports = [_job(j) for j in jobs]
    passed = all(r["passed"] for r in reports)
    summary = {
        "schema_version": SCHEMA_VERSION,
        "backend": BACKEND,
        "config": {k: v for k, v in asdict(config).items() if k != "workers"},
        "passed": passed,
        "counts": {"claims": len(reports), "failed": sum(not r["passed"] for r in reports)},
        "reports": reports,
    }
    return summary, 0 if passed else 1


def dumps_report(summary: dict) -> str:
    return json.dumps(summary, indent=2, sort_keys=True, ensure_ascii=False, default=str)


def render_text(summary: dict) -> str:
    lines = []
    for r in summary["reports"]:
        mark = "PASS" if r["passed"] else "FAIL"
        lines.append(f"{mark}  {r['claim']:<26} instances={r['instances']:<8} {r['description']}")
    c = summary["counts"]
    lines.append(f"{c['claims'] - c['failed']}/{c['claims']} claims passed")
    return "\n".join(lines)
