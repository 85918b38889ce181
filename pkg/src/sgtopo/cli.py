"""Command-line front end.

Exit codes: 0 pass / nothing found, 1 claim violation or counterexample found,
2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import harness, spaces, symbolic as sym
from .core import DEFAULT_MAX_N, FinTopology, PtSet, TopologyError, classify_set
from .predicates import decompose, is_hsg_closed, is_sg_closed, is_sg_open, is_semi_TD


class InputError(Exception):
    pass


def _parse_set(text: str, n: int) -> PtSet:
    body = text.strip().strip("{}[]").strip()
    try:
        pts = [int(t) for t in body.replace(" ", ",").split(",") if t]
    except ValueError:
        raise InputError(f"cannot parse set {text!r}; expected e.g. 0,2 or {{0,2}}") from None
    return PtSet.of(n, pts)


def _load_space(arg: str) -> FinTopology:
    if os.path.exists(arg):
        with open(arg) as fh:
            return FinTopology.from_json(fh.read(), max_n=spaces.CATALOG_MAX_N)
    return spaces.parse_space(arg)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False, default=str))


def cmd_classify(ns) -> int:
    T = _load_space(ns.space)
    A = _parse_set(ns.set, T.n)
    d = decompose(T)
    out = {
        "space": T.to_json(),
        "set": sorted(A.members),
        "X1": sorted(d.x1.members),
        "X2": sorted(d.x2.members),
        "semi_TD": is_semi_TD(T),
        "classes": classify_set(T, A).as_dict(),
        "sg_closed": is_sg_closed(T, A),
        "sg_open": is_sg_open(T, A),
        "hsg_closed": is_hsg_closed(T, A),
    }
    _emit(out)
    return 0


def _suite_config(ns, claims) -> harness.SuiteConfig:
    return harness.SuiteConfig(
        claims=claims,
        max_n=ns.max_n,
        symbolic=not getattr(ns, "no_symbolic", False),
        workers=ns.workers,
        seed=ns.seed,
        samples=ns.samples,
        mutation=ns.mutation,
    )


def _write(summary: dict, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(harness.dumps_report(summary) + "\n")


def cmd_verify(ns) -> int:
    if not ns.all and not ns.claim:
        raise InputError("verify needs --claim ID or --all")
    summary, code = harness.run_suite(_suite_config(ns, None if ns.all else ns.claim))
    _write(summary, ns.out)
    print(harness.dumps_report(summary) if ns.json else harness.render_text(summary))
    return code


def cmd_report(ns) -> int:
    summary, code = harness.run_suite(_suite_config(ns, ns.claim))
    _write(summary, ns.out)
    print(harness.dumps_report(summary) if ns.format == "json" else harness.render_text(summary))
    return code


def cmd_search(ns) -> int:
    rec = harness.search_counterexample(ns.target, ns.max_n)
    if rec is None:
        _emit({"target": ns.target, "max_n": ns.max_n, "found": False})
        return 0
    _emit({"target": ns.target, "max_n": ns.max_n, "found": True, "record": rec.to_dict()})
    return 1


def cmd_enumerate(ns) -> int:
    mode = spaces.EnumerationMode.UP_TO_HOMEOMORPHISM if ns.dedup else spaces.EnumerationMode.LABELED
    if ns.count:
        _emit({"n": ns.n, "mode": mode.value, "count": spaces.count_topologies(ns.n, mode, allow_large=ns.allow_large)})
    else:
        for T in spaces.enumerate_topologies(ns.n, mode, allow_large=ns.allow_large):
            print(T.dumps())
    return 0


_SET_OPS = {
    "interior": sym.sym_interior,
    "closure": sym.sym_closure,
    "semi-interior": sym.sym_semi_interior,
    "semi-closure": sym.sym_semi_closure,
    "complement": lambda SP, A: A.complement(),
}
_PRED_OPS = {
    "open": sym.sym_is_open,
    "regular-open": sym.sym_is_regular_open,
    "nowhere-dense": sym.sym_is_nowhere_dense,
    "sg-closed": sym.sym_is_sg_closed,
    "sg-open": sym.sym_is_sg_open,
    "hsg-closed": sym.sym_is_hsg_closed,
}
_SPACE_OPS = ("decompose", "C2", "C3", "sg-compact", "semi-compact", "cellular")


def cmd_sym(ns) -> int:
    SP = sym.sym_space(ns.space)
    op = ns.op
    if op in _SET_OPS or op in _PRED_OPS:
        if ns.set is None:
            raise InputError(f"--op {op} needs --set")
        A = sym.parse_symset(ns.set, SP)
        if op in _SET_OPS:
            _emit({"space": SP.name, "op": op, "set": str(A), "result": str(_SET_OPS[op](SP, A))})
        else:
            _emit({"space": SP.name, "op": op, "set": str(A), "result": _PRED_OPS[op](SP, A)})
        return 0
    if op == "decompose":
        d = sym.sym_decompose(SP)
        _emit({"space": SP.name, "X1": str(d.x1), "X2": str(d.x2)})
    elif op in ("C2", "C3"):
        v = (sym.sym_is_C2 if op == "C2" else sym.sym_is_C3)(SP)
        _emit({"space": SP.name, "op": op, "value": v.value, "witness": None if v.witness is None else str(v.witness), "justification": v.justification})
    elif op == "sg-compact":
        _emit({"space": SP.name, "op": op, "value": sym.sym_is_sg_compact(SP)})
    elif op == "semi-compact":
        _emit({"space": SP.name, "op": op, "value": sym.sym_is_semi_compact(SP)})
    elif op == "cellular":
        w = sym.sym_cellular_witness(SP)
        _emit({"space": SP.name, "op": op, "infinite_family": None if w is None else w.description})
    return 0


def _suite_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--no-symbolic", action="store_true", help="skip symbolic-catalog claims")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10_000, help="falsifier samples per symbolic family")
    p.add_argument("--mutation", choices=sorted(harness.MUTATIONS), help="inject a faulty characterization (testing hook)")
    p.add_argument("--out", help="also write the JSON report to this file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sgtopo", description="sg-closed sets and sg-compactness on finite and symbolic spaces")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one subset of a finite space")
    p.add_argument("--space", required=True, help="JSON file or catalog name such as p4, e1:3, discrete:2")
    p.add_argument("--set", required=True, help="points, e.g. 0,2")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify", help="verify claims over enumerated and symbolic spaces")
    p.add_argument("--claim", action="append", choices=harness.CLAIM_IDS)
    p.add_argument("--all", action="store_true")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    _suite_args(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="find the first counterexample to a false universal")
    p.add_argument("--target", required=True, choices=sorted(harness.TARGETS))
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("enumerate", help="list or count topologies on n points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--dedup", action="store_true", help="one representative per homeomorphism class")
    p.add_argument("--allow-large", action="store_true", help=f"permit n = {DEFAULT_MAX_N}")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("sym", help="operators and verdicts on the countable catalog")
    p.add_argument("--space", required=True, choices=sorted(sym.SPACE_NAMES))
    p.add_argument("--op", required=True, choices=list(_SET_OPS) + list(_PRED_OPS) + list(_SPACE_OPS))
    p.add_argument("--set", help='e.g. "cof{0,3}+p" or "fin{1,2}"')
    p.set_defaults(fn=cmd_sym)

    p = sub.add_parser("report", help="run the suite and print a report")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--claim", action="append", choices=harness.CLAIM_IDS, help="restrict to these claims")
    _suite_args(p)
    p.set_defaults(fn=cmd_report)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return ns.fn(ns)
    except (InputError, TopologyError, harness.UnknownClaim, harness.UnknownTarget, sym.NotRepresentable, ValueError, KeyError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
