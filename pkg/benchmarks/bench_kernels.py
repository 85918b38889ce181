"""Compiled vs pure-Python kernels on the exhaustive-sweep workloads.

Run: python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import timeit

from sgtopo import kernels, spaces


def _workloads(backend):
    tops = [T for n in range(1, 5) for T in spaces.enumerate_topologies(n)]
    big = list(spaces.enumerate_topologies(5, allow_large=True))[::50]
    tables = [(T.n, backend.operator_tables(T.n, T.min_nbhd)) for T in tops + big]

    def operators():
        for T in tops + big:
            backend.operator_tables(T.n, T.min_nbhd)

    def oracles():
        for n, (it, ct) in tables:
            backend.semi_oracle_tables(n, it, ct)

    def definitional():
        for n, (it, ct) in tables:
            backend.definitional_tables(n, it, ct)

    def preorders():
        backend.enumerate_preorders(5)

    return {"operator tables": operators, "semi oracles": oracles, "definitional sweep": definitional, "preorders n=5": preorders}


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled is None:
        print("compiled extension not built; only the pure backend is available")
    backends = [("python", kernels.pure)] + ([("cython", kernels.compiled)] if kernels.compiled else [])
    results = {}
    for name, mod in backends:
        for label, fn in _workloads(mod).items():
            results[(label, name)] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    print(f"{'workload':<22}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for label in _workloads(kernels.pure):
        py = results[(label, "python")]
        cy = results.get((label, "cython"))
        cols = f"{py:>12.4f}" + (f"{cy:>12.4f}{py / cy:>9.1f}x" if cy else f"{'-':>12}{'-':>10}")
        print(f"{label:<22}{cols}")


if __name__ == "__main__":
    main()
