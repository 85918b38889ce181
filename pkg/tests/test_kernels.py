from __future__ import annotations

import os
import subprocess
import sys

import pytest

from sgtopo import kernels, spaces
from sgtopo.core import submasks, supermasks

needs_compiled = pytest.mark.skipif(kernels.compiled is None, reason="compiled extension not built")


def _tables(T):
    return kernels.pure.operator_tables(T.n, T.min_nbhd)


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.backend is (kernels.compiled if kernels.BACKEND == "cython" else kernels.pure)


def test_pure_python_override():
    code = "from sgtopo import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, SGTOPO_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_oracle_tables_match_closed_forms():
    for n in range(1, 5):
        for T in spaces.enumerate_topologies(n):
            it, ct = _tables(T)
            sint, scl = kernels.pure.semi_oracle_tables(n, it, ct)
            for a in range(1 << n):
                assert sint[a] == a & ct[it[a]]
                assert scl[a] == a | it[ct[a]]


def test_pure_preorders_match_brute_force():
    # brute force: every reflexive transitive relation on 3 points
    n = 3
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    count = 0
    for mask in range(1 << len(pairs)):
        rel = {(i, i) for i in range(n)} | {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
        if all((a, d) in rel for a, b in rel for c, d in rel if b == c):
            count += 1
    assert len(kernels.pure.enumerate_preorders(n)) == count


@needs_compiled
def test_backends_agree():
    for n in range(1, 6):
        assert kernels.pure.enumerate_preorders(n) == kernels.compiled.enumerate_preorders(n)
    for n in range(1, 5):
        for T in spaces.enumerate_topologies(n):
            mn = T.min_nbhd
            pt = kernels.pure.operator_tables(n, mn)
            ct = kernels.compiled.operator_tables(n, mn)
            assert list(pt[0]) == list(ct[0]) and list(pt[1]) == list(ct[1])
            assert [list(x) for x in kernels.pure.semi_oracle_tables(n, *pt)] == [list(x) for x in kernels.compiled.semi_oracle_tables(n, *pt)]
            assert [list(map(bool, x)) for x in kernels.pure.definitional_tables(n, *pt)] == [
                list(map(bool, x)) for x in kernels.compiled.definitional_tables(n, *pt)
            ]


def test_mask_iterators():
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]
    assert sorted(supermasks(0b101, 0b111)) == [5, 7]
