"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. Set ``SGTOPO_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _pykernels

pure = _pykernels

if os.environ.get("SGTOPO_PURE_PYTHON", "") not in ("", "0"):
    compiled = None
else:
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

backend = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

# carriers above this size skip whole-table kernels and use per-set loops
TABLE_MAX_N = 12

operator_tables = backend.operator_tables
semi_oracle_tables = backend.semi_oracle_tables
definitional_tables = backend.definitional_tables
enumerate_preorders = backend.enumerate_preorders

__all__ = [
    "BACKEND",
    "TABLE_MAX_N",
    "compiled",
    "pure",
    "operator_tables",
    "semi_oracle_tables",
    "definitional_tables",
    "enumerate_preorders",
]
