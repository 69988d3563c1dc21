"""Backend selection for the exact-search kernels.

Prefers the compiled Cython extension; falls back to the pure-Python twin
when the extension is unavailable or when SHALLOWHIT_PURE is set in the
environment.  Both backends implement identical searches and return
identical results.
"""

import os

from . import _exact_py

SAT = _exact_py.SAT
UNSAT = _exact_py.UNSAT
GAVE_UP = _exact_py.GAVE_UP

if os.environ.get("SHALLOWHIT_PURE"):
    _impl = _exact_py
    BACKEND = "python"
else:
    try:
        from . import _exact as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _exact_py
        BACKEND = "python"

shallow_hitting = _impl.shallow_hitting
max_shallow = _impl.max_shallow

__all__ = ["shallow_hitting", "max_shallow", "BACKEND", "SAT", "UNSAT", "GAVE_UP"]
