"""Selects the modular linear-algebra kernels at import time.

The compiled extension is preferred when present; ``GSRING_PURE_PYTHON=1``
in the environment forces the numpy fallback (useful for benchmarking and
for debugging the kernels against each other).
"""

from __future__ import annotations

import os

from gsring import _modkern_py

if os.environ.get("GSRING_PURE_PYTHON") == "1":
    _impl = _modkern_py
else:
    try:
        from gsring import _modkern as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _modkern_py

rref_mod = _impl.rref_mod
reduce_rows_mod = _impl.reduce_rows_mod


def backend_name() -> str:
    return _impl.BACKEND_NAME


def available_backends():
    """Map of loadable backend names to their modules (for benchmarks)."""
    out = {_modkern_py.BACKEND_NAME: _modkern_py}
    try:
        from gsring import _modkern

        out[_modkern.BACKEND_NAME] = _modkern
    except ImportError:
        pass
    return out
