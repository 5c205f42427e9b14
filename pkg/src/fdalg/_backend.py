"""Kernel backend selection.

The compiled extension is preferred; the numpy twin is used when the
extension is unavailable or when ``FDALG_PURE_PYTHON=1`` is set.  Both
expose the same ``rref_inplace`` contract.
"""

import os

if os.environ.get("FDALG_PURE_PYTHON") == "1":
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _corekernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

rref_inplace = _impl.rref_inplace
