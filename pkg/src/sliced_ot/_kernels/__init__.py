"""Sweep-kernel backend selection.

The compiled Cython kernels are used when the extension built; otherwise the
numpy implementations take over.  ``SLICED_OT_KERNELS=numpy`` forces the
fallback, ``SLICED_OT_KERNELS=compiled`` makes a missing extension an error.
The gradient kernel has no compiled variant (it is never the hot path).
"""

import os

from . import _numpy

grad_general = _numpy.grad_general

_requested = os.environ.get("SLICED_OT_KERNELS", "").strip().lower()

if _requested not in ("", "numpy", "compiled"):
    raise ValueError(f"SLICED_OT_KERNELS must be 'numpy' or 'compiled', got {_requested!r}")

if _requested == "numpy":
    BACKEND = "numpy"
    pp_equal = _numpy.pp_equal
    pp_general = _numpy.pp_general
else:
    try:
        from . import _sweeps

        BACKEND = "compiled"
        pp_equal = _sweeps.pp_equal
        pp_general = _sweeps.pp_general
    except ImportError:
        if _requested == "compiled":
            raise
        BACKEND = "numpy"
        pp_equal = _numpy.pp_equal
        pp_general = _numpy.pp_general
