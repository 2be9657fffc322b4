"""Kernel backend selection.

Set TRIARRAY_BACKEND=numpy to force the pure-numpy path, =numba to require
the jit path (falls back with a warning if numba is missing), or leave unset
for auto-detection. The numba kernels compile lazily; call ``warmup()``
before timing anything.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

_requested = os.environ.get("TRIARRAY_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    warnings.warn(f"unknown TRIARRAY_BACKEND={_requested!r}, using auto")
    _requested = "auto"

if _requested in ("auto", "numba"):
    try:
        from . import numba_impl as _impl
        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            warnings.warn("TRIARRAY_BACKEND=numba but numba is not importable; using numpy")
        from . import numpy_impl as _impl
        BACKEND = "numpy"
else:
    from . import numpy_impl as _impl
    BACKEND = "numpy"

quotient_counts = _impl.quotient_counts
diffset_batch_mask = _impl.diffset_batch_mask
common_counts = _impl.common_counts
convolve = _impl.convolve


def warmup() -> str:
    """Trigger jit compilation (no-op on the numpy backend); returns the backend name."""
    table = np.array([[0, 1], [1, 0]], dtype=np.int16)
    inverse = np.array([0, 1], dtype=np.int16)
    members = np.array([0, 1], dtype=np.int64)
    quotient_counts(table, inverse, members, 0)
    diffset_batch_mask(table, inverse, members.reshape(1, 2), 2)
    ones = np.ones((2, 2), dtype=np.uint8)
    common_counts(ones, ones)
    convolve(table, members, members)
    return BACKEND
