"""Kernel backend selection.

The compiled Cython kernel is preferred when it was built; otherwise the
NumPy fallback is used.  Set HGTENSOR_PURE_PYTHON=1 to force the
fallback (benchmarking, debugging).
"""

from __future__ import annotations

import os

if os.environ.get("HGTENSOR_PURE_PYTHON"):
    from hgtensor import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from hgtensor import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from hgtensor import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

apply_coords = _impl.apply_coords
