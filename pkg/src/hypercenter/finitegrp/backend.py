"""Kernel backend selection.

Set HYPERCENTER_NO_NUMBA=1 to force the pure numpy kernels; otherwise
the jitted versions are used when numba imports successfully.
"""

from __future__ import annotations

import os

from . import kernels_numpy

if os.environ.get("HYPERCENTER_NO_NUMBA"):
    kernels = kernels_numpy
    BACKEND = "numpy"
else:
    try:
        from . import kernels_numba as kernels  # type: ignore[no-redef]

        BACKEND = "numba"
    except ImportError:
        kernels = kernels_numpy
        BACKEND = "numpy"
