"""Selects the kernel backend at import time.

The compiled extension is preferred; set NBHDCLUST_PURE_PYTHON=1 to force
the pure-Python reference kernels (used by the benchmark and as a fallback
when the extension was not built).
"""

import os

if os.environ.get("NBHDCLUST_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels_c as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]


def implementation() -> str:
    """Name of the active kernel backend: "compiled" or "python"."""
    return kernels.IMPLEMENTATION
