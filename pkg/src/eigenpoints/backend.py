"""Kernel backend selection.

The elimination engine's inner loops live in ``_kernel_py`` (pure Python)
and, when the optional extension was built, in ``_kernel`` (Cython).  The
compiled twin wins unless EIGENPOINTS_PURE_PYTHON is set.
"""

from __future__ import annotations

import os

if os.environ.get("EIGENPOINTS_PURE_PYTHON"):
    from . import _kernel_py as kernel
else:
    try:
        from . import _kernel as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as kernel


def backend_name() -> str:
    return kernel.BACKEND_NAME
