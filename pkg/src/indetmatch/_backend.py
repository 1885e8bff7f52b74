"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the
pure-Python kernels take over with identical behaviour (only slower).
Set ``INDETMATCH_PURE_PYTHON=1`` to force the fallback, e.g. to compare
backends or to debug.
"""

from __future__ import annotations

import os
import warnings

from . import _pykernels

if os.environ.get("INDETMATCH_PURE_PYTHON"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels  # type: ignore[no-redef]
    except ImportError:
        warnings.warn(
            "indetmatch: compiled kernels unavailable, falling back to pure Python "
            "(searches will be noticeably slower)",
            RuntimeWarning,
            stacklevel=2,
        )
        kernels = _pykernels

BACKEND: str = kernels.BACKEND
