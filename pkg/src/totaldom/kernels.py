"""Kernel backend selection.

The compiled extension covers graphs on up to 64 vertices; the pure-Python
twin covers everything and is used whenever the extension is missing, the
graph is too wide, or ``TOTALDOM_BACKEND=pure`` is set.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _kernels = None

HAVE_COMPILED = _kernels is not None


def kernel_for(n: int, *, length: int | None = None):
    """Pick the kernel module for a graph on n vertices."""
    if os.environ.get("TOTALDOM_BACKEND", "").lower() == "pure":
        return _pykernels
    if _kernels is not None and n <= 64 and (length is None or length <= 63):
        return _kernels
    return _pykernels


def memo_entries(module, memo_limit_bytes: int) -> int:
    """Translate a byte budget into the module's memo entry budget."""
    return max(1, memo_limit_bytes // module.MEMO_ENTRY_BYTES)
