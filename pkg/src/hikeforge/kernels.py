"""Kernel dispatch: compiled extension when importable, Python otherwise.

Set ``HIKEFORGE_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names
the active implementation.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _kernels_py as _py

_MASK_LIMIT = 1 << 64

try:
    if os.environ.get("HIKEFORGE_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python forced")
    from . import _kernels as _ext  # type: ignore[attr-defined]
except ImportError:
    _ext = None

BACKEND = "cython" if _ext is not None else "python"


def stack_levels(masks: Sequence[int]) -> list[int]:
    if _ext is not None and all(m < _MASK_LIMIT for m in masks):
        return _ext.stack_levels(masks)
    return _py.stack_levels(masks)


def order_ideals(pred: Sequence[int]) -> list[int]:
    if _ext is not None and len(pred) < 64:
        return _ext.order_ideals(pred)
    return _py.order_ideals(pred)


def ryser_perm_poly(rows: Sequence[int], n: int) -> list[int]:
    # int64 holds every coefficient of perm(I + uA) only while n! fits
    if _ext is not None and n <= 20:
        return _ext.ryser_perm_poly(rows, n)
    return _py.ryser_perm_poly(rows, n)
