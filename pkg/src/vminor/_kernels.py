"""Kernel backend selection.

At import time the compiled extension is preferred when present; setting the
environment variable VMINOR_PURE_PYTHON (to any non-empty value) forces the
pure-Python kernels.  The compiled kernels handle at most 64 positions, so
wider inputs are routed to the pure implementation transparently.

set_backend/get_backend exist for benchmarks and cross-backend tests.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pykernels

__all__ = [
    "lc_rows",
    "pivot_rows",
    "gf2_rank",
    "induced_rows",
    "get_backend",
    "set_backend",
    "available_backends",
]

_MAX_COMPILED = 64

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

if os.environ.get("VMINOR_PURE_PYTHON") or _ckernels is None:
    _impl = _pykernels
else:
    _impl = _ckernels


def available_backends() -> tuple[str, ...]:
    if _ckernels is None:
        return ("python",)
    return ("python", "cython")


def get_backend() -> str:
    return _impl.BACKEND_NAME


def set_backend(name: str) -> None:
    """Switch kernels at runtime ('python' or 'cython')."""
    global _impl
    if name == "python":
        _impl = _pykernels
    elif name == "cython":
        if _ckernels is None:
            raise ValueError("compiled kernels are not available in this install")
        _impl = _ckernels
    else:
        raise ValueError(f"unknown kernel backend: {name!r}")


def lc_rows(rows: Sequence[int], v: int) -> tuple[int, ...]:
    if _impl is not _pykernels and len(rows) > _MAX_COMPILED:
        return _pykernels.lc_rows(rows, v)
    return _impl.lc_rows(rows, v)


def pivot_rows(rows: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    if _impl is not _pykernels and len(rows) > _MAX_COMPILED:
        return _pykernels.pivot_rows(rows, u, v)
    return _impl.pivot_rows(rows, u, v)


def gf2_rank(rows: Sequence[int]) -> int:
    if _impl is not _pykernels:
        if len(rows) > _MAX_COMPILED or any(r >> _MAX_COMPILED for r in rows):
            return _pykernels.gf2_rank(rows)
    return _impl.gf2_rank(rows)


def induced_rows(rows: Sequence[int], keep: Sequence[int]) -> tuple[int, ...]:
    if _impl is not _pykernels and len(rows) > _MAX_COMPILED:
        return _pykernels.induced_rows(rows, keep)
    return _impl.induced_rows(rows, keep)
