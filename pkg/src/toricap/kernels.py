"""Backend selection for the integer hot loops.

The compiled extension is used when it imported and every intermediate
value provably fits in 62 bits; otherwise the pure-Python code runs on
arbitrary-precision ints.  Set ``TORICAP_PURE_PYTHON=1`` to force the
fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("TORICAP_PURE_PYTHON"):
        raise ImportError("pure-Python backend forced by environment")
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_LIMIT = 1 << 62


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def _module(backend: str | None, bound: int):
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        if bound >= _LIMIT:
            raise OverflowError("values exceed the 64-bit kernel range")
        return _ckernels
    if _ckernels is not None and bound < _LIMIT:
        return _ckernels
    return _pykernels


ball_multiplier = _pykernels.ball_multiplier
multiplier_table = _pykernels.multiplier_table


def union_table(weights: list[int], n: int, backend: str | None = None) -> list[int]:
    bound = (ball_multiplier(n) + 1) * (sum(weights) + 1)
    return _module(backend, bound).union_table(weights, n)


def scan_infimum(r: int, union: list[int], kmax: int, backend: str | None = None):
    L = len(union) - 1
    bound = r * (ball_multiplier(kmax + L) + 1) + max(union, default=0) + 1
    return _module(backend, bound).scan_infimum(r, union, kmax)
