"""Backend selection for the hot kernels.

The compiled extension (``vpgmis._core``) is used when it imports and the
environment variable ``VPGMIS_BACKEND`` is not ``pure``.  Inputs that do not
fit in int64 (or graphs above 64 vertices for the exact search) are routed to
the pure-Python kernels regardless of the active backend.
"""
from __future__ import annotations

import contextlib
import os
from array import array
from typing import Iterator, Optional, Sequence

from . import _pure

try:
    from . import _core as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1

COMPILED_AVAILABLE = _compiled is not None


def _initial_backend() -> str:
    requested = os.environ.get("VPGMIS_BACKEND", "auto").strip().lower()
    if requested == "pure" or not COMPILED_AVAILABLE:
        return "pure"
    return "compiled"


_backend = _initial_backend()


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name == "auto":
        name = "compiled" if COMPILED_AVAILABLE else "pure"
    if name not in ("pure", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and not COMPILED_AVAILABLE:
        raise RuntimeError("compiled kernels are not built; run `python setup.py build_ext --inplace`")
    _backend = name


@contextlib.contextmanager
def using_backend(name: str) -> Iterator[None]:
    previous = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _fits(*columns: Sequence[int]) -> bool:
    for col in columns:
        if col and (min(col) < _INT64_MIN or max(col) > _INT64_MAX):
            return False
    return True


def _q(col: Sequence[int]) -> array:
    return col if isinstance(col, array) else array("q", col)


def lis_positions(seq: Sequence[int]) -> list[int]:
    if _backend == "compiled" and _fits(seq):
        return _compiled.lis_positions(_q(seq))
    return _pure.lis_positions(seq)


def segment_lis(values: Sequence[int], bounds: Sequence[int]) -> list[int]:
    if _backend == "compiled" and _fits(values):
        return _compiled.segment_lis(_q(values), bounds)
    return _pure.segment_lis(values, bounds)


def conflict_masks(xc, yc, xh, yv) -> list[int]:
    if _backend == "compiled" and _fits(xc, yc, xh, yv):
        return _compiled.conflict_masks(_q(xc), _q(yc), _q(xh), _q(yv))
    return _pure.conflict_masks(xc, yc, xh, yv)


def first_conflict(xc, yc, xh, yv) -> Optional[tuple[int, int]]:
    if _backend == "compiled" and _fits(xc, yc, xh, yv):
        return _compiled.first_conflict(_q(xc), _q(yc), _q(xh), _q(yv))
    return _pure.first_conflict(xc, yc, xh, yv)


def max_independent_set(masks: Sequence[int]) -> int:
    if _backend == "compiled" and len(masks) <= 64:
        return _compiled.max_independent_set(list(masks))
    return _pure.max_independent_set(masks)


def grid_cells(xc, yc, xh, yv, den_x: int, den_y: int, tie_buckets: bool):
    if _backend == "compiled" and _fits(xc, yc, xh, yv, [den_x, den_y]):
        return _compiled.grid_cells(_q(xc), _q(yc), _q(xh), _q(yv), den_x, den_y, tie_buckets)
    return _pure.grid_cells(xc, yc, xh, yv, den_x, den_y, tie_buckets)


def box_lis(r, c, x, y) -> list[int]:
    if _backend == "compiled" and _fits(r, c, x, y):
        return _compiled.box_lis(_q(r), _q(c), _q(x), _q(y))
    return _pure.box_lis(r, c, x, y)
