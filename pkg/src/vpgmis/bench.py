"""Wall-time sweeps of the solver over growing random instances."""
from __future__ import annotations

import gc
import math
import time
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .generator import GenConfig, generate
from .solver import solve

DEFAULT_SIZES = (10_000, 20_000, 40_000, 80_000)


@dataclass
class BenchRow:
    n: int
    seconds: float
    size: int


def bench_config(n: int, mode: str = "equilateral", seed: int = 1, density: float = 16.0) -> GenConfig:
    # constant expected shapes per unit area: side grows like sqrt(n)
    side = max(8, math.ceil(math.sqrt(n * density)))
    return GenConfig(n=n, seed=seed, mode=mode, length_range=(1, 8), coordinate_range=(0, side))


def run_bench(sizes: Sequence[int] = DEFAULT_SIZES, mode: str = "equilateral", seed: int = 1,
              repeat: int = 3, backend: str | None = None) -> list[BenchRow]:
    """Best-of-``repeat`` solve time per size; generation is not timed, the collector is paused.

    Repeats run round-robin over the sizes, so a burst of load from elsewhere on
    the machine slows one sample of several sizes rather than every sample of one.
    """
    instances = [generate(bench_config(n, mode, seed)) for n in sizes]
    best = [math.inf] * len(sizes)
    found = [0] * len(sizes)
    with kernels.using_backend(backend or kernels.backend()):
        for _ in range(repeat):
            for k, shapes in enumerate(instances):
                # like timeit: keep collector pauses out of the measurement
                gc_was_enabled = gc.isenabled()
                gc.disable()
                try:
                    t0 = time.perf_counter()
                    sol = solve(shapes, "auto")
                    best[k] = min(best[k], time.perf_counter() - t0)
                finally:
                    if gc_was_enabled:
                        gc.enable()
                found[k] = len(sol)
    return [BenchRow(n, t, size) for n, t, size in zip(sizes, best, found)]


def growth_factors(rows: Sequence[BenchRow]) -> list[float]:
    return [b.seconds / a.seconds for a, b in zip(rows, rows[1:])]
