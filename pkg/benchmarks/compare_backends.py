"""Compare the pure-Python and compiled kernel backends.

Times every kernel in isolation on fixed random inputs, then the full
solver on growing instances, and prints one ``key = value`` line per
measurement plus the compiled speedup.

    python benchmarks/compare_backends.py [--repeat 3] [--sizes 10000,20000,40000,80000]
"""
from __future__ import annotations

import argparse
import random
import sys
import timeit

from vpgmis import kernels
from vpgmis.bench import DEFAULT_SIZES, growth_factors, run_bench


def kernel_cases(seed: int = 7):
    rng = random.Random(seed)

    def shapes(n, side):
        xc = [rng.randrange(side) for _ in range(n)]
        yc = [rng.randrange(side) for _ in range(n)]
        xh = [x + rng.randint(1, 16) for x in xc]
        yv = [y + rng.randint(1, 16) for y in yc]
        return xc, yc, xh, yv

    dense = shapes(1500, 200)
    big = shapes(200_000, 4000)
    perm = list(range(500_000))
    rng.shuffle(perm)
    box = [[rng.randrange(300) for _ in range(200_000)] for _ in range(2)] + [big[0], big[1]]
    masks = kernels._pure.conflict_masks(*shapes(48, 40))
    return {
        "conflict_masks_n1500": lambda: kernels.conflict_masks(*dense),
        "lis_positions_n500000": lambda: kernels.lis_positions(perm),
        "grid_cells_n200000": lambda: kernels.grid_cells(*big, 1, 1, False),
        "box_lis_n200000": lambda: kernels.box_lis(*box),
        "max_independent_set_n48": lambda: kernels.max_independent_set(masks),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", default=",".join(map(str, DEFAULT_SIZES)))
    ap.add_argument("--mode", default="equilateral")
    args = ap.parse_args(argv)
    if not kernels.COMPILED_AVAILABLE:
        print("compiled = unavailable (build with `pip install -e . --no-build-isolation`)")
        return 1
    sizes = [int(s) for s in args.sizes.split(",") if s]

    for name, fn in kernel_cases().items():
        t = {}
        for be in ("pure", "compiled"):
            with kernels.using_backend(be):
                t[be] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            print(f"{name}_{be}_seconds = {t[be]:.4f}")
        print(f"{name}_speedup = {t['pure'] / t['compiled']:.1f}")

    totals = {}
    for be in ("pure", "compiled"):
        rows = run_bench(sizes, args.mode, seed=1, repeat=args.repeat, backend=be)
        for row in rows:
            print(f"solve_{row.n}_{be}_seconds = {row.seconds:.4f}")
        print(f"solve_{be}_max_growth = {max(growth_factors(rows), default=1.0):.3f}")
        totals[be] = rows[-1].seconds
    print(f"solve_{sizes[-1]}_speedup = {totals['pure'] / totals['compiled']:.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
