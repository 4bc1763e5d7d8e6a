"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import kernels
from .bench import DEFAULT_SIZES, growth_factors, run_bench
from .errors import VPGError
from .generator import MODES, GenConfig, generate
from .geometry import Instance, format_instance, parse_rational, read_instance
from .oracle import brute_force_mis, build_conflict_graph, default_cap, first_violation
from .render import render_svg
from .report import RunReport
from .solver import solve

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CLIError(Exception):
    pass


def read_solution(path: str, n: int) -> list[int]:
    indices = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            idx = int(line)
        except ValueError:
            raise CLIError(f"{path}: line {lineno}: not an index: {line!r}") from None
        if not 0 <= idx < n:
            raise CLIError(f"{path}: line {lineno}: index {idx} out of range for {n} shapes")
        indices.append(idx)
    return indices


def format_solution(indices: Sequence[int]) -> str:
    return "".join(f"{k}\n" for k in sorted(indices))


def _range(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    try:
        return parse_rational(lo), parse_rational(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sizes(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok]


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    inst = Instance(read_instance(args.instance))
    t0 = time.perf_counter()
    sol = solve(inst, args.variant)
    elapsed = time.perf_counter() - t0
    timing = {} if args.no_timing else {"wall_time_s": elapsed, "backend": kernels.backend()}
    report = RunReport.from_solution(inst, sol, **timing)
    if args.out:
        Path(args.out).write_text(format_solution(sol.indices))
    text = report.to_text()
    if not args.out:
        text += "indices = " + " ".join(map(str, sol.indices)) + "\n"
    _emit(text, args.report)
    return EXIT_OK


def cmd_check(args) -> int:
    shapes = read_instance(args.instance)
    indices = read_solution(args.solution, len(shapes))
    pair = first_violation(shapes, indices)
    if pair is None:
        print(f"independent = true\nsize = {len(set(indices))}")
        return EXIT_OK
    i, j = pair
    print(f"independent = false\nviolation = {i} {j}\nshape_{i} = {shapes[i]}\nshape_{j} = {shapes[j]}")
    return EXIT_FAIL


def cmd_oracle(args) -> int:
    inst = Instance(read_instance(args.instance))
    cap = args.oracle_cap if args.oracle_cap is not None else default_cap()
    t0 = time.perf_counter()
    alpha = len(brute_force_mis(build_conflict_graph(inst.shapes), cap))
    sol = solve(inst, args.variant)
    elapsed = time.perf_counter() - t0
    timing = {} if args.no_timing else {"wall_time_s": elapsed, "backend": kernels.backend()}
    report = RunReport.from_solution(inst, sol, alpha=alpha, **timing)
    _emit(report.to_text(), args.report)
    return EXIT_OK if report.within_guarantee else EXIT_FAIL


def cmd_gen(args) -> int:
    try:
        cfg = GenConfig(
            n=args.n,
            seed=args.seed,
            mode=args.mode,
            length_range=args.lengths,
            coordinate_range=args.coords,
            grain=args.grain,
            shape_mix=tuple(_rational(w) for w in args.mix.split(",")),
            equal_arms=args.equal_arms,
        )
    except (ValueError, argparse.ArgumentTypeError) as exc:
        raise CLIError(str(exc)) from None
    header = (
        f"vpgmis gen n={cfg.n} seed={cfg.seed} mode={cfg.mode} lengths={args.lengths_text} "
        f"coords={args.coords_text} grain={cfg.grain}"
    )
    _emit(format_instance(generate(cfg), header), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    shapes = read_instance(args.instance)
    selected = read_solution(args.solution, len(shapes)) if args.solution else []
    svg = render_svg(shapes, selected)
    _emit(svg, args.svg)
    return EXIT_OK


def cmd_bench(args) -> int:
    backends = ["pure", "compiled"] if args.backend == "both" else [args.backend]
    for name in backends:
        if name == "compiled" and not kernels.COMPILED_AVAILABLE:
            print("compiled = unavailable")
            continue
        if name == "auto":
            name = kernels.backend()
        rows = run_bench(args.sizes, args.mode, args.seed, args.repeat, backend=name)
        print(f"backend = {name}\nmode = {args.mode}")
        for row in rows:
            print(f"n_{row.n}_seconds = {row.seconds:.4f}\nn_{row.n}_size = {row.size}")
        factors = growth_factors(rows)
        for row, g in zip(rows[1:], factors):
            print(f"growth_{row.n} = {g:.3f}")
        if factors:
            print(f"max_growth = {max(factors):.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vpgmis", description=__doc__.splitlines()[0])
    parser.add_argument("--backend", choices=["auto", "pure", "compiled"], default=None,
                        help="kernel backend (default: $VPGMIS_BACKEND or compiled if built)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="approximate MIS of an instance file")
    p.add_argument("instance")
    p.add_argument("--variant", choices=["auto", "equilateral", "general", "uniform"], default="auto")
    p.add_argument("--out", help="write solution indices here, one per line")
    p.add_argument("--report", help="write the report here instead of stdout")
    p.add_argument("--no-timing", action="store_true", help="omit wall time and backend so reports are byte-stable")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="verify a solution is independent")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exact MIS by branch and bound, compared with the solver")
    p.add_argument("instance")
    p.add_argument("--variant", choices=["auto", "equilateral", "general", "uniform"], default="auto")
    p.add_argument("--oracle-cap", type=int, default=None,
                   help="refuse instances above this size (default: $VPGMIS_ORACLE_CAP or 30)")
    p.add_argument("--report")
    p.add_argument("--no-timing", action="store_true", help="omit wall time and backend so reports are byte-stable")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=MODES, default="equilateral")
    p.add_argument("--lengths", default="1:8", help="arm length range LO:HI")
    p.add_argument("--coords", default="0:64", help="corner coordinate range LO:HI")
    p.add_argument("--grain", type=_rational, default=Fraction(1, 4))
    p.add_argument("--mix", default="1/4,1/4,1/4,1/4", help="weights of L1,L2,L3,L4")
    p.add_argument("--equal-arms", action="store_true", help="uniform mode: same length on both axes")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="draw an instance as SVG")
    p.add_argument("instance")
    p.add_argument("solution", nargs="?")
    p.add_argument("--svg", help="output path (default stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="time the solver on growing instances")
    p.add_argument("--sizes", type=_sizes, default=list(DEFAULT_SIZES))
    p.add_argument("--n", type=int, help="single size (overrides --sizes)")
    p.add_argument("--mode", choices=MODES, default="equilateral")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--backend", choices=["auto", "pure", "compiled", "both"], default="auto", dest="bench_backend")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        args.lengths_text, args.coords_text = args.lengths, args.coords
        try:
            args.lengths, args.coords = _range(args.lengths), _range(args.coords)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    if args.command == "bench":
        args.backend = args.bench_backend
        if args.n:
            args.sizes = [args.n]
    try:
        if args.backend and args.command != "bench":
            kernels.set_backend(args.backend)
        return args.func(args)
    except (VPGError, CLIError, OSError, RuntimeError) as exc:
        print(f"vpgmis {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
