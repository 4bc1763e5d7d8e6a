"""Reproducible random instances.

Randomness comes from SplitMix64, defined by the recurrence (all arithmetic
mod 2**64)::

    state <- state + 0x9E3779B97F4A7C15
    z <- state
    z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9
    z <- (z xor (z >> 27)) * 0x94D049BB133111EB
    output z xor (z >> 31)

Bounded integers use rejection sampling on the 64-bit outputs, so every draw
is integer-only and the corpus for a given seed is identical everywhere.
Coordinates and lengths are multiples of ``grain``.

Per shape the draws are, in order: orientation, corner x, corner y, then the
horizontal and vertical arm (one draw in equilateral mode; none in uniform
mode, where the pair is drawn once before the first shape).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .geometry import LShape, ShapeClass

_MASK = (1 << 64) - 1
MODES = ("equilateral", "general", "uniform")

_SIGNS = {
    ShapeClass.L1: (1, 1),
    ShapeClass.L2: (1, -1),
    ShapeClass.L3: (-1, -1),
    ShapeClass.L4: (-1, 1),
}


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in ``[0, m)``."""
        if m <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % m
        while True:
            x = self.next()
            if x < limit:
                return x % m

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)


def _pair(values) -> tuple[Fraction, Fraction]:
    lo, hi = values
    return Fraction(lo), Fraction(hi)


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int = 0
    mode: str = "equilateral"
    length_range: tuple[Fraction, Fraction] = (Fraction(1), Fraction(8))
    coordinate_range: tuple[Fraction, Fraction] = (Fraction(0), Fraction(64))
    shape_mix: tuple[Fraction, ...] = field(default=(Fraction(1, 4),) * 4)
    grain: Fraction = Fraction(1, 4)
    # uniform mode only: use one length for both axes
    equal_arms: bool = False

    def __post_init__(self):
        object.__setattr__(self, "length_range", _pair(self.length_range))
        object.__setattr__(self, "coordinate_range", _pair(self.coordinate_range))
        object.__setattr__(self, "shape_mix", tuple(Fraction(w) for w in self.shape_mix))
        object.__setattr__(self, "grain", Fraction(self.grain))
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.grain <= 0:
            raise ValueError("grain must be positive")
        lo, hi = self.length_range
        if lo <= 0 or lo > hi:
            raise ValueError(f"invalid length range {lo}..{hi}")
        if math.ceil(lo / self.grain) > math.floor(hi / self.grain):
            raise ValueError("length range contains no multiple of grain")
        lo, hi = self.coordinate_range
        if lo > hi or math.ceil(lo / self.grain) > math.floor(hi / self.grain):
            raise ValueError(f"invalid coordinate range {lo}..{hi}")
        if len(self.shape_mix) != 4 or any(w < 0 for w in self.shape_mix) or sum(self.shape_mix) != 1:
            raise ValueError("shape_mix must be 4 non-negative weights summing to 1")


def _grain_steps(bounds: tuple[Fraction, Fraction], grain: Fraction) -> tuple[int, int]:
    lo, hi = bounds
    return math.ceil(lo / grain), math.floor(hi / grain)


def _class_sampler(weights: Sequence[Fraction]):
    den = math.lcm(*(w.denominator for w in weights))
    cumulative, total = [], 0
    for w in weights:
        total += w.numerator * (den // w.denominator)
        cumulative.append(total)

    def draw(rng: SplitMix64) -> ShapeClass:
        u = rng.below(total)
        for k, c in enumerate(cumulative):
            if u < c:
                return ShapeClass(k + 1)
        raise AssertionError("unreachable")

    return draw


def generate(cfg: GenConfig) -> list[LShape]:
    rng = SplitMix64(cfg.seed)
    g = cfg.grain
    len_lo, len_hi = _grain_steps(cfg.length_range, g)
    pos_lo, pos_hi = _grain_steps(cfg.coordinate_range, g)
    draw_class = _class_sampler(cfg.shape_mix)

    fixed = None
    if cfg.mode == "uniform":
        lx = rng.between(len_lo, len_hi)
        ly = lx if cfg.equal_arms else rng.between(len_lo, len_hi)
        fixed = (lx, ly)

    shapes = []
    for _ in range(cfg.n):
        sx, sy = _SIGNS[draw_class(rng)]
        x = rng.between(pos_lo, pos_hi)
        y = rng.between(pos_lo, pos_hi)
        if fixed is not None:
            lx, ly = fixed
        elif cfg.mode == "equilateral":
            lx = ly = rng.between(len_lo, len_hi)
        else:
            lx = rng.between(len_lo, len_hi)
            ly = rng.between(len_lo, len_hi)
        shapes.append(LShape(x * g, y * g, (x + sx * lx) * g, (y + sy * ly) * g))
    return shapes
