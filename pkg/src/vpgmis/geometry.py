"""L-shapes with exact rational coordinates and their intersection predicate.

An L-shape is stored as the 4-tuple ``(x_c, y_c, x_h, y_v)``: the corner
``(x_c, y_c)``, the x coordinate of the horizontal arm's tip and the y
coordinate of the vertical arm's tip.  The orientation follows from the
signs of the two arms::

    L1  (+, +)   corner bottom-left
    L2  (+, -)   corner top-left
    L3  (-, -)   corner top-right
    L4  (-, +)   corner bottom-right

All coordinates are :class:`fractions.Fraction`, so every predicate is exact.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from ._pure import segments_meet
from .errors import DegenerateShapeError, InstanceParseError, ShapeClassError

Number = Union[int, Fraction, str]


class ShapeClass(enum.IntEnum):
    L1 = 1
    L2 = 2
    L3 = 3
    L4 = 4


_CLASS_BY_SIGN = {
    (True, True): ShapeClass.L1,
    (True, False): ShapeClass.L2,
    (False, False): ShapeClass.L3,
    (False, True): ShapeClass.L4,
}

# counter-clockwise quarter turns taking each class onto L1
TURNS_TO_L1 = {ShapeClass.L1: 0, ShapeClass.L2: 1, ShapeClass.L3: 2, ShapeClass.L4: 3}


@dataclass(frozen=True, slots=True)
class LShape:
    x_c: Fraction
    y_c: Fraction
    x_h: Fraction
    y_v: Fraction

    def __post_init__(self):
        for name in ("x_c", "y_c", "x_h", "y_v"):
            value = getattr(self, name)
            if type(value) is not Fraction:
                object.__setattr__(self, name, Fraction(value))
        if self.x_h == self.x_c or self.y_v == self.y_c:
            raise DegenerateShapeError(f"zero-length arm in {self.as_tuple()}")

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x_c, self.y_c, self.x_h, self.y_v)

    @property
    def shape_class(self) -> ShapeClass:
        return classify(self)

    def translated(self, dx: Number, dy: Number) -> "LShape":
        dx, dy = Fraction(dx), Fraction(dy)
        return LShape(self.x_c + dx, self.y_c + dy, self.x_h + dx, self.y_v + dy)

    def scaled(self, s: Number) -> "LShape":
        s = Fraction(s)
        if s <= 0:
            raise ValueError("scale factor must be positive")
        return LShape(self.x_c * s, self.y_c * s, self.x_h * s, self.y_v * s)

    def __str__(self) -> str:
        return " ".join(format_rational(v) for v in self.as_tuple())


def classify(l: LShape) -> ShapeClass:
    if l.x_h == l.x_c or l.y_v == l.y_c:
        raise DegenerateShapeError(f"zero-length arm in {l.as_tuple()}")
    return _CLASS_BY_SIGN[(l.x_h > l.x_c, l.y_v > l.y_c)]


def arm_lengths(l: LShape) -> tuple[Fraction, Fraction]:
    """Return ``(horizontal, vertical)`` arm lengths."""
    return abs(l.x_h - l.x_c), abs(l.y_v - l.y_c)


def is_equilateral(l: LShape) -> bool:
    lx, ly = arm_lengths(l)
    return lx == ly


def intersects(l1: LShape, l2: LShape) -> bool:
    """True iff the closed point sets of the two shapes share a point.

    Touching and collinear overlap both count.
    """
    return segments_meet(l1.x_c, l1.y_c, l1.x_h, l1.y_v, l2.x_c, l2.y_c, l2.x_h, l2.y_v)


def rotate_quarter_turn(l: LShape, turns: int = 1) -> LShape:
    """Rotate ``l`` about the origin by ``turns`` counter-clockwise quarter turns.

    Under ``(x, y) -> (-y, x)`` the old vertical arm becomes the horizontal one,
    so the new tuple is ``(-y_c, x_c, -y_v, x_h)``.
    """
    x_c, y_c, x_h, y_v = l.as_tuple()
    for _ in range(turns % 4):
        x_c, y_c, x_h, y_v = -y_c, x_c, -y_v, x_h
    return LShape(x_c, y_c, x_h, y_v)


def rotate_to_L1(l: LShape, from_class: ShapeClass) -> LShape:
    actual = classify(l)
    if actual != from_class:
        raise ShapeClassError(f"shape {l} is {actual.name}, not {ShapeClass(from_class).name}")
    turns = TURNS_TO_L1[actual]
    if turns == 0:
        return l
    return rotate_quarter_turn(l, turns)


class Diagnostic(NamedTuple):
    kind: str  # "degenerate" | "duplicate" | "general-position"
    indices: tuple[int, ...]
    message: str


def validate_instance(shapes: Iterable[Union[LShape, Sequence[Number]]]) -> list[Diagnostic]:
    """Report degenerate shapes, duplicate tuples and same-class coordinate ties.

    Accepts raw 4-tuples as well as :class:`LShape` so that degenerate input
    can be diagnosed rather than rejected.  Nothing here raises.
    """
    diagnostics: list[Diagnostic] = []
    seen: dict[tuple, int] = {}
    by_class: dict[ShapeClass, list[tuple[int, tuple]]] = {}
    for idx, raw in enumerate(shapes):
        t = raw.as_tuple() if isinstance(raw, LShape) else tuple(Fraction(v) for v in raw)
        if len(t) != 4:
            diagnostics.append(Diagnostic("degenerate", (idx,), f"shape {idx} has {len(t)} coordinates"))
            continue
        x_c, y_c, x_h, y_v = t
        if x_h == x_c or y_v == y_c:
            diagnostics.append(Diagnostic("degenerate", (idx,), f"shape {idx} has a zero-length arm"))
            continue
        if t in seen:
            diagnostics.append(
                Diagnostic("duplicate", (seen[t], idx), f"shapes {seen[t]} and {idx} are identical")
            )
        else:
            seen[t] = idx
        by_class.setdefault(_CLASS_BY_SIGN[(x_h > x_c, y_v > y_c)], []).append((idx, t))

    for members in by_class.values():
        for axis, label in ((0, "x_c"), (1, "y_c")):
            groups: dict[Fraction, list[int]] = {}
            for idx, t in members:
                groups.setdefault(t[axis], []).append(idx)
            for value, idxs in groups.items():
                if len(idxs) > 1:
                    diagnostics.append(
                        Diagnostic(
                            "general-position",
                            tuple(idxs),
                            f"shapes {idxs} share {label} = {format_rational(value)}",
                        )
                    )
    return diagnostics


def _dyadic_floor_log2(r: Fraction) -> int:
    # floor(log2(r)) for r >= 1, computed without floating point
    return int(r).bit_length() - 1


class IntColumns(NamedTuple):
    """Coordinates as integer numerators over one common denominator."""

    denominator: int
    xc: list[int]
    yc: list[int]
    xh: list[int]
    yv: list[int]


def integerize(shapes: Sequence[LShape]) -> IntColumns:
    """Exact integer form of ``shapes``: every coordinate times the lcm of all denominators."""
    coords = (
        [l.x_c for l in shapes],
        [l.y_c for l in shapes],
        [l.x_h for l in shapes],
        [l.y_v for l in shapes],
    )
    scale = math.lcm(1, *{v.denominator for col in coords for v in col})
    if scale == 1:
        return IntColumns(1, *([v.numerator for v in col] for col in coords))
    return IntColumns(scale, *([v.numerator * scale // v.denominator for v in col] for col in coords))


class Instance:
    """An indexed, immutable collection of shapes with cached statistics."""

    def __init__(self, shapes: Iterable[LShape]):
        self.shapes: tuple[LShape, ...] = tuple(shapes)

    def __len__(self) -> int:
        return len(self.shapes)

    def __iter__(self) -> Iterator[LShape]:
        return iter(self.shapes)

    def __getitem__(self, idx: int) -> LShape:
        return self.shapes[idx]

    @cached_property
    def columns(self) -> IntColumns:
        return integerize(self.shapes)

    @cached_property
    def _arms(self) -> tuple[list[int], list[int]]:
        # integer arm lengths in units of 1 / columns.denominator
        c = self.columns
        return (
            [abs(h - x) for x, h in zip(c.xc, c.xh)],
            [abs(v - y) for y, v in zip(c.yc, c.yv)],
        )

    @cached_property
    def shape_classes(self) -> list[ShapeClass]:
        c = self.columns
        return [_CLASS_BY_SIGN[(h > x, v > y)] for x, y, h, v in zip(c.xc, c.yc, c.xh, c.yv)]

    @cached_property
    def class_counts(self) -> dict[ShapeClass, int]:
        counts = {c: 0 for c in ShapeClass}
        for cls in self.shape_classes:
            counts[cls] += 1
        return counts

    @cached_property
    def is_equilateral(self) -> bool:
        xs, ys = self._arms
        return xs == ys

    @cached_property
    def is_uniform(self) -> bool:
        """All horizontal arms share one length and all vertical arms share one length."""
        xs, ys = self._arms
        return len(set(xs)) <= 1 and len(set(ys)) <= 1

    @cached_property
    def d(self) -> Fraction:
        xs, ys = self._arms
        if not xs:
            return Fraction(1)
        return Fraction(max(max(xs), max(ys)), min(min(xs), min(ys)))

    @cached_property
    def d_x(self) -> Fraction:
        xs, _ = self._arms
        return Fraction(max(xs), min(xs)) if xs else Fraction(1)

    @cached_property
    def d_y(self) -> Fraction:
        _, ys = self._arms
        return Fraction(max(ys), min(ys)) if ys else Fraction(1)

    @staticmethod
    def log_classes(ratio: Fraction) -> int:
        """``max(1, floor(log2(2 * ratio)))``: the number of dyadic length buckets."""
        return max(1, _dyadic_floor_log2(2 * Fraction(ratio)))


def as_instance(shapes: Union[Instance, Iterable[LShape]]) -> Instance:
    return shapes if isinstance(shapes, Instance) else Instance(shapes)


# -- instance file format -----------------------------------------------------

_NUMERAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?\Z")


def parse_rational(token: str) -> Fraction:
    if not _NUMERAL.match(token):
        raise ValueError(f"not a decimal numeral: {token!r}")
    return Fraction(token)


def format_rational(value: Fraction) -> str:
    """Exact decimal text when the value has a terminating expansion, else ``p/q``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    scaled = abs(value.numerator) * 10**digits // value.denominator
    sign = "-" if value < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}".rstrip("0")


def parse_instance(text: str) -> list[LShape]:
    shapes = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 4:
            raise InstanceParseError(lineno, f"expected 4 coordinates, found {len(tokens)}")
        try:
            coords = [parse_rational(tok) for tok in tokens]
        except ValueError as exc:
            raise InstanceParseError(lineno, str(exc)) from None
        try:
            shapes.append(LShape(*coords))
        except DegenerateShapeError as exc:
            raise InstanceParseError(lineno, str(exc)) from None
    return shapes


def read_instance(path: Union[str, Path]) -> list[LShape]:
    return parse_instance(Path(path).read_text())


def format_instance(shapes: Iterable[LShape], header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(str(l) for l in shapes)
    return "\n".join(lines) + "\n"


def write_instance(path: Union[str, Path], shapes: Iterable[LShape], header: str | None = None) -> None:
    Path(path).write_text(format_instance(shapes, header))
