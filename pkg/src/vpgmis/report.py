"""Flat ``key = value`` run reports."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import Instance, ShapeClass, format_rational
from .solver import Solution


@dataclass
class RunReport:
    n: int
    d: Fraction
    d_x: Fraction
    d_y: Fraction
    class_counts: dict
    size: int
    variant: str
    guaranteed_factor: Fraction
    winning_class: Optional[str] = None
    alpha: Optional[int] = None
    wall_time_s: Optional[float] = None
    backend: Optional[str] = None

    @classmethod
    def from_solution(cls, inst: Instance, sol: Solution, **extra) -> "RunReport":
        return cls(
            n=len(inst),
            d=inst.d,
            d_x=inst.d_x,
            d_y=inst.d_y,
            class_counts={c.name: inst.class_counts[c] for c in ShapeClass},
            size=len(sol),
            variant=sol.variant.value,
            guaranteed_factor=sol.guaranteed_factor,
            winning_class=str(sol.winning_class) if sol.winning_class else None,
            **extra,
        )

    @property
    def ratio(self) -> Optional[Fraction]:
        """``alpha / size``; 1 for the empty instance."""
        if self.alpha is None:
            return None
        if self.size == 0:
            return Fraction(1) if self.alpha == 0 else None
        return Fraction(self.alpha, self.size)

    @property
    def within_guarantee(self) -> Optional[bool]:
        ratio = self.ratio
        if self.alpha is None:
            return None
        return ratio is not None and ratio <= self.guaranteed_factor

    def items(self) -> list[tuple[str, str]]:
        rows = [
            ("n", str(self.n)),
            ("d", format_rational(self.d)),
            ("d_x", format_rational(self.d_x)),
            ("d_y", format_rational(self.d_y)),
        ]
        rows += [(f"count_{name}", str(k)) for name, k in self.class_counts.items()]
        rows += [
            ("variant", self.variant),
            ("size", str(self.size)),
            ("guaranteed_factor", format_rational(self.guaranteed_factor)),
            ("winning_class", self.winning_class or "none"),
        ]
        if self.alpha is not None:
            ratio = self.ratio
            rows += [
                ("alpha", str(self.alpha)),
                ("ratio", format_rational(ratio) if ratio is not None else "inf"),
                ("within_guarantee", str(self.within_guarantee).lower()),
            ]
        if self.backend is not None:
            rows.append(("backend", self.backend))
        if self.wall_time_s is not None:
            rows.append(("wall_time_s", f"{self.wall_time_s:.6f}"))
        return rows

    def to_text(self) -> str:
        return "".join(f"{k} = {v}\n" for k, v in self.items())
