"""SVG drawing of an instance, with selected shapes highlighted."""
from __future__ import annotations

from typing import Iterable, Sequence

from .geometry import LShape

_SELECTED = "#d62728"
_OTHER = "#9e9e9e"


def render_svg(shapes: Sequence[LShape], selected: Iterable[int] = (), width: int = 800, margin: int = 20) -> str:
    chosen = set(selected)
    if shapes:
        xs = [float(v) for l in shapes for v in (l.x_c, l.x_h)]
        ys = [float(v) for l in shapes for v in (l.y_c, l.y_v)]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = y0 = 0.0
        x1 = y1 = 1.0
    span = max(x1 - x0, y1 - y0, 1e-9)
    scale = (width - 2 * margin) / span
    height = int((y1 - y0) * scale) + 2 * margin

    def px(x):
        return margin + (float(x) - x0) * scale

    def py(y):
        # SVG y grows downwards
        return height - margin - (float(y) - y0) * scale

    stroke = max(1.0, min(3.0, scale * 0.1))
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    # unselected first so highlights stay on top
    order = sorted(range(len(shapes)), key=lambda k: k in chosen)
    for k in order:
        l = shapes[k]
        color = _SELECTED if k in chosen else _OTHER
        points = f"{px(l.x_h):.2f},{py(l.y_c):.2f} {px(l.x_c):.2f},{py(l.y_c):.2f} {px(l.x_c):.2f},{py(l.y_v):.2f}"
        parts.append(
            f'<polyline id="l{k}" points="{points}" fill="none" stroke="{color}" '
            f'stroke-width="{stroke * (2 if k in chosen else 1):.2f}" stroke-linecap="square"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
