"""SVG rendering of numerical walls in the (s, t) half-plane.

The only place floats appear: coordinates are rounded to 6 decimals after
all decisions have been made on exact values.
"""
from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from .bridgeland import Wall
from .exact import fmt

WIDTH = 800
HEIGHT = 420
MARGIN = 40


def _f(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _merge(walls: Sequence[Wall]) -> list[Wall]:
    merged: dict[tuple[Fraction, Fraction], list[str]] = {}
    for w in walls:
        merged.setdefault((w.center, w.radius_sq), []).append(w.label)
    return [Wall(c, r, ", ".join(l for l in labels if l)) for (c, r), labels in merged.items()]


def render_svg(walls: Sequence[Wall], vertical: Fraction | None = None, title: str = "") -> str:
    walls = _merge(walls)
    xs = []
    for w in walls:
        r = math.sqrt(w.radius_sq) if w.radius_sq > 0 else 0.0
        xs += [float(w.center) - r, float(w.center) + r]
    if vertical is not None:
        xs.append(float(vertical))
    lo, hi = (min(xs), max(xs)) if xs else (-3.0, 3.0)
    if hi - lo < 1e-9:
        lo, hi = lo - 1, hi + 1
    pad = 0.1 * (hi - lo)
    lo, hi = lo - pad, hi + pad
    scale = (WIDTH - 2 * MARGIN) / (hi - lo)
    base_y = HEIGHT - MARGIN

    def px(s: float) -> float:
        return MARGIN + (s - lo) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(
        f'<line class="axis" x1="{MARGIN}" y1="{base_y}" x2="{WIDTH - MARGIN}" y2="{base_y}" stroke="black"/>'
    )
    if lo < 0 < hi:
        out.append(
            f'<line class="axis" x1="{_f(px(0))}" y1="{MARGIN}" x2="{_f(px(0))}" y2="{base_y}" '
            'stroke="#bbb" stroke-dasharray="2,3"/>'
        )
    if vertical is not None:
        x = _f(px(float(vertical)))
        out.append(
            f'<line class="vertical-wall" data-s="{fmt(vertical)}" x1="{x}" y1="{MARGIN}" x2="{x}" '
            f'y2="{base_y}" stroke="red"/>'
        )
    for w in sorted(walls, key=lambda w: (w.center, w.radius_sq)):
        cx = px(float(w.center))
        data = f'data-center="{fmt(w.center)}" data-radius-sq="{fmt(w.radius_sq)}"'
        if w.degenerate:
            out.append(
                f'<line class="wall degenerate" {data} x1="{_f(cx)}" y1="{base_y - 6}" x2="{_f(cx)}" '
                f'y2="{base_y + 6}" stroke="gray"/>'
            )
            top = base_y - 10
        else:
            r = math.sqrt(w.radius_sq) * scale
            out.append(
                f'<path class="wall" {data} d="M {_f(cx - r)} {base_y} A {_f(r)} {_f(r)} 0 0 1 '
                f'{_f(cx + r)} {base_y}" fill="none" stroke="blue"/>'
            )
            top = base_y - r - 6
        if w.label:
            out.append(
                f'<text x="{_f(cx)}" y="{_f(top)}" font-size="12" text-anchor="middle">{escape(w.label)}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(walls: Sequence[Wall], path, vertical: Fraction | None = None, title: str = "") -> Path:
    path = Path(path)
    path.write_text(render_svg(walls, vertical, title), encoding="utf-8")
    return path
