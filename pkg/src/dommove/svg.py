"""Deterministic SVG scatter plot of two biobjective sets."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .model import DimensionError, SolutionSet

WIDTH = HEIGHT = 480
MARGIN = 56
TICKS = 5


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _nice_range(lo: float, hi: float) -> tuple[float, float]:
    if hi == lo:
        pad = abs(lo) * 0.1 or 1.0
    else:
        pad = (hi - lo) * 0.05
    return lo - pad, hi + pad


def scatter_svg(P: SolutionSet, Q: SolutionSet) -> str:
    """Render P (circles) and Q (squares) on shared f1/f2 axes."""
    if P.dim != 2 or Q.dim != 2:
        raise DimensionError("plots need two objectives")
    both = np.vstack([P.points, Q.points])
    x0, x1 = _nice_range(both[:, 0].min(), both[:, 0].max())
    y0, y1 = _nice_range(both[:, 1].min(), both[:, 1].max())
    span = WIDTH - 2 * MARGIN

    def sx(v):
        return MARGIN + (v - x0) / (x1 - x0) * span

    def sy(v):
        return HEIGHT - MARGIN - (v - y0) / (y1 - y0) * span

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{span}" height="{span}" fill="none" stroke="black"/>',
    ]
    for k in range(TICKS):
        t = k / (TICKS - 1)
        vx, vy = x0 + t * (x1 - x0), y0 + t * (y1 - y0)
        px, py = _fmt(sx(vx)), _fmt(sy(vy))
        out.append(f'<line x1="{px}" y1="{HEIGHT - MARGIN}" x2="{px}" y2="{HEIGHT - MARGIN + 5}" stroke="black"/>')
        out.append(f'<text x="{px}" y="{HEIGHT - MARGIN + 18}" text-anchor="middle">{vx:.3g}</text>')
        out.append(f'<line x1="{MARGIN - 5}" y1="{py}" x2="{MARGIN}" y2="{py}" stroke="black"/>')
        out.append(f'<text x="{MARGIN - 8}" y="{py}" text-anchor="end" dominant-baseline="middle">{vy:.3g}</text>')
    out.append(f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT - 14}" text-anchor="middle">f1</text>')
    out.append(f'<text x="16" y="{HEIGHT / 2:.0f}" text-anchor="middle" transform="rotate(-90 16 {HEIGHT / 2:.0f})">f2</text>')

    out.append('<g fill="none" stroke="#1f4e9c" stroke-width="1.5">')
    for x, y in P.points.tolist():
        out.append(f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="4"/>')
    out.append("</g>")
    out.append('<g fill="#c0392b" stroke="none">')
    for x, y in Q.points.tolist():
        out.append(f'<rect x="{_fmt(sx(x) - 3)}" y="{_fmt(sy(y) - 3)}" width="6" height="6"/>')
    out.append("</g>")

    lx = WIDTH - MARGIN - 90
    out.append(f'<circle cx="{lx}" cy="{MARGIN + 14}" r="4" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>')
    out.append(f'<text x="{lx + 10}" y="{MARGIN + 14}" dominant-baseline="middle">{escape(P.label or "P")}</text>')
    out.append(f'<rect x="{lx - 3}" y="{MARGIN + 29}" width="6" height="6" fill="#c0392b"/>')
    out.append(f'<text x="{lx + 10}" y="{MARGIN + 32}" dominant-baseline="middle">{escape(Q.label or "Q")}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
