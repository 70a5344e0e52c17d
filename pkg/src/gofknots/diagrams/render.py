"""Deterministic SVG pictures of a diagram, optionally with a curve drawn in.

Cells are regular polygons laid out left to right.  Sides are colored by the
disk system they belong to and labelled with their carrier; paired sides
share a small index so the gluing can be read off.  A curve is drawn as one
polyline per transit, bent toward the cell center; strands on a side are
spaced in proportion to their slot.
"""

from __future__ import annotations

import math
from typing import Optional
from xml.sax.saxutils import escape

from gofknots.diagrams.complex import FREE, V, W, StandardDiagram
from gofknots.diagrams.curves import NormalCurve

__all__ = ["render_svg"]

_COLORS = {V: "#1f5fbf", W: "#c0392b", None: "#7f7f7f"}
_R = 80.0
_GAP = 40.0


def _fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _corners(m: int, cx: float, cy: float) -> list[tuple[float, float]]:
    # corner 0 at the bottom left, counterclockwise on screen (y grows downward)
    out = []
    for k in range(m):
        ang = -math.pi / 2 - math.pi / m + 2 * math.pi * k / m
        out.append((cx + _R * math.cos(ang), cy - _R * math.sin(ang)))
    return out


def render_svg(diagram: StandardDiagram, curve: Optional[NormalCurve] = None, title: Optional[str] = None) -> str:
    n_cells = len(diagram.cells)
    width = n_cells * (2 * _R + _GAP) + _GAP
    height = 2 * _R + 2 * _GAP + 30
    cy = _GAP + 20 + _R
    counts = curve.side_counts() if curve is not None else {}
    edge_index = {}
    for i, (u, v) in enumerate(diagram.edges()):
        edge_index[u] = edge_index[v] = i

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}" font-family="monospace" font-size="10">',
        f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
    ]
    heading = title if title is not None else str(diagram.manifold)
    lines.append(f'<text x="{_fmt(_GAP)}" y="18" font-size="14">{escape(heading)}</text>')

    geometry = []
    for c, cell in enumerate(diagram.cells):
        cx = _GAP + _R + c * (2 * _R + _GAP)
        corners = _corners(len(cell), cx, cy)
        geometry.append((cx, corners))
        lines.append(f'<g id="cell-{escape(cell.name)}">')
        for s, side in enumerate(cell.sides):
            (x1, y1), (x2, y2) = corners[s], corners[(s + 1) % len(cell)]
            dash = ' stroke-dasharray="4 3"' if side.carrier == FREE else ""
            lines.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="{_COLORS[side.system]}" stroke-width="2"{dash}/>'
            )
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            lx, ly = mx + (mx - cx) * 0.22, my + (my - cy) * 0.22
            label = f"{side.carrier}#{edge_index[(c, s)]}"
            lines.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" text-anchor="middle" '
                f'fill="{_COLORS[side.system]}">{escape(label)}</text>'
            )
        lines.append(f'<text x="{_fmt(cx)}" y="{_fmt(cy + 4)}" text-anchor="middle">{escape(cell.name)}</text>')
        lines.append("</g>")

    if curve is not None:

        def point(c: int, s: int, slot: int) -> tuple[float, float]:
            corners = geometry[c][1]
            (x1, y1), (x2, y2) = corners[s], corners[(s + 1) % len(corners)]
            t = (slot + 1) / (counts[(c, s)] + 1)
            return x1 + t * (x2 - x1), y1 + t * (y2 - y1)

        lines.append('<g id="curve" fill="none" stroke="#111111" stroke-width="1.5">')
        for t in curve.transits:
            cx = geometry[t.cell][0]
            ax, ay = point(t.cell, t.entry, t.entry_slot)
            bx, by = point(t.cell, t.exit, t.exit_slot)
            qx = (ax + bx) / 2 * 0.6 + cx * 0.4
            qy = (ay + by) / 2 * 0.6 + cy * 0.4
            pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in ((ax, ay), (qx, qy), (bx, by)))
            lines.append(f'<polyline points="{pts}"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
