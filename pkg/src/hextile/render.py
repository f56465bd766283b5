"""SVG drawings of signed tribone tilings."""

from __future__ import annotations

import math

from .hexlattice import Cell, Tiling, region_T

SCALE = 20.0
_SQ3 = math.sqrt(3.0)


def cell_center(cell: Cell) -> tuple:
    """Plane position of a cell; the x-translation points along the first axis."""
    u, v = cell.uv
    px = u - 0.5 * v
    py = (_SQ3 / 2) * v + 1 / _SQ3
    return px * SCALE, -py * SCALE  # SVG y grows downwards


def _hexagon(cx: float, cy: float) -> str:
    r = SCALE / _SQ3
    pts = []
    for k in range(6):
        ang = math.radians(30 + 60 * k)
        pts.append(f"{cx + r * math.cos(ang):.3f},{cy + r * math.sin(ang):.3f}")
    return " ".join(pts)


def render_svg(tiling: Tiling, region_cells=None) -> str:
    """Hex grid of the region plus one ``<line class="bar">`` per placement.

    Positive weights are drawn solid, negative ones with a hatch pattern.
    """
    if region_cells is None:
        region_cells = region_T(tiling.region_n).cells if tiling.region_n else frozenset()
    grid = set(region_cells)
    for pl in tiling.placements:
        grid.update(pl.cells())
    centers = {c: cell_center(c) for c in grid}
    pad = SCALE
    if centers:
        xs = [p[0] for p in centers.values()]
        ys = [p[1] for p in centers.values()]
        x0, y0 = min(xs) - pad, min(ys) - pad
        w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    else:
        x0, y0, w, h = 0.0, 0.0, 2 * pad, 2 * pad
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:.3f} {y0:.3f} {w:.3f} {h:.3f}">',
        "<defs>",
        '<pattern id="hatch" patternUnits="userSpaceOnUse" width="4" height="4">'
        '<path d="M0,4 L4,0" stroke="#c0392b" stroke-width="1"/></pattern>',
        "</defs>",
        '<g class="grid">',
    ]
    for c in sorted(grid):
        cls = "cell" if c in region_cells else "cell outside"
        fill = "#f4f1e8" if c in region_cells else "none"
        cx, cy = centers[c]
        out.append(f'<polygon class="{cls}" points="{_hexagon(cx, cy)}" '
                   f'fill="{fill}" stroke="#999" stroke-width="0.5"/>')
    out.append("</g>")
    out.append('<g class="placements">')
    for pl in sorted(tiling.placements, key=lambda p: (p.type.value, p.center, p.weight)):
        first, _, last = pl.cells()
        (x1, y1), (x2, y2) = cell_center(first), cell_center(last)
        stroke = "#2c6fbb" if pl.weight > 0 else "url(#hatch)"
        width = 4 + 2 * math.log2(max(1, abs(pl.weight)))
        out.append(f'<line class="bar" x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
                   f'stroke="{stroke}" stroke-width="{width:.3f}" stroke-linecap="round" '
                   f'data-type="{pl.type.value}" data-weight="{pl.weight}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
