"""Deterministic SVG rendering of triple grids, grid diagrams and fronts.

Colors follow the drawing convention: red vertical (alpha), blue horizontal
(beta), green diagonal (gamma); diagonals wrap around the torus square.
Output is byte-identical for identical input and options.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CombinatorialTGD, GridDiagram
from .legendrian import FrontComponent, front_polyline
from .links import planar_diagram

RED = "#CC0000"
BLUE = "#0000CC"
GREEN = "#00AA00"

_LABEL_COLORS = {
    "ab": (RED, BLUE),  # (vertical, horizontal)
    "bc": (BLUE, GREEN),
    "ca": (GREEN, RED),
}


@dataclass(frozen=True)
class Style:
    cell: int = 40
    margin: int = 20
    dot_radius: int = 5
    stroke: int = 2


def _header(width: int, height: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
    ]


def _line(x1, y1, x2, y2, color, width) -> str:
    return (
        f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
        f'stroke="{color}" stroke-width="{width}"/>'
    )


def render_tgd_svg(d: CombinatorialTGD, style: Style = Style()) -> bytes:
    """Torus square with n red vertical, n blue horizontal and n wrapping green lines."""
    n, s, m = d.n, style.cell, style.margin
    size = n * s
    out = _header(size + 2 * m, size + 2 * m)
    out.append(f'<rect x="{m}" y="{m}" width="{size}" height="{size}" fill="white" stroke="black"/>')
    for k in range(n):
        x = m + k * s
        out.append(_line(x, m, x, m + size, RED, style.stroke))
    for k in range(n):
        y = m + k * s
        out.append(_line(m, y, m + size, y, BLUE, style.stroke))
    # diagonals x + y = k/n, drawn in grid coordinates with wrap-around
    for k in range(n):
        # segment from (0, k) to (k, 0) plus the wrapped part from (k, n) to (n, k)
        out.append(_line(m, m + size - k * s, m + k * s, m + size, GREEN, style.stroke))
        if k != 0:
            out.append(_line(m + k * s, m, m + size, m + size - (n - k) * s, GREEN, style.stroke))
        else:
            out.append(_line(m, m, m + size, m + size, GREEN, style.stroke))
    for i, j in sorted(d.cells):
        cx = m + i * s + s // 4
        cy = m + size - (j * s + s // 4)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{style.dot_radius}" fill="black"/>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def render_grid_svg(g: GridDiagram, style: Style = Style()) -> bytes:
    """Grid diagram with its link: vertical/horizontal segments, horizontal over."""
    n, s, m = g.n, style.cell, style.margin
    size = max(n, 1) * s
    vcolor, hcolor = _LABEL_COLORS.get(g.label, (RED, BLUE))
    out = _header(size + 2 * m, size + 2 * m)
    for k in range(n):
        x = m + k * s + s // 2
        out.append(_line(x, m, x, m + size, vcolor, 1))
        y = m + k * s + s // 2
        out.append(_line(m, y, m + size, y, hcolor, 1))

    def px(i):
        return m + i * s + s // 2

    def py(j):
        return m + size - (j * s + s // 2)

    p = planar_diagram(g)
    gap = s // 5
    # vertical (under) segments drawn first, broken at crossings
    for i, (j1, j2) in sorted(p.vsegs.items()):
        breaks = sorted(c.y for c in p.crossings if c.v == ("v", i))
        ys = [py(j1)] + [v for j in breaks for v in (py(j) + gap, py(j) - gap)] + [py(j2)]
        for k in range(0, len(ys), 2):
            out.append(_line(px(i), ys[k], px(i), ys[k + 1], "black", style.stroke))
    for j, (i1, i2) in sorted(p.hsegs.items()):
        out.append(_line(px(i1), py(j), px(i2), py(j), "black", style.stroke))
    for i, j in g.sorted_points():
        out.append(f'<circle cx="{px(i)}" cy="{py(j)}" r="{style.dot_radius}" fill="black"/>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def render_front_svg(g: GridDiagram, style: Style = Style()) -> bytes:
    """Legendrian fronts: slope +-1 polylines, cusps rendered as smooth turns."""
    fronts = front_polyline(g)
    s, m = style.cell // 2, style.margin
    coords = [v for f in fronts for v in f.vertices]
    if not coords:
        out = _header(2 * m, 2 * m)
        out.append("</svg>")
        return ("\n".join(out) + "\n").encode("utf-8")
    xs = [x for x, _ in coords]
    ys = [y for _, y in coords]
    x0, y1 = min(xs), max(ys)

    def px(x):
        return m + (x - x0) * s

    def py(y):
        return m + (y1 - y) * s

    width = m * 2 + (max(xs) - x0) * s
    height = m * 2 + (y1 - min(ys)) * s
    out = _header(width, height)
    for f in fronts:
        k = len(f.vertices)
        mid0 = (
            (f.vertices[-1][0] + f.vertices[0][0]) / 2,
            (f.vertices[-1][1] + f.vertices[0][1]) / 2,
        )
        parts = [f"M {px(mid0[0])} {py(mid0[1])}"]
        for idx in range(k):
            x, y = f.vertices[idx]
            nx, ny = f.vertices[(idx + 1) % k]
            midx, midy = (x + nx) / 2, (y + ny) / 2
            if f.cusp_flags[idx]:
                # quadratic turn through the cusp vertex keeps the front smooth
                parts.append(f"Q {px(x)} {py(y)} {px(midx)} {py(midy)}")
            else:
                parts.append(f"L {px(x)} {py(y)} L {px(midx)} {py(midy)}")
        parts.append("Z")
        out.append(f'<path d="{" ".join(parts)}" fill="none" stroke="black" stroke-width="{style.stroke}"/>')
        for (cx, cy) in [v for v, flag in zip(f.vertices, f.cusp_flags) if flag]:
            out.append(
                f'<circle cx="{px(cx)}" cy="{py(cy)}" r="{style.dot_radius // 2 + 1}" '
                f'fill="none" stroke="{RED}" class="cusp"/>'
            )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def render_svg(obj, style: Style = Style(), kind: str = "auto") -> bytes:
    if kind == "front" and isinstance(obj, GridDiagram):
        return render_front_svg(obj, style)
    if isinstance(obj, CombinatorialTGD):
        return render_tgd_svg(obj, style)
    if isinstance(obj, GridDiagram):
        return render_grid_svg(obj, style)
    raise TypeError(f"cannot render {type(obj).__name__}")
