"""Legendrian invariants of the standard Legendrianization of a grid diagram.

Rotating the planar diagram 45 degrees clockwise turns the {N,E} and {S,W}
corners into cusps (they acquire vertical tangencies); tb and rot follow from
the standard front formulas tb = w - cusps/2 and rot = (down - up)/2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GridDiagram
from .links import PlanarLinkDiagram, planar_diagram


@dataclass(frozen=True)
class CornerClassification:
    """Per-vertex compass directions of the two incident segments."""

    directions: dict[tuple[int, int], tuple[str, str]]  # vertex -> (horizontal, vertical)
    cusps: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class LegendrianInvariants:
    component: int
    tb: int
    rot: int
    cusps: int
    down_cusps: int
    up_cusps: int

    @property
    def rot_abs(self) -> int:
        return abs(self.rot)


def _corner_directions(p: PlanarLinkDiagram) -> dict[tuple[int, int], tuple[str, str]]:
    out = {}
    for i, j in p.grid.points:
        j1, j2 = p.vsegs[i]
        i1, i2 = p.hsegs[j]
        vert = "N" if j == j1 else "S"  # direction the vertical segment extends
        horiz = "E" if i == i1 else "W"
        out[(i, j)] = (horiz, vert)
    return out


def cusp_census(g: GridDiagram) -> CornerClassification:
    p = planar_diagram(g)
    dirs = _corner_directions(p)
    cusps = frozenset(
        v for v, (h, vert) in dirs.items() if (h, vert) in (("E", "N"), ("W", "S"))
    )
    return CornerClassification(directions=dirs, cusps=cusps)


def legendrian_invariants(g: GridDiagram) -> list[LegendrianInvariants]:
    """Per-component tb, rot and cusp data under the deterministic orientation."""
    p = planar_diagram(g)
    dirs = _corner_directions(p)
    self_writhe = [0] * p.n_components
    for c in p.crossings:
        a, b = p.seg_comp[c.h], p.seg_comp[c.v]
        if a == b:
            self_writhe[a] += c.sign
    out = []
    for k, cycle in enumerate(p.components):
        cusps = down = up = 0
        for v in cycle:
            h, vert = dirs[v]
            if (h, vert) not in (("E", "N"), ("W", "S")):
                continue
            cusps += 1
            # down-cusp iff the incident vertical segment is traversed southward
            if p.seg_dir[("v", v[0])] < 0:
                down += 1
            else:
                up += 1
        out.append(
            LegendrianInvariants(
                component=k,
                tb=self_writhe[k] - cusps // 2,
                rot=(down - up) // 2,
                cusps=cusps,
                down_cusps=down,
                up_cusps=up,
            )
        )
    return out


@dataclass(frozen=True)
class FrontComponent:
    """Closed polyline of a front, with per-vertex cusp flags and crossing data."""

    vertices: tuple[tuple[int, int], ...]  # (x + y, y - x) per traversal vertex
    cusp_flags: tuple[bool, ...]
    crossings: tuple[tuple[tuple[int, int], str], ...]  # (position, "over"/"under")

    @property
    def cusp_count(self) -> int:
        return sum(self.cusp_flags)


def front_polyline(g: GridDiagram) -> list[FrontComponent]:
    """Fronts of the components: planar vertices mapped by (x, y) -> (x + y, y - x)."""
    p = planar_diagram(g)
    dirs = _corner_directions(p)
    out = []
    for k, cycle in enumerate(p.components):
        verts = tuple((x + y, y - x) for x, y in cycle)
        flags = tuple(dirs[v] in (("E", "N"), ("W", "S")) for v in cycle)
        crossings = []
        for c in p.crossings:
            pos = (c.x + c.y, c.y - c.x)
            if p.seg_comp[c.h] == k:
                crossings.append((pos, "over"))
            if p.seg_comp[c.v] == k:
                crossings.append((pos, "under"))
        out.append(
            FrontComponent(vertices=verts, cusp_flags=flags, crossings=tuple(crossings))
        )
    return out
