"""Planar link diagrams read off a grid diagram, and their smooth-link data.

Partners in each occupied column are joined by a vertical segment inside the
fundamental square (no wrap-around), row partners by a horizontal segment.
Horizontal segments pass over vertical ones.  Components are oriented
deterministically: the least vertex of each component starts the traversal,
heading up its vertical segment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._bracket import state_counts
from .core import GridDiagram
from .errors import TooManyCrossings
from .laurent import LaurentPolynomial

DEFAULT_CROSSING_BOUND = 24

CERTIFIED_UNLINK = "certified_unlink_heuristic"
NOT_UNLINK = "not_unlink"
INCONCLUSIVE = "inconclusive"

SegId = tuple[str, int]  # ("v", column) or ("h", row)


@dataclass(frozen=True)
class Crossing:
    h: SegId
    v: SegId
    x: int
    y: int
    sign: int


@dataclass(frozen=True)
class PlanarLinkDiagram:
    grid: GridDiagram
    vsegs: dict[int, tuple[int, int]]  # column -> (row_lo, row_hi)
    hsegs: dict[int, tuple[int, int]]  # row -> (col_lo, col_hi)
    components: tuple[tuple[tuple[int, int], ...], ...]  # vertex cycles
    seg_dir: dict[SegId, int]  # +1 = north/east under traversal
    seg_comp: dict[SegId, int]
    crossings: tuple[Crossing, ...]

    @property
    def n_components(self) -> int:
        return len(self.components)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def crossing_components(self, c: Crossing) -> tuple[int, int]:
        return (self.seg_comp[c.h], self.seg_comp[c.v])


def planar_diagram(g: GridDiagram) -> PlanarLinkDiagram:
    vsegs = g.column_pairs()
    hsegs = g.row_pairs()
    vpartner = {}
    hpartner = {}
    for i, (j1, j2) in vsegs.items():
        vpartner[(i, j1)] = (i, j2)
        vpartner[(i, j2)] = (i, j1)
    for j, (i1, i2) in hsegs.items():
        hpartner[(i1, j)] = (i2, j)
        hpartner[(i2, j)] = (i1, j)

    components: list[tuple[tuple[int, int], ...]] = []
    seg_dir: dict[SegId, int] = {}
    seg_comp: dict[SegId, int] = {}
    unvisited = set(g.points)
    while unvisited:
        start = min(unvisited)
        cycle = []
        cur = start
        use_vertical = True
        while True:
            cycle.append(cur)
            unvisited.discard(cur)
            if use_vertical:
                nxt = vpartner[cur]
                sid = ("v", cur[0])
                seg_dir[sid] = 1 if nxt[1] > cur[1] else -1
            else:
                nxt = hpartner[cur]
                sid = ("h", cur[1])
                seg_dir[sid] = 1 if nxt[0] > cur[0] else -1
            seg_comp[sid] = len(components)
            use_vertical = not use_vertical
            cur = nxt
            if cur == start:
                break
        components.append(tuple(cycle))

    crossings = []
    for j, (i1, i2) in sorted(hsegs.items()):
        for i, (j1, j2) in sorted(vsegs.items()):
            if i1 < i < i2 and j1 < j < j2:
                sign = seg_dir[("h", j)] * seg_dir[("v", i)]
                crossings.append(Crossing(h=("h", j), v=("v", i), x=i, y=j, sign=sign))

    return PlanarLinkDiagram(
        grid=g,
        vsegs=vsegs,
        hsegs=hsegs,
        components=tuple(components),
        seg_dir=seg_dir,
        seg_comp=seg_comp,
        crossings=tuple(crossings),
    )


def component_census(p: PlanarLinkDiagram) -> list[int]:
    """Vertex count of each component, in traversal-discovery order."""
    return [len(c) for c in p.components]


def component_grid(p: PlanarLinkDiagram, comp: int) -> GridDiagram:
    """Sub-grid carrying a single component (column/row partners stay together)."""
    pts = frozenset(p.components[comp])
    return GridDiagram(n=p.grid.n, points=pts, label=p.grid.label)


def linking_matrix(p: PlanarLinkDiagram) -> list[list[int]]:
    """Diagonal = self-writhe; off-diagonal = linking number (half the signed count)."""
    k = p.n_components
    raw = [[0] * k for _ in range(k)]
    for c in p.crossings:
        a, b = p.seg_comp[c.h], p.seg_comp[c.v]
        raw[a][b] += c.sign
        if a != b:
            raw[b][a] += c.sign
    out = [[0] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            out[a][b] = raw[a][b] if a == b else raw[a][b] // 2
    return out


# ---------------------------------------------------------------------------
# Kauffman bracket


def _delta() -> LaurentPolynomial:
    return LaurentPolynomial({2: -1, -2: -1})


def _port_model(p: PlanarLinkDiagram) -> tuple[list[int], int]:
    """Flatten to (partner array over 4c ports, number of crossing-free loops)."""
    # order of ports per crossing: S, E, N, W
    cross_index = {id(c): k for k, c in enumerate(p.crossings)}
    on_seg: dict[SegId, list[Crossing]] = {}
    for c in p.crossings:
        on_seg.setdefault(c.h, []).append(c)
        on_seg.setdefault(c.v, []).append(c)

    free_loops = 0
    partner = [0] * (4 * len(p.crossings))
    for comp_idx, cycle in enumerate(p.components):
        events: list[tuple[int, int]] = []  # (entry_port, exit_port)
        use_vertical = True
        for pos, vertex in enumerate(cycle):
            if use_vertical:
                sid = ("v", vertex[0])
                d = p.seg_dir[sid]
                here = [c for c in on_seg.get(sid, ())]
                here.sort(key=lambda c: c.y, reverse=(d < 0))
                for c in here:
                    base = 4 * cross_index[id(c)]
                    if d > 0:
                        events.append((base + 0, base + 2))  # in S, out N
                    else:
                        events.append((base + 2, base + 0))
            else:
                sid = ("h", vertex[1])
                d = p.seg_dir[sid]
                here = [c for c in on_seg.get(sid, ())]
                here.sort(key=lambda c: c.x, reverse=(d < 0))
                for c in here:
                    base = 4 * cross_index[id(c)]
                    if d > 0:
                        events.append((base + 3, base + 1))  # in W, out E
                    else:
                        events.append((base + 1, base + 3))
            use_vertical = not use_vertical
        if not events:
            free_loops += 1
            continue
        for k in range(len(events)):
            exit_port = events[k][1]
            entry_port = events[(k + 1) % len(events)][0]
            partner[exit_port] = entry_port
            partner[entry_port] = exit_port
    return partner, free_loops


def kauffman_bracket(
    p: PlanarLinkDiagram, crossing_bound: int = DEFAULT_CROSSING_BOUND
) -> LaurentPolynomial:
    """State sum normalized so the bracket of a single 0-crossing unknot is 1."""
    c = len(p.crossings)
    if c > crossing_bound:
        raise TooManyCrossings(c, crossing_bound)
    if p.n_components == 0:
        return LaurentPolynomial.one()
    partner, free_loops = _port_model(p)
    counts = state_counts(partner)
    delta = _delta()
    max_loops = len(counts[0]) - 1
    delta_pow = [LaurentPolynomial.one()]
    for _ in range(max_loops + free_loops):
        delta_pow.append(delta_pow[-1] * delta)
    total = LaurentPolynomial.zero()
    for a in range(c + 1):
        for loops in range(max_loops + 1):
            cnt = counts[a][loops]
            if cnt:
                term = delta_pow[loops + free_loops - 1].shift(2 * a - c) * cnt
                total = total + term
    return total


def normalized_bracket(
    p: PlanarLinkDiagram, crossing_bound: int = DEFAULT_CROSSING_BOUND
) -> LaurentPolynomial:
    """Writhe-corrected bracket (-A^3)^(-w) <D>; a link invariant, in the variable A."""
    w = p.writhe()
    bracket = kauffman_bracket(p, crossing_bound)
    corr = LaurentPolynomial({-3 * w: 1 if w % 2 == 0 else -1})
    return corr * bracket


def _unlink_value(n_components: int) -> LaurentPolynomial:
    out = LaurentPolynomial.one()
    for _ in range(n_components - 1):
        out = out * _delta()
    return out


def unlink_certificate(
    p: PlanarLinkDiagram, crossing_bound: int = DEFAULT_CROSSING_BOUND
) -> str:
    """Jones-based unlink check: a negative answer is certain, a positive one heuristic."""
    k = p.n_components
    if k == 0:
        return CERTIFIED_UNLINK
    lk = linking_matrix(p)
    for a in range(k):
        for b in range(a + 1, k):
            if lk[a][b] != 0:
                return NOT_UNLINK
    if normalized_bracket(p, crossing_bound) != _unlink_value(k):
        return NOT_UNLINK
    for comp in range(k):
        sub = planar_diagram(component_grid(p, comp))
        if normalized_bracket(sub, crossing_bound) != LaurentPolynomial.one():
            return NOT_UNLINK
    return CERTIFIED_UNLINK


def cyclic_permute(g: GridDiagram, a: int, b: int) -> GridDiagram:
    """Translate all points by (a, b) on the torus (moves the fundamental-domain cut)."""
    n = g.n
    pts = frozenset(((i + a) % n, (j + b) % n) for i, j in g.points)
    return GridDiagram(n=n, points=pts, label=g.label)
