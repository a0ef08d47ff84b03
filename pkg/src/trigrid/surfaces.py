"""Colored cubic graph, orientability, surface classification, fillability.

Every marked cell has exactly one column partner, one row partner and one
diagonal partner, giving a properly 3-edge-colored cubic graph.  Capping the
three derived links with disks yields a closed surface per graph component
with Euler characteristic F - b (F = bicolored cycles, b = half the vertex
count); orientability is bipartiteness of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import LABELS, CombinatorialTGD, GeometricTGD, geometric_grids, three_grids
from .errors import LabelError, TooManyCrossings
from .legendrian import legendrian_invariants
from .links import (
    CERTIFIED_UNLINK,
    DEFAULT_CROSSING_BOUND,
    INCONCLUSIVE,
    component_census,
    planar_diagram,
    unlink_certificate,
)

COLORS = ("alpha", "beta", "gamma")  # column, row, diagonal partners

STATUS_INVALID = "invalid"
STATUS_GENERAL = "general"
STATUS_SIMPLE = "simple"
STATUS_IMMERSED = "immersed-eligible"
STATUS_LAGRANGIAN = "lagrangian-eligible"


@dataclass(frozen=True)
class ColoredCubicGraph:
    vertices: tuple[tuple[int, int], ...]
    # partner[color][vertex] -> vertex
    partners: dict[str, dict[tuple[int, int], tuple[int, int]]]
    components: tuple[frozenset[tuple[int, int]], ...]

    def edges(self, color: str):
        seen = set()
        for v, w in self.partners[color].items():
            e = (min(v, w), max(v, w))
            if e not in seen:
                seen.add(e)
                yield e


def graph_of(d: CombinatorialTGD) -> ColoredCubicGraph:
    n = d.n
    keys = {
        "alpha": lambda c: c[0],
        "beta": lambda c: c[1],
        "gamma": lambda c: (c[0] + c[1]) % n,
    }
    partners: dict[str, dict] = {}
    for color, key in keys.items():
        classes: dict[int, list] = {}
        for c in d.cells:
            classes.setdefault(key(c), []).append(c)
        pmap = {}
        for pair in classes.values():
            a, b = sorted(pair)
            pmap[a] = b
            pmap[b] = a
        partners[color] = pmap

    components = []
    unseen = set(d.cells)
    while unseen:
        start = min(unseen)
        comp = set()
        stack = [start]
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            for color in COLORS:
                stack.append(partners[color][v])
        unseen -= comp
        components.append(frozenset(comp))
    components.sort(key=lambda s: min(s))
    return ColoredCubicGraph(
        vertices=tuple(sorted(d.cells)),
        partners=partners,
        components=tuple(components),
    )


def bicolored_cycles(graph: ColoredCubicGraph, c1: str, c2: str):
    """Cycles of the subgraph with edge colors c1 and c2 (as vertex frozensets)."""
    cycles = []
    unseen = set(graph.vertices)
    while unseen:
        start = min(unseen)
        comp = set()
        v = start
        while v not in comp:
            comp.add(v)
            w = graph.partners[c1][v]
            comp.add(w)
            v = graph.partners[c2][w]
        unseen -= comp
        cycles.append(frozenset(comp))
    return cycles


def is_bipartite(graph: ColoredCubicGraph, vertices=None) -> bool:
    verts = set(vertices) if vertices is not None else set(graph.vertices)
    color: dict = {}
    for start in sorted(verts):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for c in COLORS:
                w = graph.partners[c][v]
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def xo_placement(d: CombinatorialTGD):
    """X/O assignment with one X and one O on every occupied line, or None.

    Implemented as a line-constraint solver: the two points of each occupied
    column, row and diagonal must receive opposite marks, propagated from an
    arbitrary seed per component.
    """
    n = d.n
    line_keys = (lambda c: ("col", c[0]), lambda c: ("row", c[1]), lambda c: ("dia", (c[0] + c[1]) % n))
    lines: dict[tuple, list] = {}
    for c in d.cells:
        for key in line_keys:
            lines.setdefault(key(c), []).append(c)
    partner: dict[tuple[int, int], list] = {c: [] for c in d.cells}
    for pts in lines.values():
        a, b = pts
        partner[a].append(b)
        partner[b].append(a)

    marks: dict[tuple[int, int], str] = {}
    for seed in sorted(d.cells):
        if seed in marks:
            continue
        marks[seed] = "X"
        queue = [seed]
        while queue:
            v = queue.pop()
            want = "O" if marks[v] == "X" else "X"
            for w in partner[v]:
                if w not in marks:
                    marks[w] = want
                    queue.append(w)
                elif marks[w] != want:
                    return None
    return marks


def surface_name(orientable: bool, chi: int) -> str:
    if orientable:
        g = (2 - chi) // 2
        if g == 0:
            return "S^2"
        if g == 1:
            return "T^2"
        return f"#^{g} T^2"
    k = 2 - chi
    return "RP^2" if k == 1 else f"#^{k} RP^2"


@dataclass(frozen=True)
class SurfaceComponent:
    vertices: int
    b: int
    faces: int
    face_split: tuple[int, int, int]  # bicolored cycles by pair: (ab, bc, ca)
    orientable: bool
    euler_closed: int
    name: str


@dataclass(frozen=True)
class SurfaceReport:
    components: tuple[SurfaceComponent, ...]
    b: int
    faces: int
    face_split: tuple[int, int, int]  # (c1, c2, c3)
    orientable: bool
    euler_closed: int
    status: str | None = None


# color pairs whose bicolored cycles are the faces c1, c2, c3
_FACE_PAIRS = (("alpha", "beta"), ("beta", "gamma"), ("gamma", "alpha"))


def geometric_graph(g: GeometricTGD) -> ColoredCubicGraph:
    """Colored cubic graph on the points of a geometric diagram."""
    pairings = {
        "alpha": g.column_pairs(),
        "beta": g.row_pairs(),
        "gamma": g.diagonal_pairs(),
    }
    partners: dict[str, dict] = {}
    for color, pairs in pairings.items():
        pmap = {}
        for a, b in pairs.values():
            pmap[a] = b
            pmap[b] = a
        partners[color] = pmap
    components = []
    unseen = set(g.points)
    while unseen:
        start = min(unseen)
        comp = set()
        stack = [start]
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            for color in COLORS:
                stack.append(partners[color][v])
        unseen -= comp
        components.append(frozenset(comp))
    components.sort(key=lambda s: min(s))
    return ColoredCubicGraph(
        vertices=tuple(sorted(g.points)),
        partners=partners,
        components=tuple(components),
    )


def _classify_graph(graph: ColoredCubicGraph, b: int) -> SurfaceReport:
    cycles_by_pair = [bicolored_cycles(graph, c1, c2) for c1, c2 in _FACE_PAIRS]
    comps = []
    for comp in graph.components:
        split = tuple(
            sum(1 for cyc in cycles if cyc <= comp) for cycles in cycles_by_pair
        )
        faces = sum(split)
        cb = len(comp) // 2
        orientable = is_bipartite(graph, comp)
        chi = faces - cb
        comps.append(
            SurfaceComponent(
                vertices=len(comp),
                b=cb,
                faces=faces,
                face_split=split,
                orientable=orientable,
                euler_closed=chi,
                name=surface_name(orientable, chi),
            )
        )
    total_split = tuple(len(cycles) for cycles in cycles_by_pair)
    faces = sum(total_split)
    return SurfaceReport(
        components=tuple(comps),
        b=b,
        faces=faces,
        face_split=total_split,
        orientable=all(c.orientable for c in comps),
        euler_closed=faces - b,
    )


def classify(d: CombinatorialTGD) -> SurfaceReport:
    """Per-component orientability, Euler characteristic and surface name."""
    return _classify_graph(graph_of(d), d.b)


def classify_geometric(g: GeometricTGD) -> SurfaceReport:
    return _classify_graph(geometric_graph(g), g.b)


@dataclass(frozen=True)
class LinkEvidence:
    label: str
    n_components: int
    tb: tuple[int, ...]
    rot: tuple[int, ...]
    rot_abs: tuple[int, ...]
    verdict: str  # unlink certificate or "inconclusive"


def link_evidence(
    d: CombinatorialTGD, crossing_bound: int = DEFAULT_CROSSING_BOUND
) -> list[LinkEvidence]:
    out = []
    for g in three_grids(d):
        p = planar_diagram(g)
        inv = legendrian_invariants(g)
        try:
            verdict = unlink_certificate(p, crossing_bound)
        except TooManyCrossings:
            verdict = INCONCLUSIVE
        out.append(
            LinkEvidence(
                label=g.label,
                n_components=p.n_components,
                tb=tuple(i.tb for i in inv),
                rot=tuple(i.rot for i in inv),
                rot_abs=tuple(i.rot_abs for i in inv),
                verdict=verdict,
            )
        )
    return out


def fillability_status(
    d: CombinatorialTGD, crossing_bound: int = DEFAULT_CROSSING_BOUND
) -> tuple[str, list[LinkEvidence]]:
    """Classify against the closed/immersed Lagrangian hypotheses.

    lagrangian-eligible: all three links unlink-certified, every component
    tb = -1 (rot = 0 is then forced).  simple: unlink-certified only.
    immersed-eligible: every component of all three links has rot = 0.
    """
    evidence = link_evidence(d, crossing_bound)
    all_unlink = all(e.verdict == CERTIFIED_UNLINK for e in evidence)
    all_tb = all(t == -1 for e in evidence for t in e.tb)
    all_rot0 = all(r == 0 for e in evidence for r in e.rot)
    if all_unlink and all_tb:
        return STATUS_LAGRANGIAN, evidence
    if all_unlink:
        return STATUS_SIMPLE, evidence
    if all_rot0 and not any(e.verdict == INCONCLUSIVE for e in evidence):
        return STATUS_IMMERSED, evidence
    return STATUS_GENERAL, evidence


def rp2_embeddable(k: int) -> bool:
    """Whether the connected sum of k projective planes embeds as a Lagrangian."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return (k % 4 == 2 and k != 2) or k % 4 == 1


@dataclass(frozen=True)
class ObstructionVerdict:
    applies: bool
    third_label: str | None
    q: int
    nonorientable: bool
    message: str


def obstruction_report(d: CombinatorialTGD, claimed_fillable) -> ObstructionVerdict:
    """Conditional slice-disk fillability obstruction for the third link.

    claimed_fillable: two distinct labels from {"ab", "bc", "ca"}; the claims
    are caller-supplied inputs and are not verified here.
    """
    claims = [normalize_label(x) for x in claimed_fillable]
    if len(claims) != 2 or claims[0] == claims[1]:
        raise LabelError(f"need exactly two distinct labels, got {claimed_fillable!r}")
    (third,) = set(LABELS) - set(claims)

    report = classify(d)
    grids = three_grids(d)
    census = {g.label: len(planar_diagram(g).components) for g in grids}
    q = census["ab"] + census["bc"] + census["ca"] - d.b
    nonorientable = not report.orientable

    if not nonorientable:
        return ObstructionVerdict(
            applies=False, third_label=third, q=q, nonorientable=False,
            message="hypothesis fails: diagram is orientable",
        )
    if not (q == 0 or (q < 0 and q % 4 in (2, 3))):
        return ObstructionVerdict(
            applies=False, third_label=third, q=q, nonorientable=True,
            message=f"hypothesis fails: q = {q} is neither 0 nor negative with q = 2, 3 (mod 4)",
        )
    return ObstructionVerdict(
        applies=True, third_label=third, q=q, nonorientable=True,
        message=(
            f"{third} does not admit a Lagrangian filling by slice disks "
            f"(conditional on the {claims[0]} and {claims[1]} fillability claims)"
        ),
    )


def normalize_label(label: str) -> str:
    table = {
        "ab": "ab", "bc": "bc", "ca": "ca",
        "αβ": "ab", "βγ": "bc", "γα": "ca",
        "alpha-beta": "ab", "beta-gamma": "bc", "gamma-alpha": "ca",
    }
    key = label.strip().lower()
    if key not in table:
        raise LabelError(f"unknown color pair label {label!r}")
    return table[key]
