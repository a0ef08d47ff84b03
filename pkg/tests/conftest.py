"""Shared test oracles, implemented independently of the library internals.

The skein evaluator works on PD codes: a crossing is a 4-tuple (a, b, c, d)
of arc labels read counterclockwise starting from the incoming under-strand
arc.  The A-smoothing joins (a, b) and (c, d); the B-smoothing joins (a, d)
and (b, c).
"""

from __future__ import annotations

from itertools import combinations

from trigrid import LaurentPolynomial, PlanarLinkDiagram

DELTA = LaurentPolynomial({2: -1, -2: -1})

# one line per end-to-end criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

# right-handed trefoil, 3 crossings, arcs 1..6, writhe +3
TREFOIL_PD = ((1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2))

# the 5x5 grid carrying the same trefoil
TREFOIL_GRID_POINTS = frozenset(
    {(0, 0), (0, 2), (1, 1), (1, 3), (2, 2), (2, 4), (3, 0), (3, 3), (4, 1), (4, 4)}
)


def _loop_count(joins) -> int:
    adj: dict[int, list[int]] = {}
    for x, y in joins:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    seen: set[int] = set()
    loops = 0
    for s in adj:
        if s in seen:
            continue
        loops += 1
        stack = [s]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
    return loops


def skein_bracket(pd, free_loops: int = 0) -> LaurentPolynomial:
    """Naive recursive skein evaluation of the Kauffman bracket, <unknot> = 1."""
    a_var = LaurentPolynomial({1: 1})
    a_inv = LaurentPolynomial({-1: 1})

    def rec(idx: int, joins: tuple) -> LaurentPolynomial:
        if idx == len(pd):
            loops = _loop_count(joins) + free_loops
            if loops == 0:
                return LaurentPolynomial.one()
            return DELTA ** (loops - 1)
        a, b, c, d = pd[idx]
        return a_var * rec(idx + 1, joins + ((a, b), (c, d))) + a_inv * rec(
            idx + 1, joins + ((a, d), (b, c))
        )

    return rec(0, ())


def pd_writhe(pd) -> int:
    """Writhe of a one-component PD code with arcs numbered along orientation."""
    n = 2 * len(pd)
    w = 0
    for _, b, _, d in pd:
        if d % n + 1 == b:  # over-strand runs W -> E
            w += 1
        elif b % n + 1 == d:  # over-strand runs E -> W
            w -= 1
        else:
            raise ValueError("over-strand arcs are not consecutive")
    return w


def pd_normalized(pd) -> LaurentPolynomial:
    w = pd_writhe(pd)
    corr = LaurentPolynomial({-3 * w: 1 if w % 2 == 0 else -1})
    return corr * skein_bracket(pd)


def pd_code(p: PlanarLinkDiagram):
    """Extract (pd, free_loops) from a planar diagram by walking its components."""
    cross_index = {id(c): k for k, c in enumerate(p.crossings)}
    on_seg: dict[tuple, list] = {}
    for c in p.crossings:
        on_seg.setdefault(c.h, []).append(c)
        on_seg.setdefault(c.v, []).append(c)

    arc = 0
    free = 0
    info: list[dict] = [{} for _ in p.crossings]
    for cycle in p.components:
        passes = []  # (crossing index, role, direction)
        use_vertical = True
        for vertex in cycle:
            if use_vertical:
                sid = ("v", vertex[0])
                d = p.seg_dir[sid]
                here = sorted(on_seg.get(sid, ()), key=lambda c: c.y, reverse=d < 0)
                passes.extend((cross_index[id(c)], "under", d) for c in here)
            else:
                sid = ("h", vertex[1])
                d = p.seg_dir[sid]
                here = sorted(on_seg.get(sid, ()), key=lambda c: c.x, reverse=d < 0)
                passes.extend((cross_index[id(c)], "over", d) for c in here)
            use_vertical = not use_vertical
        if not passes:
            free += 1
            continue
        labels = list(range(arc + 1, arc + len(passes) + 1))
        arc += len(passes)
        for t, (k, role, d) in enumerate(passes):
            info[k][role] = (labels[t - 1], labels[t], d)  # (in-arc, out-arc, dir)

    pd = []
    for rec in info:
        u_in, u_out, u_dir = rec["under"]
        o_in, o_out, o_dir = rec["over"]
        port = {}
        if u_dir > 0:
            port["S"], port["N"] = u_in, u_out
        else:
            port["N"], port["S"] = u_in, u_out
        if o_dir > 0:
            port["W"], port["E"] = o_in, o_out
        else:
            port["E"], port["W"] = o_in, o_out
        if u_dir > 0:  # counterclockwise from the incoming under arc
            pd.append((port["S"], port["E"], port["N"], port["W"]))
        else:
            pd.append((port["N"], port["W"], port["S"], port["E"]))
    return pd, free


def brute_force_valid_cellsets(n: int):
    """All nonempty valid cell sets on the n x n grid by filtering every subset."""
    universe = [(i, j) for i in range(n) for j in range(n)]
    out = []
    for size in range(2, n * n + 1, 2):
        for subset in combinations(universe, size):
            ok = True
            for direction in range(3):
                counts = [0] * n
                for i, j in subset:
                    key = (i, j, (i + j) % n)[direction]
                    counts[key] += 1
                if any(c not in (0, 2) for c in counts):
                    ok = False
                    break
            if ok:
                out.append(frozenset(subset))
    return out


def random_two_permutation_grid(rng, n: int):
    """Random grid diagram: superposition of two disjoint permutations of range(n)."""
    while True:
        sigma = list(range(n))
        tau = list(range(n))
        rng.shuffle(sigma)
        rng.shuffle(tau)
        if all(sigma[i] != tau[i] for i in range(n)):
            return frozenset((i, sigma[i]) for i in range(n)) | frozenset(
                (i, tau[i]) for i in range(n)
            )
