"""Benchmark the compiled bracket kernel against the pure-Python fallback.

Usage: python benchmarks/bench_bracket.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import random

from trigrid import geometric_grids, planar_diagram, pushoff, validate_grid
from trigrid._bracket import HAVE_COMPILED, state_counts_py
from trigrid.links import _port_model

TREFOIL = {(0, 0), (0, 2), (1, 1), (1, 3), (2, 2), (2, 4), (3, 0), (3, 3), (4, 1), (4, 4)}


def _dense_grid(n: int, seed: int, target: int):
    """Seeded two-permutation grid with at least `target` crossings."""
    rng = random.Random(seed)
    while True:
        sigma = list(range(n))
        tau = list(range(n))
        rng.shuffle(sigma)
        rng.shuffle(tau)
        if any(sigma[i] == tau[i] for i in range(n)):
            continue
        pts = {(i, sigma[i]) for i in range(n)} | {(i, tau[i]) for i in range(n)}
        g = validate_grid(n, pts)
        if len(planar_diagram(g).crossings) >= target:
            return g


def cases():
    yield "trefoil (3 crossings)", validate_grid(5, TREFOIL)
    yield "dense 7x7 grid", _dense_grid(7, 1, 12)
    yield "trefoil pushoff ab grid", geometric_grids(pushoff(validate_grid(5, TREFOIL)))[0]
    yield "dense 9x9 grid", _dense_grid(9, 5, 18)


def timed(fn, partner, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(partner)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not HAVE_COMPILED:
        print("compiled kernel not available; benchmarking pure Python only")
    print(f"{'case':<28} {'crossings':>9} {'pure (s)':>10} {'compiled (s)':>12} {'speedup':>8}")
    for name, g in cases():
        p = planar_diagram(g)
        partner, _ = _port_model(p)
        c = len(p.crossings)
        t_pure, r_pure = timed(state_counts_py, partner, args.repeat)
        if HAVE_COMPILED:
            from trigrid._bracket_core import state_counts as compiled

            t_fast, r_fast = timed(compiled, partner, args.repeat)
            assert r_fast == r_pure, f"kernel mismatch on {name}"
            print(f"{name:<28} {c:>9} {t_pure:>10.4f} {t_fast:>12.4f} {t_pure / t_fast:>7.1f}x")
        else:
            print(f"{name:<28} {c:>9} {t_pure:>10.4f} {'-':>12} {'-':>8}")


if __name__ == "__main__":
    main()
