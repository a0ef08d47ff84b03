"""State-sum kernel for the Kauffman bracket.

The diagram is flattened to a port model: crossing k owns ports 4k..4k+3 in
the order S, E, N, W (south/east on the under-strand/over-strand).  ``partner``
maps each port to the port joined to it by an arc of the diagram.  A smoothing
state pairs the ports of every crossing either A-wise (S-E, N-W) or B-wise
(S-W, E-N); the loops of a state are the cycles of the composed pairing.

The kernel returns an integer matrix counts[a][loops] = number of states with
`a` A-smoothings and `loops` loops.  The compiled version in _bracket_core.pyx
is preferred; this module provides the pure-Python fallback and selects the
implementation at import time.
"""

from __future__ import annotations

S, E, N, W = 0, 1, 2, 3

_A_PAIR = (E, S, W, N)  # A-smoothing: S<->E, N<->W
_B_PAIR = (W, N, E, S)  # B-smoothing: S<->W, E<->N


def state_counts_py(partner: list[int]) -> list[list[int]]:
    """counts[a][loops] over all 2^c states; partner has length 4c."""
    c = len(partner) // 4
    nports = 4 * c
    max_loops = 2 * c if c else 0
    counts = [[0] * (max_loops + 1) for _ in range(c + 1)]
    if c == 0:
        counts[0][0] = 1
        return counts
    smooth = [0] * nports
    for state in range(1 << c):
        a = 0
        for k in range(c):
            base = 4 * k
            pair = _A_PAIR if (state >> k) & 1 == 0 else _B_PAIR
            if (state >> k) & 1 == 0:
                a += 1
            for slot in range(4):
                smooth[base + slot] = base + pair[slot]
        loops = 0
        visited = [False] * nports
        for start in range(nports):
            if visited[start]:
                continue
            loops += 1
            p = start
            while not visited[p]:
                visited[p] = True
                q = smooth[p]
                visited[q] = True
                p = partner[q]
        counts[a][loops] += 1
    return counts


try:  # compiled kernel, optional
    from ._bracket_core import state_counts as _state_counts_c

    HAVE_COMPILED = True

    def state_counts(partner: list[int]) -> list[list[int]]:
        return _state_counts_c(partner)

except ImportError:  # pragma: no cover - depends on build environment
    HAVE_COMPILED = False
    state_counts = state_counts_py
