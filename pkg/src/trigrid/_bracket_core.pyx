# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-sum kernel; see _bracket.py for the port model."""

from libc.stdlib cimport calloc, free


def state_counts(partner):
    """counts[a][loops] over all 2^c smoothing states."""
    cdef int c = len(partner) // 4
    cdef int nports = 4 * c
    cdef int max_loops = 2 * c if c else 0
    counts = [[0] * (max_loops + 1) for _ in range(c + 1)]
    if c == 0:
        counts[0][0] = 1
        return counts

    cdef int *part = <int *> calloc(nports, sizeof(int))
    cdef int *smooth = <int *> calloc(nports, sizeof(int))
    cdef unsigned char *visited = <unsigned char *> calloc(nports, 1)
    cdef long long *acc = <long long *> calloc((c + 1) * (max_loops + 1), sizeof(long long))
    if not (part and smooth and visited and acc):
        free(part); free(smooth); free(visited); free(acc)
        raise MemoryError()

    cdef int i, k, base, slot, a, loops, start, p, q
    cdef unsigned long long state, nstates
    for i in range(nports):
        part[i] = partner[i]

    # slot permutations for the two smoothings, order S,E,N,W
    cdef int apair[4]
    cdef int bpair[4]
    apair[0] = 1; apair[1] = 0; apair[2] = 3; apair[3] = 2
    bpair[0] = 3; bpair[1] = 2; bpair[2] = 1; bpair[3] = 0

    nstates = 1ULL << c
    state = 0
    try:
        while state < nstates:
            a = 0
            for k in range(c):
                base = 4 * k
                if (state >> k) & 1 == 0:
                    a += 1
                    for slot in range(4):
                        smooth[base + slot] = base + apair[slot]
                else:
                    for slot in range(4):
                        smooth[base + slot] = base + bpair[slot]
            loops = 0
            for i in range(nports):
                visited[i] = 0
            for start in range(nports):
                if visited[start]:
                    continue
                loops += 1
                p = start
                while not visited[p]:
                    visited[p] = 1
                    q = smooth[p]
                    visited[q] = 1
                    p = part[q]
            acc[a * (max_loops + 1) + loops] += 1
            state += 1
        for a in range(c + 1):
            row = counts[a]
            for loops in range(max_loops + 1):
                if acc[a * (max_loops + 1) + loops]:
                    row[loops] = acc[a * (max_loops + 1) + loops]
    finally:
        free(part); free(smooth); free(visited); free(acc)
    return counts
