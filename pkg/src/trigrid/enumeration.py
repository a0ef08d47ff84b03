"""Exhaustive enumeration of nonempty diagrams with isomorph rejection.

Search state is the per-column and per-diagonal running counts, filled one row
at a time (a row is either empty or a pair of columns).  Branches are pruned
when a line count exceeds 2 or when the deficient lines can no longer be
completed by the remaining rows.  Orbits are collapsed by full canonical form.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .core import CombinatorialTGD, SymmetryGroup, canonicalize, orbit
from .links import DEFAULT_CROSSING_BOUND
from .surfaces import SurfaceReport, classify, fillability_status

FILTER_NAMES = (
    "simple",
    "lagrangian-eligible",
    "immersed-eligible",
    "orientable",
    "nonorientable",
    "connected",
)


@dataclass(frozen=True)
class EnumerationOptions:
    n: int
    b_range: tuple[int, int] | None = None
    symmetry: SymmetryGroup = SymmetryGroup.TRANSLATIONS
    filters: tuple[str, ...] = ()
    node_budget: int = 10**8
    time_budget: float = 60.0
    crossing_bound: int = DEFAULT_CROSSING_BOUND

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.node_budget <= 0 or self.time_budget <= 0:
            raise ValueError("budgets must be positive")
        for f in self.filters:
            if f not in FILTER_NAMES:
                raise ValueError(f"unknown filter {f!r}")


@dataclass
class Budget:
    node_budget: int
    time_budget: float
    nodes: int = 0
    start: float = field(default_factory=time.monotonic)
    exhausted: bool = False

    def tick(self) -> bool:
        """Charge one node; False once a budget is exhausted."""
        if self.exhausted:
            return False
        self.nodes += 1
        if self.nodes > self.node_budget:
            self.exhausted = True
        elif self.nodes % 4096 == 0 and time.monotonic() - self.start > self.time_budget:
            self.exhausted = True
        return not self.exhausted


def _raw_search(n: int, b_max: int | None, budget: Budget, first_choices=None):
    """Yield all nonempty valid cell sets (as sorted tuples), rows top to bottom.

    first_choices restricts the configuration of row 0, which is how the
    search tree is partitioned across workers.
    """
    col = [0] * n
    diag = [0] * n
    cells: list[tuple[int, int]] = []
    row_choices = [None] + list(combinations(range(n), 2))

    def deficient_ok(rows_left: int) -> bool:
        need_c = sum(1 for c in col if c == 1)
        need_d = sum(1 for c in diag if c == 1)
        return need_c <= 2 * rows_left and need_d <= 2 * rows_left

    def rec(j: int):
        if not budget.tick():
            return
        if j == n:
            if cells and all(c != 1 for c in col) and all(c != 1 for c in diag):
                yield tuple(sorted(cells))
            return
        rows_left = n - j
        if not deficient_ok(rows_left):
            return
        choices = row_choices if (j > 0 or first_choices is None) else first_choices
        for choice in choices:
            if choice is None:
                yield from rec(j + 1)
                continue
            if b_max is not None and len(cells) + 2 > 2 * b_max:
                continue
            c1, c2 = choice
            d1, d2 = (c1 + j) % n, (c2 + j) % n
            col[c1] += 1
            col[c2] += 1
            diag[d1] += 1
            diag[d2] += 1
            if col[c1] <= 2 and col[c2] <= 2 and diag[d1] <= 2 and diag[d2] <= 2:
                cells.append((c1, j))
                cells.append((c2, j))
                yield from rec(j + 1)
                cells.pop()
                cells.pop()
            col[c1] -= 1
            col[c2] -= 1
            diag[d1] -= 1
            diag[d2] -= 1

    yield from rec(0)


@dataclass(frozen=True)
class Analysis:
    diagram: CombinatorialTGD
    report: SurfaceReport
    evidence: tuple


def analyze(d: CombinatorialTGD, crossing_bound: int = DEFAULT_CROSSING_BOUND) -> Analysis:
    status, evidence = fillability_status(d, crossing_bound)
    report = classify(d)
    report = SurfaceReport(
        components=report.components,
        b=report.b,
        faces=report.faces,
        face_split=report.face_split,
        orientable=report.orientable,
        euler_closed=report.euler_closed,
        status=status,
    )
    return Analysis(diagram=d, report=report, evidence=tuple(evidence))


def _passes_filters(analysis: Analysis, filters: tuple[str, ...]) -> bool:
    rep = analysis.report
    for f in filters:
        if f == "simple" and rep.status not in ("simple", "lagrangian-eligible"):
            return False
        if f == "lagrangian-eligible" and rep.status != "lagrangian-eligible":
            return False
        if f == "immersed-eligible" and not all(
            r == 0 for e in analysis.evidence for r in e.rot
        ):
            return False
        if f == "orientable" and not rep.orientable:
            return False
        if f == "nonorientable" and rep.orientable:
            return False
        if f == "connected" and len(rep.components) != 1:
            return False
    return True


@dataclass
class EnumerationResult:
    options: EnumerationOptions
    diagrams: list[CombinatorialTGD]  # one canonical representative per orbit
    raw_multiplicity: dict[tuple, int]  # canonical cell tuple -> raw diagram count
    complete: bool
    nodes: int

    @property
    def raw_count(self) -> int:
        return sum(self.raw_multiplicity.values())


def _raw_diagrams(opts: EnumerationOptions, budget: Budget, jobs: int):
    b_max = opts.b_range[1] if opts.b_range else None
    if jobs <= 1:
        yield from _raw_search(opts.n, b_max, budget)
        return
    # partition the search tree by first-row configuration; the merged output
    # is sorted downstream, so it is independent of the partitioning
    from concurrent.futures import ThreadPoolExecutor
    from itertools import combinations as _comb

    choices = [None] + list(_comb(range(opts.n), 2))
    chunks = [choices[k::jobs] for k in range(jobs)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(lambda ch: list(_raw_search(opts.n, b_max, budget, ch)), chunk)
            for chunk in chunks
            if chunk
        ]
        for fut in futures:
            yield from fut.result()


def enumerate_diagrams(opts: EnumerationOptions, jobs: int = 1) -> EnumerationResult:
    """One canonical representative per symmetry orbit, lexicographically sorted."""
    budget = Budget(opts.node_budget, opts.time_budget)
    b_min = opts.b_range[0] if opts.b_range else None
    mult: dict[tuple, int] = {}
    reps: dict[tuple, CombinatorialTGD] = {}
    for cells in _raw_diagrams(opts, budget, jobs):
        if b_min is not None and len(cells) < 2 * b_min:
            continue
        d = CombinatorialTGD(n=opts.n, cells=frozenset(cells))
        rep = canonicalize(d, opts.symmetry)
        key = rep.sorted_cells()
        mult[key] = mult.get(key, 0) + 1
        reps[key] = rep

    diagrams = [reps[k] for k in sorted(reps)]
    if opts.filters:
        kept = []
        for d in diagrams:
            if _passes_filters(analyze(d, opts.crossing_bound), opts.filters):
                kept.append(d)
            else:
                mult.pop(d.sorted_cells(), None)
        diagrams = kept
    return EnumerationResult(
        options=opts,
        diagrams=diagrams,
        raw_multiplicity=mult,
        complete=not budget.exhausted,
        nodes=budget.nodes,
    )


@dataclass
class CensusRow:
    b: int
    orientable: bool
    euler_closed: int
    status: str
    orbits: int
    raw: int


@dataclass
class CensusResult:
    options: EnumerationOptions
    rows: list[CensusRow]
    complete: bool
    nodes: int


def census(opts: EnumerationOptions, jobs: int = 1) -> CensusResult:
    """Orbit and raw counts stratified by (b, orientable, chi, status)."""
    enum = enumerate_diagrams(opts, jobs=jobs)
    table: dict[tuple, list[int]] = {}
    for d in enum.diagrams:
        a = analyze(d, opts.crossing_bound)
        key = (a.report.b, a.report.orientable, a.report.euler_closed, a.report.status)
        cell = table.setdefault(key, [0, 0])
        cell[0] += 1
        cell[1] += enum.raw_multiplicity[d.sorted_cells()]
    rows = [
        CensusRow(b=k[0], orientable=k[1], euler_closed=k[2], status=k[3], orbits=v[0], raw=v[1])
        for k, v in sorted(table.items())
    ]
    return CensusResult(options=opts, rows=rows, complete=enum.complete, nodes=enum.nodes)


@dataclass
class WitnessResult:
    diagram: CombinatorialTGD | None
    complete: bool
    nodes: int


def find_witness(predicate, opts: EnumerationOptions, jobs: int = 1) -> WitnessResult:
    """First canonical diagram whose analysis satisfies the predicate.

    predicate receives an Analysis (diagram, surface report with status, link
    evidence) and returns a bool.
    """
    enum = enumerate_diagrams(opts, jobs=jobs)
    for d in enum.diagrams:
        if predicate(analyze(d, opts.crossing_bound)):
            return WitnessResult(diagram=d, complete=enum.complete, nodes=enum.nodes)
    return WitnessResult(diagram=None, complete=enum.complete, nodes=enum.nodes)


def orbit_size(d: CombinatorialTGD, group: SymmetryGroup) -> int:
    return len(orbit(d, group))
