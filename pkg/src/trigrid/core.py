"""Diagram data types, validation, the order-3 color rotation and canonical forms.

A combinatorial triple grid diagram lives on the n x n torus grid: every
column, row and anti-diagonal (cells with equal (i + j) mod n) carries 0 or 2
marked cells.  A geometric diagram is a finite set of exact-rational points on
the unit torus with the same 0-or-2 condition on vertical, horizontal and
slope -1 lines.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DuplicateCell,
    DuplicatePoint,
    LineCountViolation,
    UnpairedPoint,
)

Cell = tuple[int, int]
Point = tuple[Fraction, Fraction]

# ordered color pair labels for the three derived grids
LABELS = ("ab", "bc", "ca")


class SymmetryGroup(enum.Enum):
    NONE = "none"
    TRANSLATIONS = "translations"
    TRANSLATIONS_ROTATION = "translations-and-rotation"
    TRANSLATIONS_ROTATION_REFLECTION = "translations-rotation-reflection"

    @classmethod
    def from_flag(cls, flag: str) -> "SymmetryGroup":
        aliases = {
            "none": cls.NONE,
            "t": cls.TRANSLATIONS,
            "tr": cls.TRANSLATIONS_ROTATION,
            "trr": cls.TRANSLATIONS_ROTATION_REFLECTION,
        }
        if flag in aliases:
            return aliases[flag]
        return cls(flag)


@dataclass(frozen=True)
class CombinatorialTGD:
    """Validated combinatorial triple grid diagram (construct via validate_combinatorial)."""

    n: int
    cells: frozenset[Cell]

    @property
    def b(self) -> int:
        return len(self.cells) // 2

    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def __repr__(self) -> str:
        return f"CombinatorialTGD(n={self.n}, cells={sorted(self.cells)})"


@dataclass(frozen=True)
class GridDiagram:
    """Two-color grid: every column and row carries 0 or 2 points."""

    n: int
    points: frozenset[Cell]
    label: str = "ab"

    @property
    def b(self) -> int:
        return len(self.points) // 2

    def sorted_points(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.points))

    def column_pairs(self) -> dict[int, tuple[int, int]]:
        """column index -> (low row, high row) for occupied columns."""
        cols: dict[int, list[int]] = {}
        for i, j in self.points:
            cols.setdefault(i, []).append(j)
        return {i: (min(js), max(js)) for i, js in cols.items()}

    def row_pairs(self) -> dict[int, tuple[int, int]]:
        """row index -> (low col, high col) for occupied rows."""
        rows: dict[int, list[int]] = {}
        for i, j in self.points:
            rows.setdefault(j, []).append(i)
        return {j: (min(iis), max(iis)) for j, iis in rows.items()}

    def compact(self) -> "GridDiagram":
        """Delete empty columns and rows, re-ranking the occupied lines."""
        cols = sorted({i for i, _ in self.points})
        rows = sorted({j for _, j in self.points})
        ci = {c: k for k, c in enumerate(cols)}
        ri = {r: k for k, r in enumerate(rows)}
        pts = frozenset((ci[i], ri[j]) for i, j in self.points)
        return GridDiagram(n=max(len(cols), len(rows), 1) if self.points else 0, points=pts, label=self.label)

    def __repr__(self) -> str:
        return f"GridDiagram(n={self.n}, label={self.label!r}, points={sorted(self.points)})"


def validate_grid(n: int, points: Iterable[Cell], label: str = "ab") -> GridDiagram:
    pts = list(points)
    seen = set()
    for p in pts:
        if p in seen:
            raise DuplicateCell(p)
        seen.add(p)
    for i, j in seen:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"point {(i, j)} outside {n}x{n} grid")
    for direction, coord in (("column", 0), ("row", 1)):
        counts: dict[int, int] = {}
        for p in seen:
            counts[p[coord]] = counts.get(p[coord], 0) + 1
        for idx in range(n):
            c = counts.get(idx, 0)
            if c not in (0, 2):
                raise LineCountViolation(direction, idx, c)
    return GridDiagram(n=n, points=frozenset(seen), label=label)


@dataclass(frozen=True)
class GeometricTGD:
    """Validated geometric triple grid diagram (construct via validate_geometric)."""

    points: tuple[Point, ...]

    @property
    def b(self) -> int:
        return len(self.points) // 2

    def column_pairs(self) -> dict[Fraction, tuple[Point, Point]]:
        return _pair_by(self.points, lambda p: p[0])

    def row_pairs(self) -> dict[Fraction, tuple[Point, Point]]:
        return _pair_by(self.points, lambda p: p[1])

    def diagonal_pairs(self) -> dict[Fraction, tuple[Point, Point]]:
        return _pair_by(self.points, lambda p: (p[0] + p[1]) % 1)


def _pair_by(points, key):
    classes: dict[Fraction, list[Point]] = {}
    for p in points:
        classes.setdefault(key(p), []).append(p)
    return {k: (min(v), max(v)) for k, v in classes.items()}


# ---------------------------------------------------------------------------
# combinatorial operations


def validate_combinatorial(n: int, cells: Iterable[Cell]) -> CombinatorialTGD:
    """Check the three 0-or-2 line conditions and return the diagram.

    Columns are checked first, then rows, then diagonals; the first violated
    line is reported.
    """
    if n < 1:
        raise ValueError("grid number must be >= 1")
    cell_list = [tuple(c) for c in cells]
    seen: set[Cell] = set()
    for c in cell_list:
        if c in seen:
            raise DuplicateCell(c)
        seen.add(c)
    for i, j in seen:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"cell {(i, j)} outside {n}x{n} grid (reduce mod n first)")
    keys = (
        ("column", lambda c: c[0]),
        ("row", lambda c: c[1]),
        ("diagonal", lambda c: (c[0] + c[1]) % n),
    )
    for direction, key in keys:
        counts = [0] * n
        for c in seen:
            counts[key(c)] += 1
        for idx in range(n):
            if counts[idx] not in (0, 2):
                raise LineCountViolation(direction, idx, counts[idx])
    return CombinatorialTGD(n=n, cells=frozenset(seen))


def _rotate_cell(n: int, cell: Cell) -> Cell:
    i, j = cell
    return (j, (n - 1 - (i + j)) % n)


def rotate_colors(d: CombinatorialTGD) -> CombinatorialTGD:
    """Order-3 torus automorphism cycling columns -> rows -> diagonals -> columns."""
    return CombinatorialTGD(n=d.n, cells=frozenset(_rotate_cell(d.n, c) for c in d.cells))


def three_grids(d: CombinatorialTGD) -> tuple[GridDiagram, GridDiagram, GridDiagram]:
    """The row-column, column-diagonal and diagonal-row grid diagrams."""
    d1 = rotate_colors(d)
    d2 = rotate_colors(d1)
    return (
        GridDiagram(n=d.n, points=d.cells, label="ab"),
        GridDiagram(n=d.n, points=d1.cells, label="bc"),
        GridDiagram(n=d.n, points=d2.cells, label="ca"),
    )


def to_geometric(d: CombinatorialTGD) -> GeometricTGD:
    """Place each cell's point at the lower-left quarter of its lower-left triangle."""
    n = d.n
    pts = tuple(
        sorted((Fraction(4 * i + 1, 4 * n), Fraction(4 * j + 1, 4 * n)) for i, j in d.cells)
    )
    return GeometricTGD(points=pts)


def validate_geometric(points: Iterable[Point]) -> GeometricTGD:
    pts = [(Fraction(x) % 1, Fraction(y) % 1) for x, y in points]
    seen: set[Point] = set()
    for p in pts:
        if p in seen:
            raise DuplicatePoint(p)
        seen.add(p)
    keys = (
        ("vertical", lambda p: p[0]),
        ("horizontal", lambda p: p[1]),
        ("diagonal", lambda p: (p[0] + p[1]) % 1),
    )
    for direction, key in keys:
        counts: dict[Fraction, int] = {}
        for p in seen:
            counts[key(p)] = counts.get(key(p), 0) + 1
        for value in sorted(counts):
            if counts[value] != 2:
                raise UnpairedPoint(direction, value)
    return GeometricTGD(points=tuple(sorted(seen)))


def geometric_rotate(g: GeometricTGD) -> GeometricTGD:
    """Order-3 automorphism (x, y) -> (y, (-x - y) mod 1)."""
    return GeometricTGD(points=tuple(sorted((y, (-x - y) % 1) for x, y in g.points)))


def geometric_grids(g: GeometricTGD) -> tuple[GridDiagram, GridDiagram, GridDiagram]:
    """Rank-compressed grid diagrams of g and its two rotations."""
    out = []
    cur = g
    for label in LABELS:
        xs = sorted({x for x, _ in cur.points})
        ys = sorted({y for _, y in cur.points})
        xi = {x: k for k, x in enumerate(xs)}
        yi = {y: k for k, y in enumerate(ys)}
        pts = frozenset((xi[x], yi[y]) for x, y in cur.points)
        out.append(GridDiagram(n=len(xs), points=pts, label=label))
        cur = geometric_rotate(cur)
    return tuple(out)


# ---------------------------------------------------------------------------
# canonical forms


def _transformed_cellsets(d: CombinatorialTGD, group: SymmetryGroup):
    """All images of the cell set under the chosen group, as sorted tuples."""
    n = d.n
    base = [tuple(d.cells)]
    if group in (SymmetryGroup.TRANSLATIONS_ROTATION, SymmetryGroup.TRANSLATIONS_ROTATION_REFLECTION):
        c1 = tuple(_rotate_cell(n, c) for c in base[0])
        c2 = tuple(_rotate_cell(n, c) for c in c1)
        base = [base[0], c1, c2]
    if group is SymmetryGroup.TRANSLATIONS_ROTATION_REFLECTION:
        base = base + [tuple((j, i) for i, j in cs) for cs in base]
    for cs in base:
        if group is SymmetryGroup.NONE:
            yield tuple(sorted(cs))
            return
        for a in range(n):
            for b in range(n):
                yield tuple(sorted(((i + a) % n, (j + b) % n) for i, j in cs))


def canonicalize(d: CombinatorialTGD, group: SymmetryGroup) -> CombinatorialTGD:
    """Lexicographically smallest cell set over the orbit of d under the group."""
    if group is SymmetryGroup.NONE:
        return d
    best = min(_transformed_cellsets(d, group))
    return CombinatorialTGD(n=d.n, cells=frozenset(best))


def orbit(d: CombinatorialTGD, group: SymmetryGroup) -> set[tuple[Cell, ...]]:
    """Distinct cell sets in the orbit of d (as sorted tuples)."""
    return set(_transformed_cellsets(d, group))
