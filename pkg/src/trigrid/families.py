"""Deterministic generators for the named diagram families and the pushoff."""

from __future__ import annotations

from fractions import Fraction

from .core import (
    CombinatorialTGD,
    GeometricTGD,
    GridDiagram,
    validate_combinatorial,
    validate_geometric,
)
from .errors import InvalidParameter


def example_n2() -> CombinatorialTGD:
    """The unique grid-number-2 diagram: the full 2x2 square."""
    return validate_combinatorial(2, [(0, 0), (0, 1), (1, 0), (1, 1)])


def example_n3() -> CombinatorialTGD:
    """The canonical grid-number-3 diagram: complement of the main diagonal."""
    cells = [(i, j) for i in range(3) for j in range(3) if i != j]
    return validate_combinatorial(3, cells)


def staircase(n: int) -> CombinatorialTGD:
    """2n points {(i, i)} and {(i, i+1 mod n)}: one grid shows a staircase."""
    if n < 2:
        raise InvalidParameter("staircase needs n >= 2")
    cells = [(i, i) for i in range(n)] + [(i, (i + 1) % n) for i in range(n)]
    return validate_combinatorial(n, cells)


def squares_antidiagonal(k: int) -> CombinatorialTGD:
    """k disjoint squares on a 2k x 2k grid, one per pair of diagonal classes; k odd.

    Each square uses columns {t, t+k} and rows {t, t+k}, so all four diagonal
    partners stay inside the square and its graph is a K4.  The diagonal
    classes 2t mod 2k are pairwise distinct exactly when k is odd, which is
    why the family needs odd k.
    """
    if k < 1 or k % 2 == 0:
        raise InvalidParameter("squares family needs odd k >= 1")
    n = 2 * k
    cells = []
    for t in range(k):
        for di in (0, k):
            for dj in (0, k):
                cells.append((t + di, t + dj))
    return validate_combinatorial(n, cells)


def pushoff(g: GridDiagram) -> GeometricTGD:
    """Geometric diagram of a grid link together with its northwest pushoff.

    Grid lines are perturbed so that every original point sits on its own
    diagonal; each point P then gets a copy P' = P + (-delta, delta) sharing
    exactly that diagonal, so the gamma-pairing joins each point to its copy.
    """
    n = g.n
    if n < 1 or not g.points:
        raise InvalidParameter("pushoff needs a nonempty grid")
    eps = Fraction(1, 64 * n**3)
    delta = eps**3
    points = []
    for i, j in g.points:
        x = Fraction(4 * i + 1, 4 * n) + i * eps
        y = Fraction(4 * j + 1, 4 * n) + j * eps**2
        points.append((x, y))
        points.append((x - delta, y + delta))
    return validate_geometric(points)
