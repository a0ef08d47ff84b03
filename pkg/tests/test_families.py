from fractions import Fraction

import pytest

from trigrid import (
    InvalidParameter,
    classify,
    classify_geometric,
    example_n2,
    example_n3,
    geometric_grids,
    link_evidence,
    pushoff,
    squares_antidiagonal,
    staircase,
    three_grids,
    validate_combinatorial,
)


def test_example_sizes():
    assert (example_n2().n, example_n2().b) == (2, 2)
    assert (example_n3().n, example_n3().b) == (3, 3)


def test_staircase_is_valid_and_has_2n_points():
    for n in range(2, 9):
        d = staircase(n)
        assert d.b == n
        assert validate_combinatorial(d.n, d.cells).cells == d.cells


def test_staircase_parity_dichotomy():
    for n in (2, 4, 6):
        rep = classify(staircase(n))
        assert not rep.orientable and rep.euler_closed == 1
    for n in (3, 5, 7):
        rep = classify(staircase(n))
        assert rep.orientable and rep.euler_closed == 3 - n


def test_staircase_tb_values():
    for n in (2, 3, 4, 6):
        assert all(t == -1 for e in link_evidence(staircase(n)) for t in e.tb)
    for n in (5, 7):
        assert any(t != -1 for e in link_evidence(staircase(n)) for t in e.tb)


def test_squares_structure():
    for k in (1, 3, 5):
        d = squares_antidiagonal(k)
        assert d.n == 2 * k and d.b == 2 * k
        rep = classify(d)
        assert len(rep.components) == k
        assert all(not c.orientable and c.euler_closed == 1 for c in rep.components)


def test_squares_rejects_even_k():
    for k in (0, 2, 4, -1):
        with pytest.raises(InvalidParameter):
            squares_antidiagonal(k)


def test_staircase_rejects_small_n():
    with pytest.raises(InvalidParameter):
        staircase(1)


def test_pushoff_doubles_points_and_validates():
    g = three_grids(example_n3())[0]
    geo = pushoff(g)
    assert len(geo.points) == 2 * len(g.points)
    # every diagonal line of the geometric diagram joins a point to its copy
    delta = Fraction(1, (64 * g.n**3) ** 3)
    for _, (p, q) in geo.diagonal_pairs().items():
        assert abs(p[0] - q[0]) == delta and abs(p[1] - q[1]) == delta


def test_pushoff_ab_grid_doubles_each_component():
    g = three_grids(example_n3())[0]
    gab = geometric_grids(pushoff(g))[0]
    assert gab.b == 2 * g.b
    rep = classify_geometric(pushoff(g))
    assert rep.b == 2 * g.b


def test_pushoff_rejects_empty():
    from trigrid import GridDiagram

    with pytest.raises(InvalidParameter):
        pushoff(GridDiagram(n=2, points=frozenset()))
