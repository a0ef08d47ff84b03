"""End-to-end acceptance checks; each test prints a single pass/fail line."""

import random
import sys
import time

from conftest import (
    ACCEPTANCE_LINES,
    TREFOIL_GRID_POINTS,
    TREFOIL_PD,
    brute_force_valid_cellsets,
    pd_code,
    pd_normalized,
    random_two_permutation_grid,
    skein_bracket,
)

from trigrid import (
    CombinatorialTGD,
    EnumerationOptions,
    SymmetryGroup,
    canonicalize,
    classify,
    cyclic_permute,
    enumerate_diagrams,
    example_n2,
    example_n3,
    geometric_grids,
    kauffman_bracket,
    legendrian_invariants,
    link_evidence,
    linking_matrix,
    normalized_bracket,
    planar_diagram,
    pushoff,
    rotate_colors,
    rp2_embeddable,
    squares_antidiagonal,
    staircase,
    three_grids,
    unlink_certificate,
    validate_grid,
    xo_placement,
)
from trigrid.enumeration import analyze
from trigrid.links import component_grid
from trigrid.surfaces import graph_of, is_bipartite


def _verdict(number: int, title: str, ok: bool) -> None:
    line = f"acceptance {number:02d} ({title}): {'PASS' if ok else 'FAIL'}"
    ACCEPTANCE_LINES.append(line)
    print(line, file=sys.stderr)
    assert ok, f"acceptance criterion {number} failed"


def _enumerate_upto(n_max: int):
    for n in range(2, n_max + 1):
        result = enumerate_diagrams(
            EnumerationOptions(n=n, symmetry=SymmetryGroup.TRANSLATIONS_ROTATION_REFLECTION)
        )
        assert result.complete
        yield from result.diagrams


def test_01_uniqueness_at_small_grid_number():
    t0 = time.monotonic()
    checks = []
    for group in SymmetryGroup:
        r = enumerate_diagrams(EnumerationOptions(n=2, symmetry=group))
        checks.append(len(r.diagrams) == 1)
    r3 = enumerate_diagrams(EnumerationOptions(n=3, symmetry=SymmetryGroup.TRANSLATIONS))
    checks.append(len(r3.diagrams) == 1)
    checks.append(r3.raw_count == 3)
    checks.append(time.monotonic() - t0 < 1.0)
    _verdict(1, "uniqueness at n=2 and n=3", all(checks))


def test_02_the_2x2_diagram():
    d = example_n2()
    evidence = link_evidence(d)
    rep = classify(d)
    ok = (
        all(e.n_components == 1 for e in evidence)
        and all(e.verdict == "certified_unlink_heuristic" for e in evidence)
        and all(t == -1 for e in evidence for t in e.tb)
        and all(r == 0 for e in evidence for r in e.rot)
        and not rep.orientable
        and rep.euler_closed == 1
        and rep.components[0].name == "RP^2"
        and analyze(d).report.status == "lagrangian-eligible"
    )
    _verdict(2, "2x2 diagram is a lagrangian-eligible RP^2", ok)


def test_03_the_3x3_diagram():
    d = example_n3()
    evidence = link_evidence(d)
    rep = classify(d)
    ok = (
        all(e.n_components == 1 for e in evidence)
        and all(e.tb == (-1,) for e in evidence)
        and all(e.verdict == "certified_unlink_heuristic" for e in evidence)
        and rep.orientable
        and rep.euler_closed == 0
        and rep.components[0].name == "T^2"
        and analyze(d).report.status == "lagrangian-eligible"
    )
    _verdict(3, "3x3 diagram is a lagrangian-eligible T^2", ok)


def test_04_staircase_family():
    t0 = time.monotonic()
    checks = []
    for n in (2, 4, 6):
        rep = classify(staircase(n))
        evidence = link_evidence(staircase(n))
        checks.append(not rep.orientable and rep.euler_closed == 1)
        checks.append(all(t == -1 for e in evidence for t in e.tb))
    for n in (3, 5, 7):
        rep = classify(staircase(n))
        checks.append(rep.orientable and rep.euler_closed == 3 - n)
    for n in (5, 7):
        evidence = link_evidence(staircase(n))
        checks.append(any(t != -1 for e in evidence for t in e.tb))
    checks.append(time.monotonic() - t0 < 5.0)
    _verdict(4, "staircase family dichotomy", all(checks))


def test_05_square_family():
    checks = []
    for k in (1, 3, 5):
        d = squares_antidiagonal(k)
        rep = classify(d)
        checks.append(len(rep.components) == k)
        checks.append(all(not c.orientable and c.euler_closed == 1 for c in rep.components))
        link_comps = sum(planar_diagram(g).n_components for g in three_grids(d))
        checks.append(link_comps == 3 * k)
    _verdict(5, "square family components", all(checks))


def test_06_pushoff_construction():
    t0 = time.monotonic()
    src = validate_grid(5, TREFOIL_GRID_POINTS)
    src_tb = legendrian_invariants(src)[0].tb
    gab, gbc, gca = geometric_grids(pushoff(src))
    pab = planar_diagram(gab)
    checks = [pab.n_components == 2]
    brackets = [
        kauffman_bracket(planar_diagram(component_grid(pab, k)))
        for k in range(pab.n_components)
    ]
    checks.append(brackets[0] == brackets[1])
    checks.append(linking_matrix(pab)[0][1] == src_tb)
    for g in (gbc, gca):
        p = planar_diagram(g)
        checks.append(unlink_certificate(p) == "certified_unlink_heuristic")
        checks.append(all(inv.tb == -1 for inv in legendrian_invariants(g)))
    checks.append(time.monotonic() - t0 < 10.0)
    _verdict(6, "trefoil pushoff", all(checks))


def test_07_euler_characteristic_identity():
    ok = True
    for d in _enumerate_upto(4):
        graph = graph_of(d)
        v = len(graph.vertices)
        e = 3 * v // 2
        f = classify(d).faces
        chi_graph = v - e + f
        comps = sum(planar_diagram(g).n_components for g in three_grids(d))
        ok = ok and chi_graph == comps - d.b
    _verdict(7, "chi = c1 + c2 + c3 - b for all n <= 4", ok)


def test_08_orientability_equivalence():
    ok = True
    for d in _enumerate_upto(4):
        ok = ok and (xo_placement(d) is not None) == is_bipartite(graph_of(d))
    _verdict(8, "xo placement iff bipartite for all n <= 4", ok)


def test_09_order_three_structure():
    ok = True
    for d in _enumerate_upto(4):
        r1 = rotate_colors(d)
        ok = ok and rotate_colors(rotate_colors(r1)).cells == d.cells
        shifted = [g.points for g in three_grids(r1)]
        base = [g.points for g in three_grids(d)]
        ok = ok and shifted == base[1:] + base[:1]
    rng = random.Random(20260824)
    for _ in range(200):
        n = rng.randrange(3, 7)
        g = validate_grid(n, random_two_permutation_grid(rng, n))
        tb = sorted(i.tb for i in legendrian_invariants(g))
        ra = sorted(i.rot_abs for i in legendrian_invariants(g))
        moved = cyclic_permute(g, rng.randrange(n), rng.randrange(n))
        ok = ok and sorted(i.tb for i in legendrian_invariants(moved)) == tb
        ok = ok and sorted(i.rot_abs for i in legendrian_invariants(moved)) == ra
    _verdict(9, "order-3 rotation and torus-translation invariance", ok)


def test_10_oracle_equivalences():
    t0 = time.monotonic()
    ok = True
    # (a) enumeration vs brute-force subset filtering
    for n in (2, 3):
        raw = brute_force_valid_cellsets(n)
        group = SymmetryGroup.TRANSLATIONS
        expected = sorted(
            {canonicalize(CombinatorialTGD(n=n, cells=c), group).sorted_cells() for c in raw}
        )
        result = enumerate_diagrams(EnumerationOptions(n=n, symmetry=group))
        ok = ok and [d.sorted_cells() for d in result.diagrams] == expected
        ok = ok and result.raw_count == len(raw)
    # (b) bracket vs recursive skein oracle on the <= 8 crossing corpus
    corpus = [
        g
        for d in (example_n2(), example_n3(), staircase(4), staircase(5), squares_antidiagonal(3))
        for g in three_grids(d)
    ]
    corpus.append(validate_grid(5, TREFOIL_GRID_POINTS))
    checked = 0
    for g in corpus:
        p = planar_diagram(g)
        if len(p.crossings) > 8:
            continue
        pd, free = pd_code(p)
        ok = ok and kauffman_bracket(p) == skein_bracket(pd, free)
        checked += 1
    ok = ok and checked >= 10
    # (c) trefoil grid vs the hand-written standard 3-crossing diagram
    p = planar_diagram(validate_grid(5, TREFOIL_GRID_POINTS))
    ok = ok and normalized_bracket(p) == pd_normalized(TREFOIL_PD)
    ok = ok and time.monotonic() - t0 < 30.0
    _verdict(10, "independent oracles agree", ok)


def test_11_rp2_embeddability_table():
    expected = [True, False, False, False, True, True, False, False, True, True, False, False]
    _verdict(11, "RP^2 embeddability table", [rp2_embeddable(k) for k in range(1, 13)] == expected)
