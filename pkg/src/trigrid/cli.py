"""Command line interface.

Subcommands read a JSON diagram document on stdin (or --input) and write to
stdout (or --output), so they compose under pipes:

    trigrid generate staircase --n 5 | trigrid classify
    trigrid generate n2 | trigrid render --view grid -o out.svg

Exit status: 0 success, 1 validation/schema failure, 2 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import SymmetryGroup, CombinatorialTGD, GeometricTGD, geometric_grids, three_grids
from .docio import DiagramDocument, document_for, emit, parse
from .enumeration import EnumerationOptions, analyze, census, enumerate_diagrams
from .errors import InvalidParameter, LabelError, SchemaError, TrigridError, ValidationError
from .families import example_n2, example_n3, pushoff, squares_antidiagonal, staircase
from .links import DEFAULT_CROSSING_BOUND
from .surfaces import classify, classify_geometric, normalize_label, obstruction_report
from .svg import Style, render_front_svg, render_grid_svg, render_tgd_svg

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BUDGET = 2


def _read_input(args) -> bytes:
    if getattr(args, "input", None):
        with open(args.input, "rb") as fh:
            return fh.read()
    return sys.stdin.buffer.read()


def _write_output(args, data: bytes) -> None:
    if getattr(args, "output", None):
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def _load_document(args) -> DiagramDocument:
    return parse(_read_input(args))


def _sketch(d: CombinatorialTGD) -> str:
    """Human-readable grid: row n-1 on top, a bullet per marked cell."""
    lines = []
    for j in reversed(range(d.n)):
        row = " ".join("•" if (i, j) in d.cells else "·" for i in range(d.n))
        lines.append(f"{j:>2} {row}")
    lines.append("   " + " ".join(f"{i}" for i in range(d.n)))
    return "\n".join(lines)


def _report_dict(report) -> dict:
    return {
        "b": report.b,
        "faces": report.faces,
        "face_split": list(report.face_split),
        "orientable": report.orientable,
        "euler_characteristic": report.euler_closed,
        "status": report.status,
        "components": [
            {
                "vertices": c.vertices,
                "b": c.b,
                "faces": c.faces,
                "face_split": list(c.face_split),
                "orientable": c.orientable,
                "euler_characteristic": c.euler_closed,
                "surface": c.name,
            }
            for c in report.components
        ],
    }


def _evidence_dict(evidence) -> list[dict]:
    return [
        {
            "label": e.label,
            "components": e.n_components,
            "tb": list(e.tb),
            "rot": list(e.rot),
            "verdict": e.verdict,
        }
        for e in evidence
    ]


def _emit_result(args, obj: dict, text: str) -> None:
    if args.format == "json":
        _write_output(args, (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode())
    else:
        _write_output(args, (text + "\n").encode())


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    doc = _load_document(args)
    d = doc.diagram
    obj = {"valid": True, "kind": doc.kind, "b": d.b}
    if isinstance(d, CombinatorialTGD):
        obj["n"] = d.n
        text = f"valid {doc.kind} diagram: n = {d.n}, b = {d.b}\n{_sketch(d)}"
    else:
        text = f"valid {doc.kind} diagram: b = {d.b}"
    _emit_result(args, obj, text)
    return EXIT_OK


def cmd_grids(args) -> int:
    doc = _load_document(args)
    d = doc.diagram
    grids = three_grids(d) if isinstance(d, CombinatorialTGD) else geometric_grids(d)
    obj = {
        "grids": [
            {"label": g.label, "n": g.n, "points": [list(p) for p in g.sorted_points()]}
            for g in grids
        ]
    }
    lines = []
    for g in grids:
        lines.append(f"grid {g.label}: n = {g.n}, points = {sorted(g.points)}")
    _emit_result(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    doc = _load_document(args)
    d = doc.diagram
    report = classify(d) if isinstance(d, CombinatorialTGD) else classify_geometric(d)
    obj = _report_dict(report)
    lines = [
        f"b = {report.b}, faces = {report.faces} {tuple(report.face_split)}, "
        f"chi = {report.euler_closed}, "
        f"{'orientable' if report.orientable else 'nonorientable'}"
    ]
    for k, c in enumerate(report.components):
        lines.append(
            f"  component {k}: {c.name} (b = {c.b}, chi = {c.euler_closed}, "
            f"{'orientable' if c.orientable else 'nonorientable'})"
        )
    _emit_result(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_analyze(args) -> int:
    doc = _load_document(args)
    d = doc.diagram
    if isinstance(d, GeometricTGD):
        report = classify_geometric(d)
        obj = {"surface": _report_dict(report)}
        text = f"geometric diagram: b = {report.b}, chi = {report.euler_closed}"
        _emit_result(args, obj, text)
        return EXIT_OK
    a = analyze(d, crossing_bound=args.crossing_bound)
    obj = {
        "surface": _report_dict(a.report),
        "links": _evidence_dict(a.evidence),
        "status": a.report.status,
    }
    lines = [f"status: {a.report.status}"]
    for e in a.evidence:
        lines.append(
            f"  link {e.label}: {e.n_components} component(s), tb = {list(e.tb)}, "
            f"rot = {list(e.rot)}, {e.verdict}"
        )
    lines.append(
        f"surface: chi = {a.report.euler_closed}, "
        f"{'orientable' if a.report.orientable else 'nonorientable'}, "
        + ", ".join(c.name for c in a.report.components)
    )
    _emit_result(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_obstruct(args) -> int:
    doc = _load_document(args)
    d = doc.diagram
    if not isinstance(d, CombinatorialTGD):
        raise InvalidParameter("obstruct needs a combinatorial diagram")
    claims = [normalize_label(x) for x in args.fillable]
    verdict = obstruction_report(d, claims)
    obj = {
        "applies": verdict.applies,
        "third_label": verdict.third_label,
        "q": verdict.q,
        "nonorientable": verdict.nonorientable,
        "message": verdict.message,
    }
    _emit_result(args, obj, verdict.message)
    return EXIT_OK


def _family(args) -> CombinatorialTGD:
    if args.family == "n2":
        return example_n2()
    if args.family == "n3":
        return example_n3()
    if args.family == "staircase":
        if args.n is None:
            raise InvalidParameter("staircase needs --n")
        return staircase(args.n)
    if args.family == "squares":
        if args.k is None:
            raise InvalidParameter("squares needs --k (odd)")
        return squares_antidiagonal(args.k)
    raise InvalidParameter(f"unknown family {args.family!r}")


def cmd_generate(args) -> int:
    d = _family(args)
    _write_output(args, emit(document_for(d, family=args.family)))
    return EXIT_OK


def cmd_pushoff(args) -> int:
    doc = _load_document(args)
    d = doc.diagram
    if not isinstance(d, CombinatorialTGD):
        raise InvalidParameter("pushoff needs a combinatorial diagram")
    grid = three_grids(d)[0]
    g = pushoff(grid)
    _write_output(args, emit(document_for(g, source="pushoff")))
    return EXIT_OK


def cmd_render(args) -> int:
    doc = _load_document(args)
    d = doc.diagram
    style = Style(cell=args.cell)
    if isinstance(d, GeometricTGD):
        grids = geometric_grids(d)
        d_for_grid = None
    else:
        grids = three_grids(d)
        d_for_grid = d
    if args.view == "tgd":
        if d_for_grid is None:
            raise InvalidParameter("the tgd view needs a combinatorial diagram")
        data = render_tgd_svg(d_for_grid, style)
    else:
        label = normalize_label(args.label)
        g = next(g for g in grids if g.label == label)
        if args.view == "grid":
            data = render_grid_svg(g, style)
        else:
            data = render_front_svg(g, style)
    _write_output(args, data)
    return EXIT_OK


def _enum_options(args) -> EnumerationOptions:
    b_range = None
    if args.b_min is not None or args.b_max is not None:
        b_range = (args.b_min or 1, args.b_max if args.b_max is not None else args.n**2)
    return EnumerationOptions(
        n=args.n,
        b_range=b_range,
        symmetry=SymmetryGroup.from_flag(args.symmetry),
        filters=tuple(args.filter or ()),
        node_budget=args.budget_nodes,
        time_budget=args.budget_seconds,
        crossing_bound=args.crossing_bound,
    )


def cmd_enumerate(args) -> int:
    result = enumerate_diagrams(_enum_options(args), jobs=args.jobs)
    obj = {
        "n": args.n,
        "complete": result.complete,
        "nodes": result.nodes,
        "orbit_count": len(result.diagrams),
        "raw_count": result.raw_count,
        "diagrams": [
            {"cells": [list(c) for c in d.sorted_cells()], "b": d.b}
            for d in result.diagrams
        ],
    }
    lines = [
        f"n = {args.n}: {len(result.diagrams)} orbit(s), {result.raw_count} raw, "
        f"{result.nodes} nodes{'' if result.complete else ' (budget exhausted)'}"
    ]
    for d in result.diagrams:
        lines.append(f"  b = {d.b}: {list(d.sorted_cells())}")
    _emit_result(args, obj, "\n".join(lines))
    return EXIT_OK if result.complete else EXIT_BUDGET


def cmd_census(args) -> int:
    result = census(_enum_options(args), jobs=args.jobs)
    obj = {
        "n": args.n,
        "complete": result.complete,
        "nodes": result.nodes,
        "rows": [
            {
                "b": r.b,
                "orientable": r.orientable,
                "euler_characteristic": r.euler_closed,
                "status": r.status,
                "orbits": r.orbits,
                "raw": r.raw,
            }
            for r in result.rows
        ],
    }
    lines = [f"{'b':>3} {'orient':>6} {'chi':>4} {'status':<20} {'orbits':>6} {'raw':>6}"]
    for r in result.rows:
        lines.append(
            f"{r.b:>3} {('yes' if r.orientable else 'no'):>6} {r.euler_closed:>4} "
            f"{r.status:<20} {r.orbits:>6} {r.raw:>6}"
        )
    if not result.complete:
        lines.append("(budget exhausted: counts are lower bounds)")
    _emit_result(args, obj, "\n".join(lines))
    return EXIT_OK if result.complete else EXIT_BUDGET


# ---------------------------------------------------------------------------
# parser


def _add_io(sp, output_only=False):
    if not output_only:
        sp.add_argument("-i", "--input", help="input document (default: stdin)")
    sp.add_argument("-o", "--output", help="output file (default: stdout)")


def _add_format(sp):
    sp.add_argument("-f", "--format", choices=("json", "text"), default="text")


def _add_enum_flags(sp):
    sp.add_argument("--n", type=int, required=True, help="grid number")
    sp.add_argument("--b-min", type=int, default=None)
    sp.add_argument("--b-max", type=int, default=None)
    sp.add_argument(
        "--symmetry",
        default="t",
        help="none | t | tr | trr (translations / +rotation / +reflection)",
    )
    sp.add_argument("--filter", action="append", metavar="NAME")
    sp.add_argument("--jobs", type=int, default=int(os.environ.get("TRIGRID_JOBS", "1")))
    sp.add_argument("--budget-nodes", type=int, default=10**8)
    sp.add_argument("--budget-seconds", type=float, default=60.0)
    sp.add_argument("--crossing-bound", type=int, default=DEFAULT_CROSSING_BOUND)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trigrid", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="validate a diagram document")
    _add_io(sp)
    _add_format(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("grids", help="the three derived grid diagrams")
    _add_io(sp)
    _add_format(sp)
    sp.set_defaults(func=cmd_grids)

    sp = sub.add_parser("classify", help="surface orientability, chi and name")
    _add_io(sp)
    _add_format(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("analyze", help="links, Legendrian invariants and fillability status")
    _add_io(sp)
    _add_format(sp)
    sp.add_argument("--crossing-bound", type=int, default=DEFAULT_CROSSING_BOUND)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("obstruct", help="slice-disk fillability obstruction for the third link")
    _add_io(sp)
    _add_format(sp)
    sp.add_argument(
        "--fillable", nargs=2, required=True, metavar="LABEL",
        help="two labels (ab bc ca) claimed fillable",
    )
    sp.set_defaults(func=cmd_obstruct)

    sp = sub.add_parser("generate", help="emit a named family diagram")
    sp.add_argument("family", choices=("n2", "n3", "staircase", "squares"))
    sp.add_argument("--n", type=int, default=None, help="size for staircase")
    sp.add_argument("--k", type=int, default=None, help="square count for squares (odd)")
    _add_io(sp, output_only=True)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("pushoff", help="geometric diagram of the ab link and its pushoff")
    _add_io(sp)
    sp.set_defaults(func=cmd_pushoff)

    sp = sub.add_parser("render", help="SVG rendering")
    _add_io(sp)
    sp.add_argument("--view", choices=("tgd", "grid", "front"), default="tgd")
    sp.add_argument("--label", default="ab", help="which grid for grid/front views")
    sp.add_argument("--cell", type=int, default=40, help="cell size in pixels")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("enumerate", help="all diagrams up to symmetry")
    _add_enum_flags(sp)
    _add_io(sp, output_only=True)
    _add_format(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("census", help="orbit counts by (b, orientability, chi, status)")
    _add_enum_flags(sp)
    _add_io(sp, output_only=True)
    _add_format(sp)
    sp.set_defaults(func=cmd_census)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, SchemaError, LabelError, InvalidParameter) as exc:
        print(f"trigrid: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except TrigridError as exc:
        print(f"trigrid: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
