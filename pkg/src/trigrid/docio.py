"""Versioned JSON documents for diagrams; rationals travel as "p/q" strings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    CombinatorialTGD,
    GeometricTGD,
    validate_combinatorial,
    validate_geometric,
)
from .errors import SchemaError, TrigridError, ValidationError

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class DiagramDocument:
    diagram: CombinatorialTGD | GeometricTGD
    metadata: dict = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return "combinatorial" if isinstance(self.diagram, CombinatorialTGD) else "geometric"


def _fraction_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _fraction_from_str(s, location: str) -> Fraction:
    if not isinstance(s, str):
        raise SchemaError("rational must be a 'p/q' string", location)
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {s!r}: {exc}", location) from None


def parse(data: bytes | str) -> DiagramDocument:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc.msg}", f"line {exc.lineno}") from None
    if not isinstance(obj, dict):
        raise SchemaError("document must be a JSON object")
    schema = obj.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {schema!r}", "schema")
    kind = obj.get("type")
    metadata = obj.get("metadata", {})
    if not isinstance(metadata, dict):
        raise SchemaError("metadata must be an object", "metadata")

    if kind == "combinatorial":
        n = obj.get("n")
        if not isinstance(n, int) or n < 1:
            raise SchemaError("'n' must be a positive integer", "n")
        cells = obj.get("cells")
        if not isinstance(cells, list):
            raise SchemaError("'cells' must be a list of [i, j] pairs", "cells")
        parsed = []
        for k, cell in enumerate(cells):
            if (
                not isinstance(cell, list)
                or len(cell) != 2
                or not all(isinstance(v, int) for v in cell)
            ):
                raise SchemaError("cell must be a pair of integers", f"cells[{k}]")
            parsed.append((cell[0], cell[1]))
        try:
            diagram = validate_combinatorial(n, parsed)
        except TrigridError as exc:
            raise ValidationError(exc) from None
        return DiagramDocument(diagram=diagram, metadata=metadata)

    if kind == "geometric":
        points = obj.get("points")
        if not isinstance(points, list):
            raise SchemaError("'points' must be a list of [x, y] pairs", "points")
        parsed_pts = []
        for k, pt in enumerate(points):
            if not isinstance(pt, list) or len(pt) != 2:
                raise SchemaError("point must be a pair of rationals", f"points[{k}]")
            parsed_pts.append(
                (
                    _fraction_from_str(pt[0], f"points[{k}][0]"),
                    _fraction_from_str(pt[1], f"points[{k}][1]"),
                )
            )
        try:
            diagram = validate_geometric(parsed_pts)
        except TrigridError as exc:
            raise ValidationError(exc) from None
        return DiagramDocument(diagram=diagram, metadata=metadata)

    raise SchemaError(f"unknown diagram type {kind!r}", "type")


def emit(doc: DiagramDocument) -> bytes:
    """Canonical serialization: sorted keys, sorted cells, exact rationals."""
    obj: dict = {"schema": SCHEMA_VERSION, "type": doc.kind}
    if isinstance(doc.diagram, CombinatorialTGD):
        obj["n"] = doc.diagram.n
        obj["cells"] = [[i, j] for i, j in doc.diagram.sorted_cells()]
    else:
        obj["points"] = [
            [_fraction_to_str(x), _fraction_to_str(y)] for x, y in doc.diagram.points
        ]
    if doc.metadata:
        obj["metadata"] = doc.metadata
    return (json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n").encode("utf-8")


def document_for(diagram: CombinatorialTGD | GeometricTGD, **metadata) -> DiagramDocument:
    return DiagramDocument(diagram=diagram, metadata=dict(metadata))
