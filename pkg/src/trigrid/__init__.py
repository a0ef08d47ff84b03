"""Triple grid diagrams: validation, link invariants, surfaces and enumeration.

A triple grid diagram is a marking of the n x n torus grid in which every
column, row and anti-diagonal carries 0 or 2 points.  Reading the marks two
colors at a time gives three grid diagrams, hence three links; the diagram
itself spans a closed surface whose topology and whose links' Legendrian and
smooth invariants this package computes exactly.
"""

from ._bracket import HAVE_COMPILED
from .core import (
    LABELS,
    CombinatorialTGD,
    GeometricTGD,
    GridDiagram,
    SymmetryGroup,
    canonicalize,
    geometric_grids,
    geometric_rotate,
    orbit,
    rotate_colors,
    three_grids,
    to_geometric,
    validate_combinatorial,
    validate_geometric,
    validate_grid,
)
from .docio import DiagramDocument, document_for, emit, parse
from .enumeration import (
    Analysis,
    CensusResult,
    EnumerationOptions,
    EnumerationResult,
    WitnessResult,
    analyze,
    census,
    enumerate_diagrams,
    find_witness,
    orbit_size,
)
from .errors import (
    BudgetExceeded,
    DuplicateCell,
    DuplicatePoint,
    InvalidParameter,
    LabelError,
    LineCountViolation,
    SchemaError,
    TooManyCrossings,
    TrigridError,
    UnpairedPoint,
    ValidationError,
)
from .families import (
    example_n2,
    example_n3,
    pushoff,
    squares_antidiagonal,
    staircase,
)
from .laurent import LaurentPolynomial
from .legendrian import (
    FrontComponent,
    LegendrianInvariants,
    cusp_census,
    front_polyline,
    legendrian_invariants,
)
from .links import (
    CERTIFIED_UNLINK,
    DEFAULT_CROSSING_BOUND,
    INCONCLUSIVE,
    NOT_UNLINK,
    PlanarLinkDiagram,
    cyclic_permute,
    kauffman_bracket,
    linking_matrix,
    normalized_bracket,
    planar_diagram,
    unlink_certificate,
)
from .surfaces import (
    LinkEvidence,
    ObstructionVerdict,
    SurfaceReport,
    classify,
    classify_geometric,
    fillability_status,
    link_evidence,
    obstruction_report,
    rp2_embeddable,
    surface_name,
    xo_placement,
)
from .svg import Style, render_svg

__version__ = "0.1.0"

__all__ = [
    "HAVE_COMPILED",
    "LABELS",
    "CombinatorialTGD",
    "GeometricTGD",
    "GridDiagram",
    "SymmetryGroup",
    "canonicalize",
    "geometric_grids",
    "geometric_rotate",
    "orbit",
    "rotate_colors",
    "three_grids",
    "to_geometric",
    "validate_combinatorial",
    "validate_geometric",
    "validate_grid",
    "DiagramDocument",
    "document_for",
    "emit",
    "parse",
    "Analysis",
    "CensusResult",
    "EnumerationOptions",
    "EnumerationResult",
    "WitnessResult",
    "analyze",
    "census",
    "enumerate_diagrams",
    "find_witness",
    "orbit_size",
    "BudgetExceeded",
    "DuplicateCell",
    "DuplicatePoint",
    "InvalidParameter",
    "LabelError",
    "LineCountViolation",
    "SchemaError",
    "TooManyCrossings",
    "TrigridError",
    "UnpairedPoint",
    "ValidationError",
    "example_n2",
    "example_n3",
    "pushoff",
    "squares_antidiagonal",
    "staircase",
    "LaurentPolynomial",
    "FrontComponent",
    "LegendrianInvariants",
    "cusp_census",
    "front_polyline",
    "legendrian_invariants",
    "CERTIFIED_UNLINK",
    "DEFAULT_CROSSING_BOUND",
    "INCONCLUSIVE",
    "NOT_UNLINK",
    "PlanarLinkDiagram",
    "cyclic_permute",
    "kauffman_bracket",
    "linking_matrix",
    "normalized_bracket",
    "planar_diagram",
    "unlink_certificate",
    "LinkEvidence",
    "ObstructionVerdict",
    "SurfaceReport",
    "classify",
    "classify_geometric",
    "fillability_status",
    "link_evidence",
    "obstruction_report",
    "rp2_embeddable",
    "surface_name",
    "xo_placement",
    "Style",
    "render_svg",
]
