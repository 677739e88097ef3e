"""Alexander polynomials and clock moves of plane MOY graphs."""

from .clock import ClockAnalysis, ClockMove, MaxRectangle
from .crowell import (
    CompareReport,
    CrowellGraph,
    PDCode,
    PDFormatError,
    compare,
    crowell_alexander,
    crowell_graph,
    crowell_trees,
    load_pd,
    parse_pd,
    singular_from_pd,
)
from .errors import TheoremViolation
from .generate import generate
from .kauffman import alexander_statesum
from .laurent import HalfPoly, box, quantum_integer, render
from .plane_graph import (
    Edge,
    GraphFormatError,
    PlaneGraph,
    ValidationReport,
    digon,
)
from .spanning import (
    TreeSpace,
    alexander_matrix_tree,
    alexander_spanning,
    verify_phi_bijection,
)

__version__ = "0.1.0"

__all__ = [
    "ClockAnalysis",
    "ClockMove",
    "MaxRectangle",
    "CompareReport",
    "CrowellGraph",
    "PDCode",
    "PDFormatError",
    "compare",
    "crowell_alexander",
    "crowell_graph",
    "crowell_trees",
    "load_pd",
    "parse_pd",
    "singular_from_pd",
    "TheoremViolation",
    "generate",
    "alexander_statesum",
    "HalfPoly",
    "box",
    "quantum_integer",
    "render",
    "Edge",
    "GraphFormatError",
    "PlaneGraph",
    "ValidationReport",
    "digon",
    "TreeSpace",
    "alexander_matrix_tree",
    "alexander_spanning",
    "verify_phi_bijection",
]
