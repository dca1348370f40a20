"""Exact counting polynomials, zeta functions and point-count verification
for loose graphs (graphs whose edges may keep one or zero endpoints)."""

from .grothendieck import (
    SurgeryStep,
    SurgeryTrace,
    class_polynomial,
    cone_class,
    local_after,
    local_before,
    resolution_difference,
    star_class,
    surgery_trace,
    tree_class,
)
from .ihara import IharaDomainError, edge_matrix_inverse, ihara_inverse
from .loosegraph import (
    AmbientSpace,
    GenerateError,
    LooseGraph,
    LooseGraphError,
    NeighborhoodData,
    ParseError,
    TreeProfile,
    ambient_space,
    cone,
    connected_components,
    generate,
    induced,
    is_connected,
    is_loose_tree,
    neighborhood,
    parse,
    reduce,
    resolve,
    serialize,
    spanning_tree,
    tree_profile,
)
from .pointcount import BudgetError, VerifyReport, count_points, verify
from .polyring import ExactDivisionError, L, Poly, PolyMatrix, det, format_poly
from .zeta import (
    FactoredZeta,
    counting_polynomial,
    euler_characteristic,
    f1_zeta,
    format_zeta,
    tree_zeta_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientSpace",
    "BudgetError",
    "ExactDivisionError",
    "FactoredZeta",
    "GenerateError",
    "IharaDomainError",
    "L",
    "LooseGraph",
    "LooseGraphError",
    "NeighborhoodData",
    "ParseError",
    "Poly",
    "PolyMatrix",
    "SurgeryStep",
    "SurgeryTrace",
    "TreeProfile",
    "VerifyReport",
    "ambient_space",
    "class_polynomial",
    "cone",
    "cone_class",
    "connected_components",
    "count_points",
    "counting_polynomial",
    "det",
    "edge_matrix_inverse",
    "euler_characteristic",
    "f1_zeta",
    "format_poly",
    "format_zeta",
    "generate",
    "ihara_inverse",
    "induced",
    "is_connected",
    "is_loose_tree",
    "local_after",
    "local_before",
    "neighborhood",
    "parse",
    "reduce",
    "resolution_difference",
    "resolve",
    "serialize",
    "spanning_tree",
    "star_class",
    "surgery_trace",
    "tree_class",
    "tree_profile",
    "tree_zeta_closed_form",
    "verify",
]
