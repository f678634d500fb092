"""Complete matchings of cells on polyhedral and simplicial complexes.

A complete matching partitions the cells outside a chosen subcomplex into
incident pairs (cell, hyperface). This package decides matchability with
deficiency certificates, constructs matchings from acyclic homology, dual
loops, subdivision, and transverse constant fields, and analyzes matchings
into collapse orders or cyclic orbits.
"""

from .complexes import (
    CW,
    SIMPLICIAL,
    CellComplex,
    DualGraph,
    DualLoop,
    SubcomplexPair,
    build_cw,
    cell_id,
    complement_of_dual_loop,
    dual_graph,
    euler_characteristic,
    from_simplices,
    spanning_dual_loop,
    star_cycle,
)
from .errors import (
    BruteForceBoundError,
    CellmatchError,
    FileFormatError,
    HomologyNonzeroError,
    InvalidComplexError,
    InvalidLoopError,
    InvalidMatchingError,
    InvalidSubcomplexError,
    InvalidSubdivisionError,
    NotTransverseError,
    PreconditionError,
    SearchBudgetExceededError,
)
from .flow import (
    BoundarySplit,
    FlowStructure,
    GeometricComplex,
    check_transverse,
    direction,
    flow_matching,
    flow_structure,
)
from .generators import FamilySpec, cone, generate
from .homology import (
    BettiVector,
    ChainComplex,
    Filtration,
    acyclic_filtration,
    betti_numbers,
    chain_complex,
    match_acyclic_pair,
)
from .matching import (
    HallCertificate,
    IncidenceGraph,
    Matching,
    MatchingReport,
    OrbitReport,
    complete_matching,
    compose_matchings,
    enumerate_matchings,
    incidence_graph,
    match_dual_cycle,
    orbit_analysis,
    validate_matching,
)
from .pipelines import find_dual_loop, match_loop_pipeline, match_sphere_pipeline
from .subdivision import SubdivisionMap, barycentric, propagate_matching

from . import generators

__version__ = "0.1.0"

__all__ = [
    "BettiVector",
    "BoundarySplit",
    "BruteForceBoundError",
    "CW",
    "CellComplex",
    "CellmatchError",
    "ChainComplex",
    "DualGraph",
    "DualLoop",
    "FamilySpec",
    "FileFormatError",
    "Filtration",
    "FlowStructure",
    "GeometricComplex",
    "HallCertificate",
    "HomologyNonzeroError",
    "IncidenceGraph",
    "InvalidComplexError",
    "InvalidLoopError",
    "InvalidMatchingError",
    "InvalidSubcomplexError",
    "InvalidSubdivisionError",
    "Matching",
    "MatchingReport",
    "NotTransverseError",
    "OrbitReport",
    "PreconditionError",
    "SIMPLICIAL",
    "SearchBudgetExceededError",
    "SubcomplexPair",
    "SubdivisionMap",
    "acyclic_filtration",
    "barycentric",
    "betti_numbers",
    "build_cw",
    "cell_id",
    "chain_complex",
    "check_transverse",
    "complement_of_dual_loop",
    "complete_matching",
    "compose_matchings",
    "cone",
    "direction",
    "dual_graph",
    "enumerate_matchings",
    "euler_characteristic",
    "find_dual_loop",
    "flow_matching",
    "flow_structure",
    "from_simplices",
    "generate",
    "generators",
    "incidence_graph",
    "match_acyclic_pair",
    "match_dual_cycle",
    "match_loop_pipeline",
    "match_sphere_pipeline",
    "orbit_analysis",
    "propagate_matching",
    "spanning_dual_loop",
    "star_cycle",
    "validate_matching",
]
