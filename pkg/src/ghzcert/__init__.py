"""Exact GHZ distillation rates and degeneration certificates for
hypergraphs of multiparty GHZ states."""

from .errors import (
    BadLevelError,
    DimensionInfeasibleError,
    DimMismatchError,
    DisconnectedError,
    EmptyEdgeError,
    GhzcertError,
    GhzStructureError,
    GridTooLargeError,
    LevelsUnsupportedError,
    NegativeExponentError,
    NonScalarCoefficientsError,
    NotOrthRepError,
    RetriesExhaustedError,
    SameVertexError,
    TooFewVerticesError,
    TooLargeError,
    TooManyEdgesError,
    VertexOutOfRangeError,
)
from .gpor import OrthRep, OrthRepReport, find_gpor, orthogonalize_map, verify_orthrep
from .hypergraph import (
    Cut,
    Edge,
    Graph,
    Hypergraph,
    complete_uniform,
    cycle_hypergraph,
    edge_connectivity,
    edge_connectivity_by_removal,
    edge_disjoint_paths,
    graph,
    hypergraph,
    is_connected,
    line_graph,
    min_cut,
    min_cut_rank,
    min_cut_separating,
    path_hypergraph,
    single_full_edge,
    validate,
    vertex_connectivity,
)
from .protocol import (
    Certificate,
    CertificateReport,
    EprRate,
    QuadraticAssignment,
    RateBound,
    build_exponent_assignment,
    choose_g,
    enumerate_solutions,
    epr_rate,
    ghz_rate_bound,
    synthesize_certificate,
    verify_certificate,
)
from .ratlinalg import (
    is_general_position,
    project_onto_span,
    rank,
    scale_to_integers,
    vector,
)
from .tensor import (
    LaurentPoly,
    SparseTensor,
    apply_local_diagonal,
    check_ghz_structure,
    dump,
    flattening_rank,
    ghz_state,
    leading_term,
)

__version__ = "0.1.0"

__all__ = [
    "BadLevelError",
    "Certificate",
    "CertificateReport",
    "Cut",
    "DimMismatchError",
    "DimensionInfeasibleError",
    "DisconnectedError",
    "Edge",
    "EmptyEdgeError",
    "EprRate",
    "GhzStructureError",
    "GhzcertError",
    "Graph",
    "GridTooLargeError",
    "Hypergraph",
    "LaurentPoly",
    "LevelsUnsupportedError",
    "NegativeExponentError",
    "NonScalarCoefficientsError",
    "NotOrthRepError",
    "OrthRep",
    "OrthRepReport",
    "QuadraticAssignment",
    "RateBound",
    "RetriesExhaustedError",
    "SameVertexError",
    "SparseTensor",
    "TooFewVerticesError",
    "TooLargeError",
    "TooManyEdgesError",
    "VertexOutOfRangeError",
    "apply_local_diagonal",
    "build_exponent_assignment",
    "check_ghz_structure",
    "choose_g",
    "complete_uniform",
    "cycle_hypergraph",
    "dump",
    "edge_connectivity",
    "edge_connectivity_by_removal",
    "edge_disjoint_paths",
    "enumerate_solutions",
    "epr_rate",
    "find_gpor",
    "flattening_rank",
    "ghz_rate_bound",
    "ghz_state",
    "graph",
    "hypergraph",
    "is_connected",
    "is_general_position",
    "leading_term",
    "line_graph",
    "min_cut",
    "min_cut_rank",
    "min_cut_separating",
    "orthogonalize_map",
    "path_hypergraph",
    "project_onto_span",
    "rank",
    "scale_to_integers",
    "single_full_edge",
    "synthesize_certificate",
    "validate",
    "vector",
    "verify_certificate",
    "verify_orthrep",
    "vertex_connectivity",
]
