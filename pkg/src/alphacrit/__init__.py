"""Exact toolkit for stable-set criticality on small graphs.

Bitmask graphs up to 32 vertices, exact stability numbers, alpha-critical
edge analysis, totally odd K4-subdivision certificates, minimum
vertex/edge/odd-cycle covers, and exhaustive claim verification over
enumerated corpora.
"""

from .covers import (
    CoverError,
    CoverFamily,
    TheoremViolationError,
    Tok4PresentError,
    cover_from_theorem,
    enumerate_odd_cycles,
    minmax_certificate,
    rho_tilde,
    verify_cover,
)
from .enumeration import (
    canonical_form,
    connected_graphs_upto,
    enumerate_connected,
    packaged_corpus,
)
from .graphs import (
    Edge,
    Graph,
    Graph6Error,
    GraphError,
    SizeLimitError,
    VertexSet,
    add_edge,
    complete_graph,
    components,
    contract_degree2,
    cube_graph,
    cycle_graph,
    delete_edge,
    delete_vertex,
    delete_vertices,
    disjoint_union,
    is_connected,
    parse_graph6,
    path_graph,
    read_graph6_lines,
    to_graph6,
)
from .prooflab import (
    CLAIM_IDS,
    SWEEP_CLAIMS,
    ClaimReport,
    GadgetInfo,
    Triangle,
    case1_rotation,
    case2_gadget,
    check_claim_delta,
    check_claim_uvw,
    check_eq1_consistency,
    check_lemma_deg2,
    check_theorem1,
    check_theorem2,
    cube_uniqueness_check,
    find_strengthening_witness,
    lift_tok4_through_gadget,
    run_claim,
    triangles,
    witness_report,
)
from .stability import (
    CriticalEdgeSet,
    CriticalityError,
    EquationMismatchError,
    StableSetCertificate,
    all_max_stable_sets,
    alpha,
    critical_edges,
    critical_edges_avoiding,
    critical_subgraph,
    g_minus_c,
    is_alpha_critical,
    peel_max_stable_set,
)
from .subdivisions import (
    CertificateError,
    Tok4Certificate,
    contains_tok4,
    find_tok4,
    is_tok4_graph,
    verify_tok4,
)

__version__ = "0.1.0"

__all__ = [
    "CLAIM_IDS",
    "SWEEP_CLAIMS",
    "CertificateError",
    "ClaimReport",
    "CoverError",
    "CoverFamily",
    "CriticalEdgeSet",
    "CriticalityError",
    "Edge",
    "EquationMismatchError",
    "GadgetInfo",
    "Graph",
    "Graph6Error",
    "GraphError",
    "SizeLimitError",
    "StableSetCertificate",
    "TheoremViolationError",
    "Tok4Certificate",
    "Tok4PresentError",
    "Triangle",
    "VertexSet",
    "add_edge",
    "all_max_stable_sets",
    "alpha",
    "canonical_form",
    "case1_rotation",
    "case2_gadget",
    "check_claim_delta",
    "check_claim_uvw",
    "check_eq1_consistency",
    "check_lemma_deg2",
    "check_theorem1",
    "check_theorem2",
    "complete_graph",
    "components",
    "connected_graphs_upto",
    "contains_tok4",
    "contract_degree2",
    "cover_from_theorem",
    "critical_edges",
    "critical_edges_avoiding",
    "critical_subgraph",
    "cube_graph",
    "cube_uniqueness_check",
    "cycle_graph",
    "delete_edge",
    "delete_vertex",
    "delete_vertices",
    "disjoint_union",
    "enumerate_connected",
    "enumerate_odd_cycles",
    "find_strengthening_witness",
    "find_tok4",
    "g_minus_c",
    "is_alpha_critical",
    "is_connected",
    "is_tok4_graph",
    "lift_tok4_through_gadget",
    "minmax_certificate",
    "parse_graph6",
    "path_graph",
    "peel_max_stable_set",
    "read_graph6_lines",
    "rho_tilde",
    "run_claim",
    "to_graph6",
    "triangles",
    "verify_cover",
    "verify_tok4",
    "witness_report",
]
