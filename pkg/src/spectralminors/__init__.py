"""Spectral extremal graph theory over minor-closed families.

Exact tooling for the interplay between the spectral radius of a graph and
its forbidden minors: extremal constructions (a clique joined with an
independent set, with disjoint cliques, or with a path), eigenvalue ceilings,
branch-set minor testing, Colin de Verdiere classification through the
obstruction-set characterizations, and exhaustive searches over all graphs of
a fixed small order.
"""

from .canon import are_isomorphic, canonical_key
from .cdv import (
    MuClass,
    check_problem1,
    check_problem2,
    classify_mu,
    mu_join_bound,
    mu_kmm_check,
)
from .families import FamilySpec
from .graph import (
    MAX_VERTICES,
    Graph,
    ResidualShape,
    complete,
    complete_bipartite,
    construct_cdv_extremal,
    construct_kr_extremal,
    construct_kst_extremal,
    contract_edge,
    cycle,
    decompose_apex_clique,
    delete_edge,
    delete_vertex,
    disjoint_union,
    encode_graph6,
    independent,
    is_bipartite,
    is_path_union,
    join,
    kst_parts,
    parse_graph6,
    path,
    petersen,
    recognize_residual,
)
from .minors import (
    ForbiddenFamily,
    HypothesisViolation,
    MinorWitness,
    clique_completion_safe,
    delta_to_y,
    delta_y_closure,
    has_minor,
    is_linkless,
    is_outerplanar,
    is_planar,
    linkless_obstructions,
    max_degree_residual_bound,
    outerplanar_obstructions,
    petersen_family,
    planar_obstructions,
    verify_witness,
    y_to_delta,
)
from .search import (
    MembershipReport,
    SearchReport,
    enumerate_graphs,
    family_filter,
    ingest_graph6_stream,
    report_to_json,
    reports_to_csv,
    scan_family,
    search_max_edges,
    search_max_lambda,
    verify_membership,
)
from .spectral import (
    ConvergenceError,
    EigenResult,
    InterlacingCheck,
    QuotientMatrix,
    check_interlacing_bound,
    kst_lambda_bound,
    quotient_bound,
    rayleigh_delta,
    spectral_radius,
)

__version__ = "0.1.0"
