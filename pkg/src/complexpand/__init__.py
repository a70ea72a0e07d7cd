"""Expansions of simplicial complexes, hypergraphs, and squarefree monomial
ideals, with exact structural and homological invariants."""

from .betti import BettiTable
from .complexes import SimplicialComplex
from .errors import (
    BudgetExceeded,
    FaceNotInComplex,
    InvalidExpansionVector,
    NotAPermutation,
    NotAShelling,
    NotPureOneDimensional,
    NotShellable,
    TooLarge,
    UnknownVertex,
    VertexNotInComplex,
    VoidComplex,
)
from .expansion import (
    deletion_identity_check,
    expand_complex,
    expand_hypergraph,
    expanded_vertex_names,
    link_identity_check,
    validate_copies,
)
from .homology import (
    GF32003,
    RATIONALS,
    FieldChoice,
    HomologyRanks,
    betti_numbers_hochster,
    depth_quotient,
    is_cohen_macaulay,
    krull_dim_quotient,
    matrix_rank,
    pd_quotient,
    reduced_homology,
    reg_ideal,
    reg_quotient,
    sr_quotient_invariants,
)
from .hypergraphs import (
    Graph,
    Hypergraph,
    edge_ideal,
    independence_complex,
    is_chordal,
    load_graph_or_hypergraph,
)
from .ideals import (
    LinearQuotientsCertificate,
    SquarefreeMonomialIdeal,
    alexander_dual_ideal,
    betti_from_linear_quotients,
    check_linear_quotients,
    colon_by_monomial,
    find_linear_quotients_order,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)
from .invariants import (
    PdDepthComparison,
    RegComparison,
    bight,
    expansion_pd_depth,
    expansion_reg,
    set_identity_expansion,
)
from .sampling import (
    child_seed,
    random_complex,
    random_copies,
    random_graph,
    random_pure_complex,
    random_shellable_complex,
)
from .search import search_expansion_cm
from .structure import (
    OneDimFlags,
    expansion_shelling,
    find_shelling,
    is_shedding_vertex,
    is_shelling,
    is_vertex_decomposable,
    one_dim_equivalences,
    vertex_decomposition_tree,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "BudgetExceeded",
    "FaceNotInComplex",
    "FieldChoice",
    "GF32003",
    "Graph",
    "HomologyRanks",
    "Hypergraph",
    "InvalidExpansionVector",
    "LinearQuotientsCertificate",
    "NotAPermutation",
    "NotAShelling",
    "NotPureOneDimensional",
    "NotShellable",
    "OneDimFlags",
    "PdDepthComparison",
    "RATIONALS",
    "RegComparison",
    "SimplicialComplex",
    "SquarefreeMonomialIdeal",
    "TooLarge",
    "UnknownVertex",
    "VertexNotInComplex",
    "VoidComplex",
    "alexander_dual_ideal",
    "betti_from_linear_quotients",
    "betti_numbers_hochster",
    "bight",
    "check_linear_quotients",
    "child_seed",
    "colon_by_monomial",
    "deletion_identity_check",
    "depth_quotient",
    "edge_ideal",
    "expand_complex",
    "expand_hypergraph",
    "expanded_vertex_names",
    "expansion_pd_depth",
    "expansion_reg",
    "expansion_shelling",
    "find_linear_quotients_order",
    "find_shelling",
    "independence_complex",
    "is_chordal",
    "is_cohen_macaulay",
    "is_shedding_vertex",
    "is_shelling",
    "is_vertex_decomposable",
    "krull_dim_quotient",
    "link_identity_check",
    "load_graph_or_hypergraph",
    "matrix_rank",
    "one_dim_equivalences",
    "pd_quotient",
    "random_complex",
    "random_copies",
    "random_graph",
    "random_pure_complex",
    "random_shellable_complex",
    "reduced_homology",
    "reg_ideal",
    "reg_quotient",
    "search_expansion_cm",
    "set_identity_expansion",
    "sr_quotient_invariants",
    "stanley_reisner_complex",
    "stanley_reisner_ideal",
    "validate_copies",
    "vertex_decomposition_tree",
    "__version__",
]
