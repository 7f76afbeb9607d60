"""Certified neighborhood covers for minimal separators and potential maximal
cliques in P7-free graphs.

Every cover routine returns either a set of vertices within the proven bound
together with a per-target dominator map, or an explicit induced path showing
the input was outside the promised class.  Counterexample families showing the
bounds cannot drop below n, brute-force oracles, and a batch verifier round
out the package.
"""

from .covering import (
    PMC_BOUND,
    SEPARATOR_BOUND,
    Butterfly,
    CoverOutcome,
    PmcCoverPlan,
    TypeClassification,
    biranking_element,
    classify_types,
    complete_cross_check,
    cover_no_butterfly,
    cover_pmc_components,
    cover_pmc_p7,
    cover_separator_p5,
    cover_separator_p6_search,
    cover_separator_p7,
    find_minimal_butterfly,
)
from .errors import CapacityError, InputError, InvariantViolation, NoSolutionError
from .families import FamilyInstance, build_example
from .graph import (
    Graph,
    Vertices,
    components,
    from_edge_list,
    from_graph6,
    neighborhood,
    to_edge_list,
    to_graph6,
)
from .modular import ModularPartition, is_module, modular_partition, pick_adjacent_module_reps
from .oracle import (
    brute_minimal_separators,
    brute_modules,
    min_dominating_set_of,
    random_graph,
    random_ptfree,
)
from .paths import (
    InducedPathWitness,
    find_induced_p4_from,
    find_induced_pt,
    is_induced_path,
    shortest_path_through,
)
from .pmc import (
    PmcCertificate,
    enumerate_pmcs,
    is_chordal,
    is_pmc,
    minimal_triangulations,
    nd_separator,
    pmc_failure,
    pmc_oracle_via_completions,
    pmcs_via_completions,
)
from .separators import (
    SeparatorCertificate,
    enumerate_minimal_separators,
    full_components,
    is_minimal_separator,
)
from .verify import (
    CheckConfig,
    VerifyReport,
    Violation,
    check_graph,
    exhaustive_connected_graphs,
    random_corpus,
    verify_graphs,
)

__version__ = "0.1.0"

__all__ = [
    "Butterfly",
    "CapacityError",
    "CheckConfig",
    "CoverOutcome",
    "FamilyInstance",
    "Graph",
    "InducedPathWitness",
    "InputError",
    "InvariantViolation",
    "ModularPartition",
    "NoSolutionError",
    "PMC_BOUND",
    "PmcCertificate",
    "PmcCoverPlan",
    "SEPARATOR_BOUND",
    "SeparatorCertificate",
    "TypeClassification",
    "VerifyReport",
    "Vertices",
    "Violation",
    "biranking_element",
    "brute_minimal_separators",
    "brute_modules",
    "build_example",
    "check_graph",
    "classify_types",
    "complete_cross_check",
    "components",
    "cover_no_butterfly",
    "cover_pmc_components",
    "cover_pmc_p7",
    "cover_separator_p5",
    "cover_separator_p6_search",
    "cover_separator_p7",
    "enumerate_minimal_separators",
    "enumerate_pmcs",
    "exhaustive_connected_graphs",
    "find_induced_p4_from",
    "find_induced_pt",
    "find_minimal_butterfly",
    "from_edge_list",
    "from_graph6",
    "full_components",
    "is_chordal",
    "is_induced_path",
    "is_minimal_separator",
    "is_module",
    "is_pmc",
    "min_dominating_set_of",
    "minimal_triangulations",
    "modular_partition",
    "nd_separator",
    "neighborhood",
    "pick_adjacent_module_reps",
    "pmc_failure",
    "pmc_oracle_via_completions",
    "pmcs_via_completions",
    "random_corpus",
    "random_graph",
    "random_ptfree",
    "shortest_path_through",
    "to_edge_list",
    "to_graph6",
    "verify_graphs",
]
