"""Graph entropies over orbit and functional distributions, with a
verifiable catalog of Renyi/Shannon bound checks."""

from .errors import (
    CapacityError,
    DomainError,
    GraphEntropyError,
    ParseError,
    ValidationError,
)
from .graph import (
    UNREACHABLE,
    DistanceData,
    Graph,
    SphereProfile,
    distance_matrix,
    generate_graph,
    j_sphere_profile,
    parse_edge_list,
    sphere_counts_matrix,
    write_edge_list,
)
from .harness import (
    DEFAULT_ALPHA_GRID,
    FunctionalTemplate,
    SweepConfig,
    SweepReport,
    generate_corpus,
    run_sweep,
    summarize_report,
)
from .inequalities import (
    BoundReport,
    LemmaCheck,
    class_closed_forms,
    connected_functional_bounds,
    jensen_gap_bound,
    lemma_checks,
    ordering_bound,
    thm1_refined_bound,
    thm1_renyi_shannon_bounds,
    thm3_partition_vs_functional,
    thm4_scaled_dominance,
    thm5_additive_dominance,
    thm6_convex_combination,
)
from .measures import (
    Distribution,
    DistributionStats,
    FunctionalSpec,
    FunctionalValues,
    default_coefficients,
    distribution_from_values,
    distribution_stats,
    exponential_functional_values,
    linear_functional_values,
    partition_distribution,
    renyi_entropy,
    shannon_entropy,
)
from .orbits import OrbitPartition, brute_force_orbits, vertex_orbits

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CapacityError",
    "DEFAULT_ALPHA_GRID",
    "DistanceData",
    "Distribution",
    "DistributionStats",
    "DomainError",
    "FunctionalSpec",
    "FunctionalTemplate",
    "FunctionalValues",
    "Graph",
    "GraphEntropyError",
    "LemmaCheck",
    "OrbitPartition",
    "ParseError",
    "SphereProfile",
    "SweepConfig",
    "SweepReport",
    "UNREACHABLE",
    "ValidationError",
    "brute_force_orbits",
    "class_closed_forms",
    "connected_functional_bounds",
    "default_coefficients",
    "distance_matrix",
    "distribution_from_values",
    "distribution_stats",
    "exponential_functional_values",
    "generate_corpus",
    "generate_graph",
    "j_sphere_profile",
    "jensen_gap_bound",
    "lemma_checks",
    "linear_functional_values",
    "ordering_bound",
    "parse_edge_list",
    "partition_distribution",
    "renyi_entropy",
    "run_sweep",
    "shannon_entropy",
    "sphere_counts_matrix",
    "summarize_report",
    "thm1_refined_bound",
    "thm1_renyi_shannon_bounds",
    "thm3_partition_vs_functional",
    "thm4_scaled_dominance",
    "thm5_additive_dominance",
    "thm6_convex_combination",
    "vertex_orbits",
    "write_edge_list",
]
