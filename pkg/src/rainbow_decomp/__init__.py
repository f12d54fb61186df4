"""Edge-disjoint rainbow spanning trees in edge-colored graphs.

Construction side: randomized edge decomposition into q parts, one rainbow
spanning tree extracted per part by matroid intersection.  Certification
side: brute-force oracles (subset enumeration, set-partition enumeration,
exhaustive forest search) for every inequality the construction relies on.
"""

from .graphs import (
    CutStats,
    DegreeSummary,
    EdgeColoredGraph,
    GraphError,
    VertexPartition,
    build_graph,
    colors_across,
    connected_components,
    crossing_edges,
    cut,
    degrees,
    is_connected,
    load_graph,
    save_graph,
    volume,
)
from .spectral import (
    CheegerCertificate,
    CheegerReport,
    JacobiConvergenceError,
    SpectralSummary,
    check_cheeger_inequality,
    cheeger_exact,
    jacobi_eigh,
    normalized_laplacian,
    spectrum,
)
from .rainbow import (
    RainbowForest,
    SchrijverVerdict,
    has_rainbow_spanning_tree,
    is_rainbow_forest,
    max_rainbow_forest,
    peel_disjoint_trees,
    schrijver_bruteforce,
)
from .decomposition import (
    ChernoffBounds,
    CrossingBoundReport,
    Decomposition,
    DecompositionError,
    DecompositionParams,
    DisconnectedGraphError,
    PartsReport,
    PseudocolorPartition,
    SingletonProfile,
    VacuousHypothesisError,
    chernoff_tail_bounds,
    color_cap_ok,
    crossing_edges_bound,
    crossing_edges_needed,
    cut_lower_bound,
    cut_lower_bound_size,
    decompose,
    part_count,
    part_count_formula,
    pseudocolor_classes,
    random_edge_partition,
    singleton_profile,
    small_part_threshold,
    verify_parts,
)
from .generators import (
    WeightSequence,
    color_one_factorization,
    color_rainbow,
    color_random_bounded,
    gen_chung_lu,
    gen_complete,
    gen_complete_bipartite,
    gen_random_regular,
)
from .harness import (
    ExperimentSpec,
    SpecError,
    TrialRecord,
    emit_csv,
    emit_json,
    load_spec,
    run_experiment,
)

__version__ = "0.1.0"
