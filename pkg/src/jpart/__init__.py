"""Judicious graph partitioning toolkit.

Exact, fully-verifiable implementations of a cluster of bipartition results:
degree-sequence realizations whose parity bisection nearly halves every
degree, the good-bisection criterion for complete multipartite graphs with
exhaustive oracles, threshold-sharp norm bounds for bipartitions with exact
irrational comparisons, and the triple-clique family on which every
bipartition keeps one side heavy.
"""

from .counterexamples import (
    AbPair,
    MinMaxSideResult,
    PairSeq,
    Thm2nVerification,
    ab_pairs,
    min_max_side,
    pair_sequence,
    triple_clique,
    verify_thm_2n,
)
from .degree_sequences import (
    DegreeSequence,
    LayoffResult,
    is_graphic,
    lay_off,
    lay_off_with_order,
)
from .errors import CounterexampleError
from .graph_core import (
    Bipartition,
    Bisection,
    LabeledGraph,
    PartitionStats,
    bisection_slack,
    build_graph,
    complete_graph,
    degree_sequence,
    evaluate_bipartition,
    max_bisection,
    parity_bisection,
    partition_json,
    parse_graph,
    format_graph,
    read_graph_file,
    write_graph_file,
)
from .hs_realization import (
    Claim1Decomposition,
    RealizationCertificate,
    build_realization,
    claim1_decompose,
    reduction_trace,
    select_pivot_z,
    verify_certificate,
)
from .judicious_bounds import (
    EdwardsBound,
    NormResult,
    TExpr,
    certify_judicious,
    cmp_power_sums,
    compare_to_t,
    exact_min_norm,
    f_lambda_k,
    find_judicious_bipartition,
    k_partition_min_norm,
    norm_bound,
    norm_bound_exact,
    t_of_m,
    within_kpart_bound,
)
from .multipartite import (
    CrossingCounts,
    GoodSubsetWitness,
    MinusEdgeAssignment,
    MultipartiteSpec,
    bisection_from_counts,
    check_bs3_hypothesis,
    complete_multipartite,
    even_order_good_bisection,
    find_good_bisection,
    floor_good_bisection,
    good_bisection_from_witness,
    good_bisection_oracle,
    good_subset_search,
    minus_edge_oracle,
)

__version__ = "0.1.0"
