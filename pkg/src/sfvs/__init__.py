"""Exact solvers for subset feedback vertex set and node multiway cut on
graphs of bounded independent set number, with brute-force oracles and
hardness-reduction generators for end-to-end verification."""

from .flow import (
    FlowNetwork,
    MaxFlowResult,
    UnboundedFlowError,
    max_flow,
    min_vertex_separator,
    min_weight_bipartite_vertex_cover,
)
from .graph import (
    AlphaBoundError,
    BlockDecomposition,
    Graph,
    GraphError,
    InducedSubgraph,
    InternalInvariantError,
    PreconditionError,
    block_decomposition,
    find_independent_set,
    independence_at_most,
    induced_subgraph,
    is_s_forest,
    max_independent_set,
    neighborhood,
)
from .multiway import (
    check_multiway,
    solve_nmc_alpha2,
    solve_nmcdt_xp,
    solve_wnmcdt_alpha2,
)
from .oracle import (
    KINDS,
    ProblemInstance,
    SizeGuardError,
    Solution,
    feasible_removed,
    oracle_clique_cover_at_most,
    oracle_solve,
)
from .reductions import (
    MulticoloredInstance,
    ReductionOutput,
    TripartiteGraph,
    multicolored_source_optimum,
    reduce_mcis_to_fvs,
    reduce_vc3_to_nmc,
    reduce_vc3_to_wsfvs,
    verify_reduction,
)
from .solvers import (
    SDistancePartition,
    b_set,
    build_hat_graph,
    enumerate_s1_candidates,
    enumerate_valid_tuples,
    solve_case_a1,
    solve_case_a1a2,
    solve_sfvs_xp,
    solve_wsfvs_alpha3,
)

__version__ = "0.1.0"
