"""Perfect matching cuts: exact search, polynomial special cases, reductions."""

from .branching import (
    BranchAudit,
    BranchVector,
    MeasureViolation,
    SolverState,
    apply_reductions,
    branching_factor,
    minimum_vectors,
    select_branch,
    solve_from_seed,
    solve_pmc,
    worst_case_factors,
)
from .graph import (
    INFINITE,
    BlockDecomposition,
    Cut,
    CutClass,
    Graph,
    GraphFormatError,
    biconnected_blocks,
    classify_cut,
    connected_components,
    girth,
    is_bipartite,
    is_connected,
    is_disconnected_perfect_matching,
    is_pmc,
    max_degree,
    parse_graph,
    triangle_saturated_components,
)
from .oracle import InstanceTooLarge, OracleLimits, enumerate_pmcs, has_pmc_oracle, is_nae, nae_brute
from .poly import (
    NotInClass,
    SupernodeTree,
    TPresentError,
    TWitness,
    caterpillar_criterion,
    find_induced_t,
    is_induced_t,
    is_pseudo_chordal,
    is_t_free,
    solve_max_deg2,
    solve_pseudo_chordal,
    solve_t_free,
)
from .reductions import (
    CnfFormatError,
    CnfFormula,
    ReductionMap,
    ReductionReport,
    extract_assignment,
    fano_formula,
    lift_assignment,
    parse_cnf,
    reduce_basic,
    reduce_girth,
    verify_reduction,
)
from .result import CertificateError, SolveResult, SolveStats

__version__ = "0.1.0"
