"""Exact-arithmetic toolkit for wireless link scheduling under conflict
hypergraphs: feasibility LPs over independent sets, a greedy interval
scheduler with its sufficient conditions, and worst-case interference
metrics.  Every quantity is a ``fractions.Fraction``; nothing is floated."""

__version__ = "0.1.0"

from .errors import (
    DemandUnmet,
    DurationExceedsOne,
    EdgeRowSumTooSmall,
    EdgeTooSmall,
    EntryOutOfRange,
    HypergraphInvalid,
    HyperschedError,
    InsufficientRoom,
    InvalidWeightMatrix,
    LinkOutOfRange,
    NonNeighborNonzero,
    NonzeroDiagonal,
    NotAntichain,
    NotIndependent,
    NotSymmetric,
    ParseError,
    ScheduleInvalid,
    ScheduleStuck,
    SizeLimitExceeded,
)
from .hypergraph import (
    DEFAULT_AUTOMORPHISM_LIMIT,
    DEFAULT_SIZE_LIMIT,
    Hypergraph,
    Permutation,
    automorphisms,
    edges_containing,
    enumerate_independent_sets,
    enumerate_maximal_independent_sets,
    is_independent,
    minimalize,
    neighbors,
    validate_hypergraph,
)
from .intervals import IntervalSet, earliest_fit, intersect_all, union_all
from .lp import LinearProgram, LpSolution, LpStatus, solve_lp
from .feasibility import (
    ChiFResult,
    DemandVector,
    IncidenceMatrix,
    Schedule,
    fractional_chromatic_number,
    incidence_matrix,
    is_feasible,
    validate_schedule,
)
from .greedy import (
    ConditionReport,
    StepBound,
    WeightMatrix,
    check_delta_condition,
    check_edge_min_condition,
    check_weighted_condition,
    delta_matrix,
    greedy_schedule,
    greedy_step_bound,
    intervals_to_schedule,
    validate_weight_matrix,
)
from .metrics import (
    BBound,
    BetaWitness,
    LinkMetric,
    MetricsReport,
    StarProfile,
    b_bound,
    beta_by_enumeration,
    beta_star_formula,
    delta_i_doubleprime,
    delta_i_prime,
    interference_metrics,
    is_beta_star,
    permute_demand,
    symmetrize_demand,
)
