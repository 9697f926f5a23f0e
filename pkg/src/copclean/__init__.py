"""Exact solvers and simulators for sweeping contamination off a graph with
sight-limited searchers, plus the pursuit variants used to compare them."""

from .cleaning import (
    AFTER_CLEAN,
    AFTER_SPREAD,
    CleaningState,
    StrategyScript,
    Trace,
    init_state,
    run_script,
    sight,
    step,
)
from .construction import (
    BlockingReport,
    ConstructionGraph,
    ConstructionSpec,
    build_construction,
    check_blocking,
    check_middle_dominating,
    default_partition,
    scripted_seeing_strategy,
    spacing_ok,
)
from .errors import (
    BadKError,
    BadParamError,
    ConvergenceError,
    CopcleanError,
    Graph6Error,
    IllegalMoveError,
    TooLargeError,
    UnsupportedSizeError,
    VertexRangeError,
)
from .families import (
    complete,
    cycle,
    from_spec,
    heawood,
    path,
    random_tree,
    spider,
    star,
)
from .graphs import (
    Graph,
    GraphMetrics,
    canonical_key,
    closed_l_neighborhood,
    count_connected_classes,
    count_graph_classes,
    emit_graph6,
    enumerate_connected,
    girth,
    metrics,
    parse_edge_list,
    parse_graph6,
)
from .solvers import (
    CleanSolve,
    LimitedCaptureResult,
    PursuitResult,
    ThresholdResult,
    belief_capture_time,
    capture_number_limited,
    capture_possible_limited,
    cleanable,
    cop_number,
    inference_number,
    limited_capture_solve,
    max_clean,
    pursuit_solve,
    reach_number,
    seeing_number,
    solve_cleaning,
)
from .stochastic import (
    ExpectedTimeResult,
    MonteCarloResult,
    expected_time,
    monte_carlo,
)

__version__ = "0.1.0"

__all__ = [
    "AFTER_CLEAN",
    "AFTER_SPREAD",
    "BadKError",
    "BadParamError",
    "BlockingReport",
    "CleanSolve",
    "CleaningState",
    "ConstructionGraph",
    "ConstructionSpec",
    "ConvergenceError",
    "CopcleanError",
    "ExpectedTimeResult",
    "Graph",
    "Graph6Error",
    "GraphMetrics",
    "IllegalMoveError",
    "LimitedCaptureResult",
    "MonteCarloResult",
    "PursuitResult",
    "StrategyScript",
    "ThresholdResult",
    "TooLargeError",
    "Trace",
    "UnsupportedSizeError",
    "VertexRangeError",
    "belief_capture_time",
    "build_construction",
    "canonical_key",
    "capture_number_limited",
    "capture_possible_limited",
    "check_blocking",
    "check_middle_dominating",
    "cleanable",
    "closed_l_neighborhood",
    "complete",
    "cop_number",
    "count_connected_classes",
    "count_graph_classes",
    "cycle",
    "default_partition",
    "emit_graph6",
    "enumerate_connected",
    "expected_time",
    "from_spec",
    "girth",
    "heawood",
    "inference_number",
    "init_state",
    "limited_capture_solve",
    "max_clean",
    "metrics",
    "monte_carlo",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "pursuit_solve",
    "random_tree",
    "reach_number",
    "run_script",
    "scripted_seeing_strategy",
    "seeing_number",
    "sight",
    "solve_cleaning",
    "spacing_ok",
    "spider",
    "star",
    "step",
]
