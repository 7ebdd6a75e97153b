"""Exact maximum common induced subgraph solver with degree and learned branching."""

from .domains import (
    DomainStore,
    LabelClass,
    bound,
    exclude_vertex,
    initial_classes,
    select_class,
    split,
)
from .graph import (
    AdjacencyKind,
    Graph,
    UsageError,
    adjacency_kind,
    degree,
    verify_common_subgraph,
)
from .instance_io import ParseError, ParseOptions, parse_lad, write_lad, write_result_row
from .oracle import OracleRefused, OracleResult, brute_force_mcs
from .policy import PolicyKind, ScoreTable
from .search import (
    SearchStats,
    SolveConfig,
    SolveResult,
    Status,
    branching_sd,
    run,
    solve,
    solve_top_down,
)

__all__ = [
    "AdjacencyKind",
    "DomainStore",
    "Graph",
    "LabelClass",
    "OracleRefused",
    "OracleResult",
    "ParseError",
    "ParseOptions",
    "PolicyKind",
    "ScoreTable",
    "SearchStats",
    "SolveConfig",
    "SolveResult",
    "Status",
    "UsageError",
    "adjacency_kind",
    "bound",
    "branching_sd",
    "brute_force_mcs",
    "degree",
    "exclude_vertex",
    "initial_classes",
    "parse_lad",
    "run",
    "select_class",
    "solve",
    "solve_top_down",
    "split",
    "verify_common_subgraph",
    "write_lad",
    "write_result_row",
]
