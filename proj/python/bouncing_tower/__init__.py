"""Solvers, step counts and brute-force verification for tower puzzles with
parametric (middle) insertion and removal points.

All heavy lifting happens in the C++ extension; this package re-exports it.
Configurations are words over {A, B, C} (letter i = peg of the i-th largest
disk), moves are ("A", "C")-style peg pairs, and alpha is an exact rational
given as a "p/q" string: "0/1" is the classic tower, "1/2" the bouncing tower.
"""

from bouncing_tower._core import (
    CapError,
    EmptyPegError,
    InsertionError,
    TraceParseError,
    WordError,
    apply_move,
    bfs_distance,
    count,
    diskpile_count,
    diskpile_oracle,
    diskpile_solve,
    export_graph,
    insertion_depth,
    legal_moves,
    parse_trace,
    removal_order,
    removal_rank,
    replay_verify,
    restricted_reachability,
    serialize_trace,
    shortest_path_count,
    solve,
    verify_solver,
    worst_case_count,
)

__all__ = [
    "CapError",
    "EmptyPegError",
    "InsertionError",
    "TraceParseError",
    "WordError",
    "apply_move",
    "bfs_distance",
    "count",
    "diskpile_count",
    "diskpile_oracle",
    "diskpile_solve",
    "export_graph",
    "insertion_depth",
    "legal_moves",
    "parse_trace",
    "removal_order",
    "removal_rank",
    "replay_verify",
    "restricted_reachability",
    "serialize_trace",
    "shortest_path_count",
    "solve",
    "verify_solver",
    "worst_case_count",
]

__version__ = "0.1.0"
