"""Lights Out solver engine for arbitrary simple graphs.

Two solvers for reaching the complementary configuration: a constructive
one built by induction over induced subgraphs, and the classical GF(2)
linear-system approach. A brute-force oracle cross-validates both.
"""

from .bits import BitVector
from .errors import CapExceededError, GraphParseError
from .generators import generate
from .gf2 import (
    GF2Matrix,
    SolveOutcome,
    build_system,
    eliminate,
    in_span,
    min_weight_solution,
    solve,
    solve_complement,
    solve_transition,
)
from .graphs import (
    Configuration,
    Graph,
    PressSet,
    apply_press_set,
    complement,
    effect,
    induced_subgraph,
    odd_degree_vertices,
    parse_graph,
    press,
    to_edge_list,
    to_json_obj,
)
from .inductive import (
    MemoTable,
    Trace,
    complementing_set,
    pair_toggle_set,
    toggle_parity_at,
)
from .oracle import (
    GraphCorpus,
    TheoremReport,
    brute_force_solutions,
    enumerate_graphs,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BitVector",
    "CapExceededError",
    "Configuration",
    "GF2Matrix",
    "Graph",
    "GraphCorpus",
    "GraphParseError",
    "MemoTable",
    "PressSet",
    "SolveOutcome",
    "TheoremReport",
    "Trace",
    "apply_press_set",
    "brute_force_solutions",
    "build_system",
    "complement",
    "complementing_set",
    "effect",
    "eliminate",
    "enumerate_graphs",
    "generate",
    "in_span",
    "induced_subgraph",
    "min_weight_solution",
    "odd_degree_vertices",
    "pair_toggle_set",
    "parse_graph",
    "press",
    "solve",
    "solve_complement",
    "solve_transition",
    "to_edge_list",
    "to_json_obj",
    "toggle_parity_at",
    "verify_theorem",
]
