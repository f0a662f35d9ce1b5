"""Degree-list realization for graphs, loop-digraphs and digraphs."""

from .core import (
    DIGRAPH,
    GRAPH,
    LOOPDIGRAPH,
    BinaryMatrix,
    Direction,
    InvalidListError,
    RealizationKind,
    Transfer,
    TransferPath,
    lex_sort,
    parse_list,
    validate,
)
from .count import CountResult, count, count_realizations, enumerate_realizations, lower_bound
from .feasibility import brute_force_realizable, erdos_gallai, fulkerson_chen_anstee, gale_ryser, is_feasible
from .majorize import apply_transfer, conjugate, convex_order_check, is_majorized, muirhead_path
from .construct import realize
from .extremal import minconvex_base, minconvex_paired, opposed_sort, verify_extremal_max

__version__ = "0.1.0"

__all__ = [
    "DIGRAPH", "GRAPH", "LOOPDIGRAPH", "BinaryMatrix", "Direction", "InvalidListError", "RealizationKind",
    "Transfer", "TransferPath", "lex_sort", "parse_list", "validate",
    "CountResult", "count", "count_realizations", "enumerate_realizations", "lower_bound",
    "brute_force_realizable", "erdos_gallai", "fulkerson_chen_anstee", "gale_ryser", "is_feasible",
    "apply_transfer", "conjugate", "convex_order_check", "is_majorized", "muirhead_path",
    "realize", "minconvex_base", "minconvex_paired", "opposed_sort", "verify_extremal_max",
]
