"""Shortest common superstring with reverse complements (SCS-RC)."""

from .approx import Solution, greedy_baseline, solve, verify
from .cycle_cover import CycleCover, min_cycle_cover
from .errors import (
    BudgetError,
    EmptyInstanceError,
    InfeasibleError,
    InternalInvariantError,
    InvalidCycleError,
    InvalidInputError,
    InvalidSolutionError,
    ScsrcError,
    TooSmallError,
)
from .exact import OracleBudget, opt_cycle_cover, opt_scsrc
from .graphs import OrientedGraph, build_oriented_graph
from .matching import Matching, WeightedGraph, max_weight_perfect_matching
from .reductions import decode_dna, decode_scs, encode_dna, encode_scs
from .rotation import Representative, critical_point, extract_representative
from .strings import DNA, Alphabet, Instance, dist, merge, normalize, overlap, period, rc
from .textio import parse_instance, read_instance

__version__ = "0.1.0"

__all__ = [
    "DNA", "Alphabet", "BudgetError", "CycleCover", "EmptyInstanceError", "InfeasibleError",
    "Instance", "InternalInvariantError", "InvalidCycleError", "InvalidInputError",
    "InvalidSolutionError", "Matching", "OracleBudget", "OrientedGraph", "Representative",
    "ScsrcError", "Solution", "TooSmallError", "WeightedGraph", "build_oriented_graph",
    "critical_point", "decode_dna", "decode_scs", "dist", "encode_dna", "encode_scs",
    "extract_representative", "greedy_baseline", "max_weight_perfect_matching", "merge",
    "min_cycle_cover", "normalize", "opt_cycle_cover", "opt_scsrc", "overlap", "parse_instance",
    "period", "rc", "read_instance", "solve", "verify",
]
