"""Decompose fault-tolerant replacement paths into low-fault subpaths."""

from .graph import Graph, canon, distances, is_shortest, shortest_path
from .greedy import baseline_decompose, greedy_decompose, greedy_decompose_weighted
from .instance import Decomposition, ReplacementInstance
from .lowerbound import gen_glued, gen_glued_mixed, gen_single, gen_single_odd, half_arc_min_fault
from .matching import matching_with_witness, max_matching
from .oracle import FaultOracle, min_fault_set, restorable_check, verify_decomposition
from .poly import (
    base_fault_reach,
    build_gamma,
    compute_subpaths,
    compute_subpaths_weighted,
    fault_reduce,
)

__all__ = [
    "Decomposition",
    "FaultOracle",
    "Graph",
    "ReplacementInstance",
    "base_fault_reach",
    "baseline_decompose",
    "build_gamma",
    "canon",
    "compute_subpaths",
    "compute_subpaths_weighted",
    "distances",
    "fault_reduce",
    "gen_glued",
    "gen_glued_mixed",
    "gen_single",
    "gen_single_odd",
    "greedy_decompose",
    "greedy_decompose_weighted",
    "half_arc_min_fault",
    "is_shortest",
    "matching_with_witness",
    "max_matching",
    "min_fault_set",
    "restorable_check",
    "shortest_path",
    "verify_decomposition",
]
