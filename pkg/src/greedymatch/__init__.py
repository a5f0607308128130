"""Greedy maximum-matching heuristics for sparse random graphs."""

from .graph import ContractionRecord, DynamicGraph, Matching, build, read_edge_list, write_edge_list
from .matcher import ALGORITHMS, AlgorithmSpec, StepCounters, parse_algorithm, run, unwind
from .rng import SeededRng

__all__ = [
    "ALGORITHMS",
    "AlgorithmSpec",
    "ContractionRecord",
    "DynamicGraph",
    "Matching",
    "SeededRng",
    "StepCounters",
    "build",
    "parse_algorithm",
    "read_edge_list",
    "run",
    "unwind",
    "write_edge_list",
]
