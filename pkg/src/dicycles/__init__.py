"""Resilience of random directed graphs to edge deletion: constructions,
witnesses, threshold algebra, cycle finders, and a seeded experiment harness.
"""

from .graph import (
    CycleWitness,
    Digraph,
    PathWitness,
    density,
    edge_count_between,
    generate_random,
    parse,
    scc_decomposition,
    serialize,
)
from .thresholds import (
    ResilienceCurvePoint,
    asymptotic_threshold,
    predicted_cycle_length,
    solve_alpha,
    w,
    woodall_bound,
)

__all__ = [
    "CycleWitness",
    "Digraph",
    "PathWitness",
    "ResilienceCurvePoint",
    "asymptotic_threshold",
    "density",
    "edge_count_between",
    "generate_random",
    "parse",
    "predicted_cycle_length",
    "scc_decomposition",
    "serialize",
    "solve_alpha",
    "w",
    "woodall_bound",
]

__version__ = "0.1.0"
