"""Greedy approximation, exact oracle and hardness reduction for metric c-dispersion."""

from .cost import CostProfile, cost_point, cost_set
from .exact import BallReport, ball_check, exact_solve
from .greedy import best_extension, greedy_solve, seed_enumeration
from .metric import MetricInstance, MetricValidationReport, from_matrix, from_points, validate_metric
from .reduction import (
    Graph,
    dispersion_decision,
    graph_to_instance,
    independent_set_bruteforce,
    solution_to_independent_set,
)
from .solution import GreedyTrace, SolveParams, Solution

__version__ = "0.1.0"

__all__ = [
    "BallReport",
    "CostProfile",
    "Graph",
    "GreedyTrace",
    "MetricInstance",
    "MetricValidationReport",
    "Solution",
    "SolveParams",
    "ball_check",
    "best_extension",
    "cost_point",
    "cost_set",
    "dispersion_decision",
    "exact_solve",
    "from_matrix",
    "from_points",
    "graph_to_instance",
    "greedy_solve",
    "independent_set_bruteforce",
    "seed_enumeration",
    "solution_to_independent_set",
    "validate_metric",
]
