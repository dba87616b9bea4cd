"""Solver for fuzzy relational equations under max-Dombi composition,
with the latticized objective min max(x)."""

from .optimizer import OptimizationResult, objective, optimize
from .oracle import GeneratedInstance, full_enumeration, generate
from .resolver import (
    CandidateCapExceeded,
    Candidate,
    IndexSets,
    InfeasibleError,
    Instance,
    SolutionSet,
    admissible_sets,
    check_feasible,
    enumerate_candidates,
    max_solution,
    minimal_solutions,
    resolve,
    simplify,
)
from .tnorm import compose_row, dombi, residual_v

__all__ = [
    "Candidate",
    "CandidateCapExceeded",
    "GeneratedInstance",
    "IndexSets",
    "InfeasibleError",
    "Instance",
    "OptimizationResult",
    "SolutionSet",
    "admissible_sets",
    "check_feasible",
    "compose_row",
    "dombi",
    "enumerate_candidates",
    "full_enumeration",
    "generate",
    "max_solution",
    "minimal_solutions",
    "objective",
    "optimize",
    "residual_v",
    "resolve",
    "simplify",
]
