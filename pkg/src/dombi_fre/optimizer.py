"""Latticized objective ``z(x) = max_j x_j`` minimised over the FRE feasible set.

Some minimal solution is always optimal (any feasible point sits above a
minimal one and ``z`` is monotone), so the optimum is read off the minimal
solutions already produced by :func:`~dombi_fre.resolver.resolve`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .resolver import DEFAULT_MAX_CANDIDATES, Instance, InfeasibleError, SolutionSet, resolve


@dataclass(frozen=True, eq=False)
class OptimizationResult:
    optimal_value: float
    optimal_points: tuple[np.ndarray, ...]
    evaluated_count: int


def objective(x) -> float:
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        raise ValueError("objective of an empty vector")
    return float(np.max(x))


def optimize(
    inst: Instance,
    solution: SolutionSet | None = None,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> OptimizationResult:
    """Minimise ``max(x)`` subject to ``A phi x = b``.

    Every minimal solution within ``inst.epsilon`` of the best objective is
    returned.  Pass ``solution`` to reuse an earlier :func:`resolve` result.
    Raises :class:`InfeasibleError` if the system has no solution.
    """
    sol = resolve(inst, max_candidates) if solution is None else solution
    if not sol.feasible or not sol.minimals:
        raise InfeasibleError("A phi x = b has no solution")
    values = [objective(x) for x in sol.minimals]
    best = min(values)
    points = tuple(x for x, v in zip(sol.minimals, values) if v <= best + inst.epsilon)
    return OptimizationResult(best, points, len(values))
