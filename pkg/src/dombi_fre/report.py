"""Instance documents and solve reports (JSON).

An instance document is a JSON object::

    {"lambda": 2, "A": [[...], ...], "b": [...], "epsilon": 1e-9}

``epsilon`` is optional.  Generated instances additionally carry ``witness``
and ``seed``.  Floats are written with ``repr`` so they survive a round trip
bit for bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .optimizer import optimize
from .oracle import GeneratedInstance
from .resolver import DEFAULT_MAX_CANDIDATES, Instance, resolve
from .tnorm import DEFAULT_EPSILON

_KNOWN_KEYS = {"lambda", "A", "b", "epsilon", "witness", "seed"}


class InstanceFormatError(ValueError):
    pass


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InstanceFormatError(f"{where}: expected a number, got {value!r}")
    return float(value)


def parse_instance(source: str, lam: float | None = None, epsilon: float | None = None) -> Instance:
    """Parse and validate an instance document.

    ``lam`` / ``epsilon`` override the values stored in the document.
    """
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InstanceFormatError("top level must be an object with fields lambda, A, b")
    unknown = sorted(set(doc) - _KNOWN_KEYS)
    if unknown:
        raise InstanceFormatError(f"unknown field(s): {', '.join(unknown)}")
    for key in ("A", "b") + (() if lam is not None else ("lambda",)):
        if key not in doc:
            raise InstanceFormatError(f"missing field '{key}'")

    rows = doc["A"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise InstanceFormatError("A: expected a non-empty array of arrays")
    n = len(rows[0])
    if n == 0:
        raise InstanceFormatError("A[0]: row is empty")
    A = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InstanceFormatError(f"A[{i}]: ragged row, expected {n} entries, got {len(row)}")
        A.append([_number(v, f"A[{i}][{j}]") for j, v in enumerate(row)])
    if not isinstance(doc["b"], list):
        raise InstanceFormatError("b: expected an array")
    b = [_number(v, f"b[{i}]") for i, v in enumerate(doc["b"])]
    if len(b) != len(A):
        raise InstanceFormatError(f"b: expected {len(A)} entries, got {len(b)}")

    for i, row in enumerate(A):
        for j, v in enumerate(row):
            if not 0.0 <= v <= 1.0:
                raise InstanceFormatError(f"A[{i}][{j}] = {v!r}: entry out of [0,1]")
    for i, v in enumerate(b):
        if not 0.0 <= v <= 1.0:
            raise InstanceFormatError(f"b[{i}] = {v!r}: entry out of [0,1]")

    lam = _number(doc["lambda"], "lambda") if lam is None else float(lam)
    if not (math.isfinite(lam) and lam > 0.0):
        raise InstanceFormatError(f"lambda = {lam!r}: lambda must be > 0")
    if epsilon is None:
        epsilon = _number(doc["epsilon"], "epsilon") if "epsilon" in doc else DEFAULT_EPSILON
    if not (math.isfinite(epsilon) and epsilon > 0.0):
        raise InstanceFormatError(f"epsilon = {epsilon!r}: epsilon must be > 0")
    return Instance(np.array(A), np.array(b), lam, epsilon)


def instance_document(inst: Instance | GeneratedInstance) -> dict:
    extra = {}
    if isinstance(inst, GeneratedInstance):
        extra = {"witness": inst.witness.tolist(), "seed": inst.seed}
        inst = inst.inst
    return {
        "lambda": inst.lam,
        "A": inst.A.tolist(),
        "b": inst.b.tolist(),
        "epsilon": inst.epsilon,
        **extra,
    }


def dump_instance(inst: Instance | GeneratedInstance) -> str:
    return json.dumps(instance_document(inst), indent=2) + "\n"


@dataclass(frozen=True)
class SolveReport:
    feasible: bool
    epsilon: float
    lam: float
    x_max: list[float] | None = None
    simplified_matrix: list[list[float]] | None = None
    candidate_count: int = 0
    minimal_solutions: list[list[float]] = field(default_factory=list)
    optimal_value: float | None = None
    optimal_points: list[list[float]] = field(default_factory=list)
    discarded_candidates: int = 0

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "lambda": self.lam,
            "epsilon": self.epsilon,
            "x_max": self.x_max,
            "simplified_matrix": self.simplified_matrix,
            "candidate_count": self.candidate_count,
            "minimal_solutions": self.minimal_solutions,
            "optimal_value": self.optimal_value,
            "optimal_points": self.optimal_points,
            "discarded_candidates": self.discarded_candidates,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_table(self) -> str:
        def vec(v):
            return "  ".join(f"{t:.6f}" for t in v)

        lines = [f"feasible: {'yes' if self.feasible else 'no'}  (lambda={self.lam:g}, epsilon={self.epsilon:g})"]
        if not self.feasible:
            return "\n".join(lines) + "\n"
        lines.append(f"maximum solution: {vec(self.x_max)}")
        lines.append("simplified matrix:")
        lines += [f"  {vec(row)}" for row in self.simplified_matrix]
        lines.append(
            f"candidates: {self.candidate_count}   discarded: {self.discarded_candidates}"
        )
        lines.append(f"minimal solutions ({len(self.minimal_solutions)}):")
        lines += [f"  {vec(x)}" for x in self.minimal_solutions]
        lines.append(f"optimal value: {self.optimal_value:.6f}")
        lines.append(f"optimal points ({len(self.optimal_points)}):")
        lines += [f"  {vec(x)}" for x in self.optimal_points]
        return "\n".join(lines) + "\n"


def solve_report(inst: Instance, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> SolveReport:
    sol = resolve(inst, max_candidates)
    if not sol.feasible or not sol.minimals:
        return SolveReport(False, inst.epsilon, inst.lam, discarded_candidates=len(sol.discarded))
    opt = optimize(inst, sol)
    return SolveReport(
        feasible=True,
        epsilon=inst.epsilon,
        lam=inst.lam,
        x_max=sol.x_max.tolist(),
        simplified_matrix=sol.simplified.tolist(),
        candidate_count=sol.candidate_count,
        minimal_solutions=[x.tolist() for x in sol.minimals],
        optimal_value=opt.optimal_value,
        optimal_points=[x.tolist() for x in opt.optimal_points],
        discarded_candidates=len(sol.discarded),
    )
