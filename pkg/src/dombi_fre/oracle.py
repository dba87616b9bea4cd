"""Brute-force reference for small instances and a seeded instance generator.

``full_enumeration`` deliberately avoids everything in :mod:`dombi_fre.resolver`
except the :class:`Instance` container: it walks every assignment vector over
the *unsimplified* admissible sets (rows with ``b_i = 0`` included), keeps the
vectors that satisfy the equations and returns their pairwise-minimal subset.
Only the scalar kernels of :mod:`dombi_fre.tnorm` are shared with the solver.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .resolver import Instance
from .tnorm import DEFAULT_EPSILON, compose_row, dombi, residual_v

DEFAULT_ORACLE_CAP = 10**5
LAMBDA_SWEEP = (0.5, 1.0, 2.0, 5.0, 20.0)
DEGENERATE_RATE = 0.15


class OracleCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class GeneratedInstance:
    inst: Instance
    witness: np.ndarray
    seed: int


def _solves(inst: Instance, x: list[float]) -> bool:
    A, b, eps = inst.A.tolist(), inst.b.tolist(), inst.epsilon
    return all(abs(compose_row(A[i], x, inst.lam) - b[i]) <= eps for i in range(inst.m))


def _below(y: list[float], x: list[float], eps: float) -> bool:
    """``y <= x`` componentwise and ``y != x``, both up to eps."""
    return all(u <= v + eps for u, v in zip(y, x)) and any(u < v - eps for u, v in zip(y, x))


def full_enumeration(inst: Instance, cap: int = DEFAULT_ORACLE_CAP) -> list[list[float]]:
    """Minimal solutions by exhaustive search over all assignment vectors."""
    A, b, eps, lam = inst.A.tolist(), inst.b.tolist(), inst.epsilon, inst.lam
    J = [[j for j in range(inst.n) if A[i][j] >= b[i] - eps] for i in range(inst.m)]
    size = math.prod(len(s) for s in J)
    if size > cap:
        raise OracleCapExceeded(f"|E| = {size} exceeds oracle cap {cap}")

    feasible: list[list[float]] = []
    for e in itertools.product(*J):
        x = [0.0] * inst.n
        for i, j in enumerate(e):
            if b[i] > eps:
                x[j] = max(x[j], residual_v(b[i], A[i][j], lam, eps))
        if not _solves(inst, x):
            continue
        if any(max(abs(u - v) for u, v in zip(x, y)) <= eps for y in feasible):
            continue
        feasible.append(x)

    minimal = [x for x in feasible if not any(_below(y, x, eps) for y in feasible)]
    return sorted(minimal)


def _unit_sample(rng: np.random.Generator, shape) -> np.ndarray:
    vals = rng.uniform(0.0, 1.0, size=shape)
    special = rng.random(shape) < DEGENERATE_RATE
    vals[special] = rng.choice([0.0, 1.0], size=int(special.sum()))
    return vals


def generate(seed: int, m: int, n: int, lam: float, zero_b_rows: int = 0) -> GeneratedInstance:
    """Random instance built around a known solution ``witness``.

    ``b`` is computed as ``A phi witness``; ``zero_b_rows`` rows are forced to
    ``b_i = 0`` by clearing the witness on their support.  A fraction of
    entries are made degenerate (exact 0, exact 1, or ``a_ij = b_i``).
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    if not 0 <= zero_b_rows <= m:
        raise ValueError(f"zero_b_rows must lie in [0, {m}]")
    for attempt in range(100):
        rng = np.random.default_rng([seed, attempt])
        out = _attempt(rng, m, n, lam, zero_b_rows)
        if out is not None:
            A, b, x0 = out
            x0.setflags(write=False)
            return GeneratedInstance(Instance(A, b, lam), x0, seed)
    raise RuntimeError(f"could not build a consistent instance for seed {seed}")


def _attempt(rng, m, n, lam, zero_b_rows):
    A = _unit_sample(rng, (m, n))
    x0 = _unit_sample(rng, n)
    for i in rng.choice(m, size=zero_b_rows, replace=False):
        x0[A[i] > 0.0] = 0.0

    def rhs():
        return np.array([compose_row(A[i], x0, lam) for i in range(m)])

    b = rhs()
    collide = rng.random((m, n)) < DEGENERATE_RATE
    # keep the entries that realise each b_i so the collisions stay exact
    for i in range(m):
        for j in range(n):
            if dombi(A[i, j], x0[j], lam) == b[i]:
                collide[i, j] = False
    A[collide] = np.broadcast_to(b[:, None], (m, n))[collide]

    # For large lam, dombi(a, x) rounds to min(a, x) well before x reaches 1,
    # so b = A phi x0 can hold in floating point while x0 sits below every
    # residual of some row.  Move x0 onto the residuals until it realises each
    # row exactly.
    eps = DEFAULT_EPSILON
    for _ in range(20):
        b = rhs()
        moved = False
        for i in range(m):
            if b[i] <= eps:
                continue
            cols = [j for j in range(n) if A[i, j] >= b[i] - eps]
            v = {j: residual_v(b[i], A[i, j], lam, eps) for j in cols}
            for j in cols:
                if x0[j] > v[j] + eps:
                    x0[j] = v[j]
                    moved = True
            if not any(x0[j] >= v[j] - eps for j in cols):
                k = max(cols, key=lambda j: dombi(A[i, j], x0[j], lam))
                x0[k] = v[k]
                moved = True
        if not moved:
            return A, b, x0
    return None


def corpus(runs: int, max_m: int = 4, max_n: int = 4, base_seed: int = 0):
    """Deterministic stream of generated instances sweeping size, lambda and zero rows."""
    for k in range(runs):
        seed = base_seed + k
        rng = np.random.default_rng([seed, 1])
        m = int(rng.integers(1, max_m + 1))
        n = int(rng.integers(1, max_n + 1))
        lam = LAMBDA_SWEEP[seed % len(LAMBDA_SWEEP)]
        # roughly a third of the corpus carries forced zero rows
        zero_rows = int(rng.integers(1, m + 1)) if rng.random() < 0.35 else 0
        yield generate(seed, m, n, lam, zero_rows)
