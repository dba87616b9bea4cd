"""Resolution of max-Dombi fuzzy relational equations ``A phi x = b``.

Pipeline used by :func:`resolve`:

1. maximum solution ``x_max`` (row-wise residuals, componentwise minimum);
2. feasibility test: the system is solvable iff ``x_max`` solves it;
3. simplification of ``A`` (entries that can never realise a row's equality
   are zeroed) which shrinks the admissible column sets;
4. one candidate per assignment of an admissible column to every row with
   ``b_i > 0``;
5. pairwise dominance filtering down to the minimal solutions.

The feasible set is the union of boxes ``[minimal, x_max]``.  Column indices
are 0-based throughout the library.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .tnorm import DEFAULT_EPSILON, check_lambda, compose_row, residual_v

DEFAULT_MAX_CANDIDATES = 10**6

# marks rows with b_i = 0 in an assignment vector; their choice is irrelevant
NO_CHOICE = -1


class CandidateCapExceeded(RuntimeError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} assignment vectors exceed the candidate cap of {cap}")
        self.count = count
        self.cap = cap


class InfeasibleError(ValueError):
    pass


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class Instance:
    """Problem data: fuzzy matrix ``A`` (m x n), right-hand side ``b`` (m),
    Dombi shape ``lam`` and the comparison tolerance ``epsilon``."""

    A: np.ndarray
    b: np.ndarray
    lam: float
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        A = _frozen(self.A)
        b = _frozen(self.b)
        if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
            raise ValueError(f"A must be a non-empty m x n matrix, got shape {A.shape}")
        if b.shape != (A.shape[0],):
            raise ValueError(f"b must have length {A.shape[0]}, got shape {b.shape}")
        for name, arr in (("A", A), ("b", b)):
            bad = np.argwhere(~((arr >= 0.0) & (arr <= 1.0)))
            if len(bad):
                idx = tuple(int(k) for k in bad[0])
                raise ValueError(f"{name}{list(idx)} = {arr[idx]!r}: entry out of [0,1]")
        eps = float(self.epsilon)
        if not (math.isfinite(eps) and eps > 0.0):
            raise ValueError(f"epsilon must be a positive finite number, got {self.epsilon!r}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "lam", check_lambda(self.lam))
        object.__setattr__(self, "epsilon", eps)

    @property
    def m(self) -> int:
        return self.A.shape[0]

    @property
    def n(self) -> int:
        return self.A.shape[1]

    def zero_rows(self) -> np.ndarray:
        return self.b <= self.epsilon

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.lam == other.lam
            and self.epsilon == other.epsilon
            and np.array_equal(self.A, other.A)
            and np.array_equal(self.b, other.b)
        )

    __hash__ = None


@dataclass(frozen=True)
class IndexSets:
    """Admissible columns per row; ``simplified`` tells whether they were read
    off the simplified matrix."""

    sets: tuple[tuple[int, ...], ...]
    simplified: bool = False

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.sets[i]

    def __len__(self) -> int:
        return len(self.sets)

    def sizes(self) -> list[int]:
        return [len(s) for s in self.sets]


@dataclass(frozen=True, eq=False)
class Candidate:
    x: np.ndarray
    origin: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SolutionSet:
    feasible: bool
    x_max: np.ndarray
    minimals: tuple[np.ndarray, ...] = ()
    simplified: np.ndarray | None = None
    index_sets: IndexSets | None = None
    candidate_count: int = 0
    candidates: tuple[Candidate, ...] = ()
    discarded: tuple[np.ndarray, ...] = ()

    @property
    def boxes(self) -> list[tuple[np.ndarray, np.ndarray]]:
        return [(lo, self.x_max) for lo in self.minimals]

    def contains(self, x, epsilon: float = DEFAULT_EPSILON) -> bool:
        x = np.asarray(x, dtype=float)
        return any(
            bool(np.all(lo - epsilon <= x) and np.all(x <= hi + epsilon)) for lo, hi in self.boxes
        )


def admissible_sets(inst: Instance, M=None, simplified: bool = False) -> IndexSets:
    """Columns ``j`` with ``M[i, j] >= b_i`` (up to epsilon), row by row.

    ``M`` defaults to ``inst.A``; pass the simplified matrix for the reduced sets.
    """
    M = inst.A if M is None else np.asarray(M, dtype=float)
    if M.shape != inst.A.shape:
        raise ValueError(f"matrix shape {M.shape} does not match A {inst.A.shape}")
    sets = tuple(
        tuple(int(j) for j in np.flatnonzero(M[i] >= inst.b[i] - inst.epsilon))
        for i in range(inst.m)
    )
    return IndexSets(sets, simplified)


def residual_matrix(inst: Instance, J: IndexSets | None = None) -> np.ndarray:
    """``V(b_i, a_ij)`` for admissible ``(i, j)`` with ``b_i > 0``; NaN elsewhere."""
    J = admissible_sets(inst) if J is None else J
    V = np.full(inst.A.shape, np.nan)
    zero = inst.zero_rows()
    for i in range(inst.m):
        if zero[i]:
            continue
        for j in J[i]:
            V[i, j] = residual_v(inst.b[i], inst.A[i, j], inst.lam, inst.epsilon)
    return V


def max_solution(inst: Instance) -> np.ndarray:
    """Greatest candidate solution: minimum over rows of the per-row upper bounds."""
    J = admissible_sets(inst)
    V = residual_matrix(inst, J)
    eps = inst.epsilon
    x = np.ones(inst.n)
    for i in range(inst.m):
        row = np.ones(inst.n)
        if inst.b[i] <= eps:
            # any positive coefficient forces x_j = 0; a_ij = b_i = 0 leaves x_j free
            row[inst.A[i] > eps] = 0.0
        else:
            cols = list(J[i])
            row[cols] = V[i, cols]
        x = np.minimum(x, row)
    x.setflags(write=False)
    return x


def row_residuals(inst: Instance, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (inst.n,):
        raise ValueError(f"point must have length {inst.n}, got shape {x.shape}")
    return np.array([abs(compose_row(inst.A[i], x, inst.lam) - inst.b[i]) for i in range(inst.m)])


def check_feasible(inst: Instance, x) -> bool:
    """True when every row composition matches ``b_i`` within epsilon."""
    return bool(np.all(row_residuals(inst, x) <= inst.epsilon))


def simplify(inst: Instance) -> np.ndarray:
    """Zero every entry of ``A`` that cannot realise its row's equality in any
    minimal solution.  The returned matrix has the same solution set as ``A``.

    An entry ``a_ij`` with ``j`` admissible for a nonzero row ``i`` is dropped when
    another nonzero row ``i'`` admits ``j`` with a strictly smaller residual
    (ties keep both), or when some row with ``b_i' = 0`` has ``a_i'j > 0``.
    """
    eps = inst.epsilon
    J = admissible_sets(inst)
    V = residual_matrix(inst, J)
    zero = inst.zero_rows()
    admissible = np.zeros(inst.A.shape, dtype=bool)
    for i, cols in enumerate(J.sets):
        admissible[i, list(cols)] = True

    out = np.where(admissible, inst.A, 0.0)
    # columns that some b_i' = 0 row pins to 0
    pinned = np.any(zero[:, None] & (inst.A > eps), axis=0)
    for i in range(inst.m):
        if zero[i]:
            continue
        for j in J[i]:
            if pinned[j]:
                out[i, j] = 0.0
                continue
            others = [k for k in range(inst.m) if k != i and not zero[k] and admissible[k, j]]
            if any(V[k, j] < V[i, j] - eps for k in others):
                out[i, j] = 0.0
    out.setflags(write=False)
    return out


def count_assignments(inst: Instance, J: IndexSets) -> int:
    zero = inst.zero_rows()
    return math.prod(len(J[i]) for i in range(inst.m) if not zero[i])


def _dedupe(xs: np.ndarray, eps: float) -> np.ndarray:
    """Drop near-duplicates (max-abs distance <= eps), return rows sorted lexicographically."""
    if len(xs) == 0:
        return xs
    order = np.lexsort(xs.T[::-1])
    kept: list[np.ndarray] = []
    for x in xs[order]:
        if kept and np.any(np.max(np.abs(np.asarray(kept) - x), axis=1) <= eps):
            continue
        kept.append(x)
    return np.asarray(kept)


def enumerate_candidates(
    inst: Instance,
    simplified=None,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> list[Candidate]:
    """One candidate per assignment vector over the simplified admissible sets.

    Rows with ``b_i = 0`` contribute nothing and carry :data:`NO_CHOICE`.
    Candidates are clipped to the maximum solution.
    Near-identical vectors are merged; the first assignment (in product
    order) is kept as the origin.  Output is sorted lexicographically.
    """
    Abar = simplify(inst) if simplified is None else simplified
    J = admissible_sets(inst, Abar, simplified=True)
    zero = inst.zero_rows()
    active = [i for i in range(inst.m) if not zero[i]]
    empty = [i for i in active if not J[i]]
    if empty:
        raise InfeasibleError(f"rows {empty} have no admissible column")
    count = count_assignments(inst, J)
    if count > max_candidates:
        raise CandidateCapExceeded(count, max_candidates)

    V = residual_matrix(inst, J)
    xs = np.zeros((count, inst.n))
    origins = []
    for k, choice in enumerate(itertools.product(*(J[i] for i in active))):
        e = [NO_CHOICE] * inst.m
        for i, j in zip(active, choice):
            e[i] = j
            xs[k, j] = max(xs[k, j], V[i, j])
        origins.append(tuple(e))
    # residuals tied within epsilon can leave a candidate a few ulps above x_max
    np.minimum(xs, max_solution(inst), out=xs)

    by_key = {}
    for x, e in zip(xs, origins):
        by_key.setdefault(x.tobytes(), e)
    unique = _dedupe(xs, inst.epsilon)
    out = []
    for x in unique:
        e = by_key.get(x.tobytes())
        if e is None:  # representative of a near-duplicate group
            k = int(np.argmin(np.max(np.abs(xs - x), axis=1)))
            e = origins[k]
        x = x.copy()
        x.setflags(write=False)
        out.append(Candidate(x, e))
    return out


def minimal_solutions(candidates, epsilon: float = DEFAULT_EPSILON) -> list[np.ndarray]:
    """Candidates not dominated by any other candidate, in lexicographic order.

    ``y`` dominates ``x`` when ``y <= x + eps`` everywhere and ``y < x - eps``
    somewhere.  Accepts :class:`Candidate` objects or plain vectors.
    """
    xs = [np.asarray(getattr(c, "x", c), dtype=float) for c in candidates]
    if not xs:
        return []
    C = np.asarray(xs)
    keep = []
    for x in C:
        dominated = np.all(C <= x + epsilon, axis=1) & np.any(C < x - epsilon, axis=1)
        if not dominated.any():
            keep.append(x)
    K = np.asarray(keep)
    return [row.copy() for row in K[np.lexsort(K.T[::-1])]]


def resolve(inst: Instance, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> SolutionSet:
    """Full resolution of the system: maximum solution, simplified matrix,
    candidates and the minimal solutions spanning the feasible set."""
    x_max = max_solution(inst)
    if not check_feasible(inst, x_max):
        return SolutionSet(feasible=False, x_max=x_max)

    Abar = simplify(inst)
    J = admissible_sets(inst, Abar, simplified=True)
    candidates = enumerate_candidates(inst, Abar, max_candidates)
    minimals, discarded = [], []
    for x in minimal_solutions(candidates, inst.epsilon):
        x.setflags(write=False)
        (minimals if check_feasible(inst, x) else discarded).append(x)
    return SolutionSet(
        feasible=True,
        x_max=x_max,
        minimals=tuple(minimals),
        simplified=Abar,
        index_sets=J,
        candidate_count=count_assignments(inst, J),
        candidates=tuple(candidates),
        discarded=tuple(discarded),
    )
