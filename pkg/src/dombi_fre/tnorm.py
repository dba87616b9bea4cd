"""Dombi t-norm, max-Dombi row composition and the residual operator.

All routines work on plain floats.  The Dombi t-norm with shape ``lam > 0`` is

    phi(x, y) = 1 / (1 + (d(x)**lam + d(y)**lam) ** (1/lam)),   d(t) = (1 - t) / t

with ``phi = 0`` whenever either argument is 0.  Powers of ``d`` overflow quickly
for large ``lam``, so both ``dombi`` and ``residual_v`` factor out the dominant
term and work in the log domain.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

DEFAULT_EPSILON = 1e-9


def check_lambda(lam: float) -> float:
    lam = float(lam)
    if not math.isfinite(lam) or lam <= 0.0:
        raise ValueError(f"lambda must be > 0 and finite, got {lam!r}")
    return lam


def check_unit(v: float, name: str = "value") -> float:
    v = float(v)
    if not 0.0 <= v <= 1.0:  # also rejects NaN
        raise ValueError(f"{name} out of [0,1]: {v!r}")
    return v


def _odds(t: float) -> float:
    # t = 1 gives exactly 0; callers never pass t = 0
    return (1.0 - t) / t


def _inv(s: float) -> float:
    return 1.0 / (1.0 + s)


def dombi(x: float, y: float, lam: float) -> float:
    """Dombi t-norm ``phi(x, y)`` for shape parameter ``lam``.

    Stable for ``lam`` from roughly 1e-3 up to several hundred.
    """
    x = check_unit(x, "x")
    y = check_unit(y, "y")
    lam = check_lambda(lam)
    if x == 0.0 or y == 0.0:
        return 0.0
    dx, dy = _odds(x), _odds(y)
    if dx == 0.0:
        return y
    if dy == 0.0:
        return x
    hi, lo = (dx, dy) if dx >= dy else (dy, dx)
    if math.isinf(hi):  # subnormal argument
        return 0.0
    # (hi^lam + lo^lam)^(1/lam) = hi * (1 + (lo/hi)^lam)^(1/lam)
    log_s = math.log(hi) + math.log1p((lo / hi) ** lam) / lam
    if log_s > 700.0:
        return 0.0 if log_s > 745.0 else math.exp(-log_s)
    return _inv(math.exp(log_s))


def residual_v(b: float, a: float, lam: float, epsilon: float = DEFAULT_EPSILON) -> float:
    """Largest ``t`` in [0, 1] with ``dombi(a, t) == b``.

    Defined for ``a >= b > 0``; ``a`` may undershoot ``b`` by at most ``epsilon``,
    in which case the two are treated as equal and the answer is 1.
    """
    b = check_unit(b, "b")
    a = check_unit(a, "a")
    lam = check_lambda(lam)
    if b == 0.0:
        raise ValueError("residual_v is undefined for b = 0")
    if a < b - epsilon:
        raise ValueError(f"residual_v needs a >= b, got a={a!r} < b={b!r}")
    # same tie rule as column admissibility: a within epsilon of b counts as a == b
    if a - b <= epsilon:
        return 1.0
    if a == 1.0:
        return b
    db = _odds(b)
    # (db^lam - da^lam)^(1/lam) = db * (1 - r^lam)^(1/lam), r = da/db in (0, 1)
    q = (a - b) / (a * (1.0 - b))  # 1 - r, accurate when a ~ b
    log_r = math.log1p(-q) if q < 0.5 else math.log(_odds(a) / db)
    w = -math.expm1(lam * log_r)
    log_s = math.log(db) + math.log(w) / lam
    if log_s > 700.0:
        return 0.0 if log_s > 745.0 else math.exp(-log_s)
    return _inv(math.exp(log_s))


def compose_row(a_row: Sequence[float], x: Sequence[float], lam: float) -> float:
    """Max-Dombi composition ``max_j dombi(a_row[j], x[j])``."""
    if len(a_row) != len(x):
        raise ValueError(f"length mismatch: row has {len(a_row)} entries, x has {len(x)}")
    return max((dombi(a, t, lam) for a, t in zip(a_row, x)), default=0.0)
