import json
import math
from pathlib import Path

import numpy as np
import pytest

from dombi_fre.report import parse_instance

INSTANCES = Path(__file__).resolve().parents[1] / "instances"

# Example 1 fixture values, 4-decimal roundings as printed
EX1_XMAX = [0.7266, 0.6312, 0.7336, 1, 1, 0.7675]
EX1_MINIMALS = [
    [0.7266, 0, 0, 0, 1, 0],
    [0, 0, 0.7336, 0, 1, 0],
    [0, 0, 0, 0, 1, 0.7675],
]
# 1-based assignment vectors and the candidate each one produces
EX1_CANDIDATES = {
    (1, 5, 2, 4): [0.7266, 0.6312, 0, 1, 1, 0],
    (3, 5, 2, 4): [0, 0.6312, 0.7336, 1, 1, 0],
    (6, 5, 2, 4): [0, 0.6312, 0, 1, 1, 0.7675],
    (1, 5, 5, 4): [0.7266, 0, 0, 1, 1, 0],
    (3, 5, 5, 4): [0, 0, 0.7336, 1, 1, 0],
    (6, 5, 5, 4): [0, 0, 0, 1, 1, 0.7675],
    (1, 5, 2, 5): [0.7266, 0.6312, 0, 0, 1, 0],
    (3, 5, 2, 5): [0, 0.6312, 0.7336, 0, 1, 0],
    (6, 5, 2, 5): [0, 0.6312, 0, 0, 1, 0.7675],
    (1, 5, 5, 5): [0.7266, 0, 0, 0, 1, 0],
    (3, 5, 5, 5): [0, 0, 0.7336, 0, 1, 0],
    (6, 5, 5, 5): [0, 0, 0, 0, 1, 0.7675],
}
# nonzero entries of the simplified matrix, 1-based
EX1_ABAR_KEPT = {(1, 1), (1, 3), (1, 6), (2, 5), (3, 2), (3, 5), (4, 4), (4, 5)}


def naive_dombi(x, y, lam):
    """Textbook formula, no rescaling; only safe for moderate lam."""
    if x == 0 or y == 0:
        return 0.0
    dx, dy = (1 - x) / x, (1 - y) / y
    return 1.0 / (1.0 + (dx**lam + dy**lam) ** (1.0 / lam))


def naive_residual(b, a, lam):
    db, da = (1 - b) / b, (1 - a) / a
    return 1.0 / (1.0 + (db**lam - da**lam) ** (1.0 / lam))


def bisect_residual(b, a, lam, iters=200):
    """Largest t with dombi(a, t) <= b, by bisection on the naive formula."""
    lo, hi = 0.0, 1.0
    if naive_dombi(a, 1.0, lam) <= b:
        return 1.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if naive_dombi(a, mid, lam) <= b:
            lo = mid
        else:
            hi = mid
    return lo


@pytest.fixture(scope="session")
def example1():
    return parse_instance((INSTANCES / "example1.json").read_text())


@pytest.fixture(scope="session")
def example1_path():
    return INSTANCES / "example1.json"


@pytest.fixture(scope="session")
def infeasible_path():
    return INSTANCES / "infeasible.json"
