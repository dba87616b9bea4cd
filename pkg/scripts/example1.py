"""Walk through the 4x6 worked example (lambda = 2) step by step."""

from pathlib import Path

import numpy as np

from dombi_fre.optimizer import optimize
from dombi_fre.report import parse_instance
from dombi_fre.resolver import admissible_sets, enumerate_candidates, resolve, simplify

np.set_printoptions(precision=4, suppress=True)

inst = parse_instance((Path(__file__).parents[1] / "instances" / "example1.json").read_text())


def one_based(J):
    return [sorted(j + 1 for j in s) for s in J.sets]


print("J_i      ", one_based(admissible_sets(inst)))
sol = resolve(inst)
print("x_max    ", sol.x_max)
print("feasible ", sol.feasible)
Abar = simplify(inst)
print("simplified A\n", Abar)
print("J-bar_i  ", one_based(admissible_sets(inst, Abar)), " |E-bar| =", sol.candidate_count)
for c in enumerate_candidates(inst):
    print("  e =", [j + 1 for j in c.origin], " X(e) =", c.x)
print("minimal solutions")
for x in sol.minimals:
    print("  ", x)
res = optimize(inst, sol)
print("optimal value", res.optimal_value, "attained by", len(res.optimal_points), "points")
