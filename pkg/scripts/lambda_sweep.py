"""How the worked example's structure changes with the Dombi parameter (b held fixed)."""

from pathlib import Path

from dombi_fre.optimizer import optimize
from dombi_fre.report import parse_instance
from dombi_fre.resolver import resolve

text = (Path(__file__).parents[1] / "instances" / "example1.json").read_text()

print(f"{'lambda':>8} {'feasible':>9} {'|E-bar|':>8} {'#minimal':>9} {'optimum':>9}  x_max")
for lam in [0.25, 0.5, 1, 2, 5, 20, 200]:
    inst = parse_instance(text, lam=lam)
    sol = resolve(inst)
    if not sol.feasible:
        print(f"{lam:>8g} {'no':>9}")
        continue
    res = optimize(inst, sol)
    xmax = " ".join(f"{v:.4f}" for v in sol.x_max)
    print(f"{lam:>8g} {'yes':>9} {sol.candidate_count:>8} {len(sol.minimals):>9} {res.optimal_value:>9.4f}  {xmax}")
