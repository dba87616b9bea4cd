"""Corpus verification: solver vs. brute force on seeded random instances."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .optimizer import objective, optimize
from .oracle import corpus, full_enumeration
from .resolver import SolutionSet, check_feasible, resolve


@dataclass(frozen=True)
class VerifyConfig:
    runs: int = 1000
    max_m: int = 4
    max_n: int = 4
    base_seed: int = 0
    box_samples: int = 100


@dataclass
class RunRecord:
    seed: int
    m: int
    n: int
    lam: float
    zero_rows: int
    minimals: int
    oracle_match: bool
    witness_in_box: bool
    optimum_ok: bool
    box_points_feasible: bool

    @property
    def ok(self) -> bool:
        return self.oracle_match and self.witness_in_box and self.optimum_ok and self.box_points_feasible


@dataclass
class VerifySummary:
    config: VerifyConfig
    records: list[RunRecord] = field(default_factory=list)

    @property
    def failures(self) -> list[RunRecord]:
        return [r for r in self.records if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "runs": len(self.records),
            "passed": len(self.records) - len(self.failures),
            "failed_seeds": [r.seed for r in self.failures],
            "records": [asdict(r) for r in self.records],
        }

    def text(self) -> str:
        counts = {
            "oracle equivalence": sum(r.oracle_match for r in self.records),
            "witness in a box": sum(r.witness_in_box for r in self.records),
            "optimality on box samples": sum(r.optimum_ok for r in self.records),
            "box soundness": sum(r.box_points_feasible for r in self.records),
        }
        total = len(self.records)
        lines = [f"{'PASS' if c == total else 'FAIL'}  {name}: {c}/{total}" for name, c in counts.items()]
        lines.append(f"{'PASS' if self.ok else 'FAIL'}  overall")
        return "\n".join(lines) + "\n"


def same_vectors(xs, ys, epsilon: float) -> bool:
    """Equal as sets of vectors, matching each element within epsilon (max-abs)."""
    ys = [np.asarray(y, dtype=float) for y in ys]
    if len(xs) != len(ys):
        return False
    used: set[int] = set()
    for x in xs:
        x = np.asarray(x, dtype=float)
        hit = next(
            (k for k, y in enumerate(ys) if k not in used and np.max(np.abs(x - y)) <= epsilon),
            None,
        )
        if hit is None:
            return False
        used.add(hit)
    return True


def sample_boxes(sol: SolutionSet, count: int, rng: np.random.Generator) -> list[np.ndarray]:
    """``count`` uniform points from each box ``[minimal, x_max]``."""
    points = []
    for lo, hi in sol.boxes:
        points.extend(rng.uniform(lo, hi, size=(count, len(lo))))
    return points


def verify_corpus(config: VerifyConfig = VerifyConfig()) -> VerifySummary:
    summary = VerifySummary(config)
    for g in corpus(config.runs, config.max_m, config.max_n, config.base_seed):
        inst = g.inst
        sol = resolve(inst)
        reference = full_enumeration(inst)
        rng = np.random.default_rng([g.seed, 2])
        # spread the sample budget over the boxes so each instance gets `box_samples` points
        per_box = max(1, -(-config.box_samples // max(1, len(sol.minimals))))
        points = sample_boxes(sol, per_box, rng) if sol.feasible else []
        optimum_ok = False
        if sol.feasible and sol.minimals:
            best = optimize(inst, sol).optimal_value
            optimum_ok = all(best <= objective(x) + 1e-9 for x in [*points, g.witness])
        summary.records.append(
            RunRecord(
                seed=g.seed,
                m=inst.m,
                n=inst.n,
                lam=inst.lam,
                zero_rows=int(inst.zero_rows().sum()),
                minimals=len(sol.minimals),
                oracle_match=same_vectors(sol.minimals, reference, inst.epsilon),
                witness_in_box=sol.contains(g.witness, inst.epsilon),
                optimum_ok=optimum_ok,
                box_points_feasible=bool(points) and all(check_feasible(inst, x) for x in points),
            )
        )
    return summary
