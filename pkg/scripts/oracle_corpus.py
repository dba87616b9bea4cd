"""Solver vs. brute force on a seeded corpus, broken down by lambda and size."""

import argparse
import time
from collections import defaultdict

from dombi_fre.verify import VerifyConfig, verify_corpus

parser = argparse.ArgumentParser()
parser.add_argument("--runs", type=int, default=1000)
parser.add_argument("--max-m", type=int, default=4)
parser.add_argument("--max-n", type=int, default=4)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

t0 = time.perf_counter()
summary = verify_corpus(VerifyConfig(args.runs, args.max_m, args.max_n, args.seed))
elapsed = time.perf_counter() - t0

by_lam = defaultdict(list)
for r in summary.records:
    by_lam[r.lam].append(r)
print(f"{'lambda':>8} {'runs':>6} {'ok':>6} {'zero-b':>7} {'mean #minimal':>14}")
for lam in sorted(by_lam):
    recs = by_lam[lam]
    print(
        f"{lam:>8g} {len(recs):>6} {sum(r.ok for r in recs):>6} "
        f"{sum(1 for r in recs if r.zero_rows):>7} {sum(r.minimals for r in recs) / len(recs):>14.2f}"
    )
print(summary.text(), end="")
print(f"{elapsed:.1f}s")
