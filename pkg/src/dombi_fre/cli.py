"""Command line front end.

    dombi-fre solve FILE [--output json|table]
    dombi-fre check FILE --point v1,...,vn
    dombi-fre generate --seed S -m M -n N [--lambda L] [--zero-rows K] [--out PATH]
    dombi-fre verify --runs K --max-m 4 --max-n 4 [--result PATH]

Exit status: 0 success/feasible, 1 infeasible (or failed check/verify),
2 usage or parse error, 3 candidate cap exceeded.  FILE may be ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from .oracle import generate
from .report import InstanceFormatError, dump_instance, parse_instance, solve_report
from .resolver import DEFAULT_MAX_CANDIDATES, CandidateCapExceeded, row_residuals
from .verify import VerifyConfig, verify_corpus

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--epsilon", type=float, default=None, help="comparison tolerance (default: file value or 1e-9)")
    parser.add_argument("--lambda", dest="lam", type=float, default=None, help="override the Dombi parameter from the file")
    parser.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES)
    parser.add_argument("--output", choices=("json", "table"), default="json")
    parser.add_argument("--quiet", action="store_true", help="print nothing, report through the exit status only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dombi-fre", description="Max-Dombi fuzzy relational equation solver")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="resolve the system and minimise max(x)")
    p.add_argument("file")
    _common(p)

    p = sub.add_parser("check", help="row residuals of a given point")
    p.add_argument("file")
    p.add_argument("--point", required=True, help="comma-separated components")
    _common(p)

    p = sub.add_parser("generate", help="write a random feasible instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=2.0)
    p.add_argument("--zero-rows", type=int, default=0)
    p.add_argument("--out", default="-")

    p = sub.add_parser("verify", help="compare the solver with brute force on a random corpus")
    p.add_argument("--runs", type=int, default=1000)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100, help="box samples per instance")
    p.add_argument("--result", default="verify_result.json", help="machine-readable result file")
    p.add_argument("--quiet", action="store_true")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(text: str, quiet: bool) -> None:
    if not quiet:
        sys.stdout.write(text)


def _solve(args) -> int:
    inst = parse_instance(_read(args.file), args.lam, args.epsilon)
    report = solve_report(inst, args.max_candidates)
    _emit(report.to_table() if args.output == "table" else report.to_json(), args.quiet)
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def _check(args) -> int:
    inst = parse_instance(_read(args.file), args.lam, args.epsilon)
    try:
        point = [float(v) for v in args.point.split(",")]
    except ValueError:
        raise InstanceFormatError(f"--point: not a list of numbers: {args.point!r}") from None
    if len(point) != inst.n:
        raise InstanceFormatError(f"--point: expected {inst.n} components, got {len(point)}")
    if not all(0.0 <= v <= 1.0 for v in point):
        raise InstanceFormatError("--point: components must lie in [0,1]")
    residuals = row_residuals(inst, point).tolist()
    tol = 10 * inst.epsilon
    passed = all(r <= tol for r in residuals)
    if args.output == "table":
        text = "".join(f"row {i + 1}: residual {r:.3e}\n" for i, r in enumerate(residuals))
        text += f"{'PASS' if passed else 'FAIL'} (tolerance {tol:g})\n"
    else:
        doc = {"point": point, "residuals": residuals, "tolerance": tol, "pass": passed}
        text = json.dumps(doc, indent=2) + "\n"
    _emit(text, args.quiet)
    return EXIT_OK if passed else EXIT_INFEASIBLE


def _generate(args) -> int:
    g = generate(args.seed, args.m, args.n, args.lam, args.zero_rows)
    text = dump_instance(g)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return EXIT_OK


def _verify(args) -> int:
    config = VerifyConfig(args.runs, args.max_m, args.max_n, args.seed, args.samples)
    summary = verify_corpus(config)
    _emit(summary.text(), args.quiet)
    if args.result:
        with open(args.result, "w") as fh:
            json.dump(summary.to_dict(), fh, indent=2)
            fh.write("\n")
    return EXIT_OK if summary.ok else EXIT_INFEASIBLE


COMMANDS = {"solve": _solve, "check": _check, "generate": _generate, "verify": _verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except CandidateCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InstanceFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
