"""Command-line front end.

Exit status: 0 success, 1 input or verification failure, 2 size-guard refusal.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time

from . import oracle
from .cover import Cover, build_chart, extract_essentials, minimize, solve_reduced
from .cube import ProblemSpec
from .errors import DomainError, GuardRefusal, ParseError
from .formats import (
    VariableNaming,
    emit_expression,
    emit_json,
    emit_pla,
    format_trace,
    parse_minterm_spec,
    parse_pla,
)
from .primes import generate_primes

DEFAULT_MAX_VARS = 24


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="quinemc", description="Exact two-level minimization of single-output Boolean functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def add_input(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--spec", help='inline spec, e.g. "vars=3; minterms=1,2,3; dontcares=2"')
        src.add_argument("--spec-file", help="file containing a minterm spec")
        src.add_argument("--pla", help="single-output PLA file")
        p.add_argument("--allow-empty-onset", action="store_true", help="accept specs whose onset is empty")
        p.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS, help="refuse problems with more variables (default %(default)s)")
        p.add_argument("--naming", choices=("letters", "indexed"), default="letters")

    p = sub.add_parser("minimize", help="print a minimum sum-of-products cover")
    add_input(p)
    p.add_argument("--format", choices=("expr", "pla", "json"), default="expr")
    p.add_argument("--show-trace", action="store_true", help="print reduction columns and PI charts")

    p = sub.add_parser("primes", help="print all prime implicants")
    add_input(p)
    p.add_argument("--format", choices=("expr", "pla", "json"), default="expr")

    p = sub.add_parser("verify", help="minimize, then check the cover against brute force")
    add_input(p)

    p = sub.add_parser("bench", help="time random problems, CSV on stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vars", type=int, nargs="+", default=[6, 8, 10])
    p.add_argument("--density", type=float, default=0.25, help="onset density")
    p.add_argument("--dc-density", type=float, default=0.0, help="don't-care density")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)
    return parser


def _load_problem(args) -> ProblemSpec:
    if args.pla is not None:
        problem = parse_pla(_read(args.pla))
    else:
        text = args.spec if args.spec is not None else _read(args.spec_file)
        problem = parse_minterm_spec(text.strip(), allow_empty_onset=args.allow_empty_onset)
    if problem.n > args.max_vars:
        raise GuardRefusal(f"{problem.n} variables exceeds --max-vars {args.max_vars}")
    return problem


def _read(path: str) -> str:
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise DomainError(f"cannot read {path}: {e.strerror}") from e


def _cmd_minimize(args, out) -> int:
    problem = _load_problem(args)
    report = minimize(problem)
    naming = VariableNaming(args.naming)
    if args.show_trace and report.columns:
        trace_to = out if args.format == "expr" else sys.stderr
        trace_to.write(format_trace(report))
    if args.format == "json":
        out.write(emit_json(report))
    elif args.format == "pla":
        out.write(emit_pla(report.cover))
    else:
        out.write(emit_expression(report.cover, naming) + "\n")
    return 0


def _cmd_primes(args, out) -> int:
    problem = _load_problem(args)
    primes = generate_primes(problem) if problem.care_set else []
    if args.format == "json":
        out.write(json.dumps({"primes": [str(p) for p in primes]}, indent=2) + "\n")
    elif args.format == "pla":
        out.write(emit_pla(Cover(problem.n, tuple(primes))))
    else:
        naming = VariableNaming(args.naming)
        for p in primes:
            out.write(f"{p}  {emit_expression(Cover(problem.n, (p,)), naming)}\n")
    return 0


def _cmd_verify(args, out) -> int:
    problem = _load_problem(args)
    report = minimize(problem)
    verdict = oracle.check_equivalence(report.cover, problem)
    out.write(f"cover: {emit_expression(report.cover, VariableNaming(args.naming))}\n")
    out.write(f"cover size: {len(report.cover)}\n")
    out.write(f"equivalence: {'ok' if verdict.ok else 'FAIL'}\n")
    for kind, where in verdict.violations:
        out.write(f"  {kind}: {where}\n")
    ok = verdict.ok
    try:
        best = oracle.exhaustive_min_cover_size(problem)
    except GuardRefusal as e:
        out.write(f"oracle minimum: skipped ({e})\n")
    else:
        out.write(f"oracle minimum: {best}\n")
        ok = ok and best == len(report.cover)
    out.write(f"verdict: {'ok' if ok else 'FAIL'}\n")
    return 0 if ok else 1


def _random_problem(rng: random.Random, n: int, density: float, dc_density: float) -> ProblemSpec:
    onset, dc = [], []
    for m in range(1 << n):
        u = rng.random()
        if u < density:
            onset.append(m)
        elif u < density + dc_density:
            dc.append(m)
    return ProblemSpec(n, tuple(onset), tuple(dc))


def _cmd_bench(args, out) -> int:
    if not 0 <= args.density <= 1 or not 0 <= args.dc_density <= 1 - args.density:
        raise DomainError("densities must lie in [0, 1] and sum to at most 1")
    if max(args.vars) > args.max_vars:
        raise GuardRefusal(f"{max(args.vars)} variables exceeds --max-vars {args.max_vars}")
    rng = random.Random(args.seed)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "onset_density", "primes", "cover_size", "micros_primes", "micros_cover"])
    for n in args.vars:
        for _ in range(args.trials):
            problem = _random_problem(rng, n, args.density, args.dc_density)
            t0 = time.perf_counter()
            primes = generate_primes(problem) if problem.care_set else []
            t1 = time.perf_counter()
            if problem.onset:
                essentials, reduced = extract_essentials(build_chart(primes, problem))
                size = len(essentials) + len(solve_reduced(reduced))
            else:
                size = 0
            t2 = time.perf_counter()
            density = len(problem.onset) / (1 << n)
            writer.writerow([n, f"{density:.4f}", len(primes), size, round((t1 - t0) * 1e6), round((t2 - t1) * 1e6)])
    return 0


_COMMANDS = {"minimize": _cmd_minimize, "primes": _cmd_primes, "verify": _cmd_verify, "bench": _cmd_bench}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except GuardRefusal as e:
        print(f"quinemc: refused: {e}", file=sys.stderr)
        return 2
    except (ParseError, DomainError) as e:
        print(f"quinemc: error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
