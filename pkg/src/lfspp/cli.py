"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 non-positive denominator, 4 instance
too large, 5 theorem violation found, 6 generator condition not met.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .core import (
    InstanceTooLarge, NonPositiveDenominator, ValidationError, parse_instance,
    objective, format_instance,
)
from .generate import CONDITIONS, GenerationFailed, GeneratorConfig, generate
from .packs import classify, enumerate_packs
from .solvers import SOLVERS, solve
from . import theory

EXIT_OK, EXIT_INPUT, EXIT_DENOMINATOR, EXIT_TOO_LARGE, EXIT_VIOLATION, EXIT_GENERATION = \
    0, 2, 3, 4, 5, 6


class _Output:
    def __init__(self, fmt: str, stream=None):
        self.sep = " = " if fmt == "text" else "="
        self.stream = stream or sys.stdout

    def kv(self, key: str, value) -> None:
        print(f"{key}{self.sep}{value}", file=self.stream)

    def line(self, text: str) -> None:
        print(text, file=self.stream)


def _load(path: str):
    if path == "-":
        return parse_instance(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _check_size(inst, max_n: int):
    if inst.n > max_n:
        raise InstanceTooLarge(f"n = {inst.n} exceeds --max-n {max_n}")


def cmd_solve(args, out: _Output) -> int:
    inst = _load(args.path)
    _check_size(inst, args.max_n)
    kwargs = {"collect_all": True} if args.all_optima else {}
    report = solve(inst, args.algo, **kwargs)
    out.kv("value", report.optimal_value)
    out.kv("pack", report.witness)
    out.kv("x", report.witness.bits)
    out.kv("algorithm", report.algorithm)
    out.kv("nodes", report.nodes_explored)
    if args.algo == "dinkelbach":
        out.kv("iterations", report.iterations)
    if report.all_optima is not None:
        out.kv("optima", len(report.all_optima))
        for pack in report.all_optima:
            out.kv("optimum", f"{pack} x={pack.bits}")
    return EXIT_OK


def cmd_classify(args, out: _Output) -> int:
    inst = _load(args.path)
    _check_size(inst, args.max_n)
    for pack in enumerate_packs(inst):
        cls = classify(inst, pack)
        cols = ",".join(str(j + 1) for j in cls.redundant_columns)
        out.line(f"x={pack.bits} value={objective(inst, pack)} class={cls.kind} "
                 f"witnesses={{{cols}}}")
    return EXIT_OK


def _yes(flag: bool) -> str:
    return "YES" if flag else "NO"


def cmd_check(args, out: _Output) -> int:
    if args.theorem == "lemma1-grid":
        sweep = theory.lemma1_grid()
        out.line(f"checked {sweep.checked} tuples, violations: {len(sweep.violations)}")
        for v in sweep.violations[:10]:
            out.line("violation (c, d, k, l, beta, n) = " + str(v))
        return EXIT_OK if sweep.ok else EXIT_VIOLATION
    if args.path is None:
        raise ValidationError(f"--theorem {args.theorem} needs an instance path")
    inst = _load(args.path)
    _check_size(inst, args.max_n)
    if args.theorem == "3":
        try:
            report = theory.verify_thm3(inst)
        except (theory.NotUniform, theory.ConditionNotSatisfied) as exc:
            out.line(f"hypothesis: FAILS ({exc})")
            return EXIT_OK
        out.line(f"hypothesis: HOLDS (c = {inst.c[0]}, d = {inst.d[0]})")
        out.line(f"conclusion: {report.detail}: {_yes(report.holds)}")
        if report.degenerate:
            out.line("note: degenerate case")
        return EXIT_OK if report.holds else EXIT_VIOLATION
    which = "thm" + args.theorem
    condition = theory.THM2_CONDITIONS[which](inst)
    if not condition.holds:
        out.line(f"hypothesis: FAILS ({condition.detail})")
        return EXIT_OK
    out.line("hypothesis: HOLDS")
    report = theory.verify_thm2_conclusion(inst, which)
    out.line(f"exists prime optimum: {_yes(report.holds)}")
    out.line(f"all optima prime: {_yes(report.all_optima_prime)}")
    out.line(f"detail: {report.detail}")
    if not report.holds:
        out.line(f"witness: {report.witness}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_gen(args, out: _Output) -> int:
    try:
        config = GeneratorConfig(
            n=args.n, m=args.m, density=args.density, cmin=args.cmin, cmax=args.cmax,
            dmin=args.dmin, dmax=args.dmax, alpha=args.alpha, beta=args.beta,
            condition=args.condition, admissible=args.admissible,
            max_tries=args.max_tries)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    out.stream.write(format_instance(generate(config, args.seed)))
    return EXIT_OK


def cmd_paper_verify(args, out: _Output) -> int:
    fixture = theory.paper_counterexample()
    for row in fixture.rows:
        out.line(row.line())
    out.line(f"optimum: value={fixture.optimal_value} pack={fixture.optimal_pack}")
    for label, ok in fixture.checks:
        out.line(f"{'PASS' if ok else 'FAIL'} {label}")
    out.line("no prime pack attains the optimum: "
             + ("CONFIRMED" if fixture.refuted else "NOT CONFIRMED"))
    out.line("PASS" if fixture.passed else "FAIL")
    return EXIT_OK if fixture.passed else EXIT_VIOLATION


def cmd_fuzz(args, out: _Output) -> int:
    try:
        config = theory.FuzzConfig(
            samples=args.samples, seed=args.seed,
            properties=tuple(args.property or theory.PROPERTIES),
            n=(args.n_min, args.n_max), m=(args.m_min, args.m_max),
            density=args.density, cmin=args.cmin, cmax=args.cmax,
            dmin=args.dmin, dmax=args.dmax, alpha=args.alpha,
            beta=(args.beta_min, args.beta_max), condition=args.condition,
            minimize=not args.no_minimize)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    report = theory.fuzz_properties(config)
    out.line(report.summary())
    log = report.to_log()
    if args.log:
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write(log)
    else:
        out.stream.write(log)
    return EXIT_VIOLATION if report.unexpected else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lfspp", description="Exact linear fractional set packing solver and checks.")
    parser.add_argument("--format", choices=("text", "lines"), default="text",
                        help="'text' prints 'key = value', 'lines' prints 'key=value'")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance exactly")
    p.add_argument("path", help="instance file, or - for standard input")
    p.add_argument("--algo", choices=sorted(SOLVERS), default="oracle")
    p.add_argument("--all-optima", action="store_true", help="list every optimum (oracle only)")
    p.add_argument("--max-n", type=int, default=30)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="list every pack with its value and class")
    p.add_argument("path")
    p.add_argument("--max-n", type=int, default=30)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", help="check a theorem's hypothesis and conclusion")
    p.add_argument("path", nargs="?")
    p.add_argument("--theorem", choices=("2a", "2b", "3", "lemma1-grid"), required=True)
    p.add_argument("--max-n", type=int, default=30)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="print a seeded random instance")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--density", type=float, default=0.4)
    p.add_argument("--cmin", type=int, default=0)
    p.add_argument("--cmax", type=int, default=10)
    p.add_argument("--dmin", type=int, default=1)
    p.add_argument("--dmax", type=int, default=10)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--beta", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--condition", choices=CONDITIONS, default="none")
    p.add_argument("--admissible", action="store_true",
                   help="also require d.x + beta > 0 for every pack")
    p.add_argument("--max-tries", type=int, default=1000)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("paper-verify", help="rebuild and check the 2x3 counterexample")
    p.set_defaults(func=cmd_paper_verify)

    p = sub.add_parser("fuzz", help="random search for property violations")
    p.add_argument("--property", action="append", choices=sorted(theory.PROPERTIES))
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--density", type=float, default=0.4)
    p.add_argument("--cmin", type=int, default=-20)
    p.add_argument("--cmax", type=int, default=20)
    p.add_argument("--dmin", type=int, default=-20)
    p.add_argument("--dmax", type=int, default=20)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--beta-min", type=int, default=1)
    p.add_argument("--beta-max", type=int, default=20)
    p.add_argument("--condition", choices=("none", "2a", "2b", "uniform"), default="none")
    p.add_argument("--no-minimize", action="store_true")
    p.add_argument("--log", help="write violation lines here instead of standard output")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "all_optima", False) and args.algo != "oracle":
        print("error: --all-optima requires --algo oracle", file=sys.stderr)
        return EXIT_INPUT
    out = _Output(args.format)
    try:
        return args.func(args, out)
    except NonPositiveDenominator as exc:
        print(f"error: {exc}", file=sys.stderr)
        out.kv("inadmissible pack", exc.pack)
        return EXIT_DENOMINATOR
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
