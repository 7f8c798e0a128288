"""Command line front end.

Exit codes for ``verify`` (and ``generate --verify``): 0 the strategy proves
f and not d, 2 it does not, 1 input or validation error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Sequence

from .combinatorics import decimal, format_ratio
from .model import SchemaError, Strategy, StrategyError, validate
from .sensitivity import sensitivity_result
from .strategies import (
    GeneratorError,
    LinCombConfig,
    gen_divisibility,
    gen_indiscreet_piles,
    gen_linear_combination,
    gen_shapovalov,
    gen_three_family,
    gen_three_family_augmented,
    search_lincomb,
    solve_solution_vectors,
)
from .verifier import (
    AdmissibleReport,
    InconsistentStrategyError,
    OracleRangeError,
    best_order,
    oracle_admissible_count,
    oracle_cap_from_env,
    subset_table,
    verify,
)

EXIT_PROVEN, EXIT_ERROR, EXIT_NOT_PROVEN = 0, 1, 2

FAMILIES = ("shapovalov", "divisibility", "indiscreet", "three-family", "three-family-augmented", "lincomb")


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _int_range(text: str) -> list[int]:
    """Accepts ``6``, ``2-9`` or ``2,3,5`` (and mixtures like ``2-4,8``)."""
    out: list[int] = []
    try:
        for part in text.split(","):
            lo, sep, hi = part.partition("-")
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 2-9, got {text!r}") from None
    return out


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load(path: str) -> Strategy:
    if path == "-":
        strategy = Strategy.from_json(sys.stdin.read())
    else:
        try:
            strategy = Strategy.load(path)
        except OSError as exc:
            raise SchemaError("", f"cannot read {path}: {exc.strerror}") from None
    return strategy


def _render_report(report: AdmissibleReport, strategy: Strategy, classes: int) -> str:
    prior = report.prior_f
    lines = [
        f"strategy: t={report.t} f={report.f} d={report.d}, {strategy.m} weighings, {classes} observational classes",
        "syndrome: " + (" ".join(f"{s:+d}" if s else "0" for s in report.syndrome) or "(none)"),
        f"|W(s|Z_f)| = {report.count_f}",
        f"|W(s|Z_d)| = {report.count_d}",
        f"success: {'yes' if report.success else 'no'}",
        f"discreet: {'yes' if report.discreet else 'no'}",
        f"X = {prior}/{report.count_f} ≈ {decimal(report.X)}",
        f"R = {format_ratio(report.R)} ≈ {decimal(report.R)}",
    ]
    for k, (g, vals) in enumerate(zip(report.class_sizes, report.per_class)):
        lines.append(f"  class {k}: size {g}, admissible fake counts {list(vals)}")
    return "\n".join(lines)


def _verify_and_print(strategy: Strategy, args, out=None) -> int:
    out = out or sys.stdout
    report_v = validate(strategy)
    if not report_v.ok:
        for issue in report_v.errors:
            print(f"error: {issue}", file=sys.stderr)
        return EXIT_ERROR
    try:
        report = verify(strategy)
    except InconsistentStrategyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    oracle: dict | None = None
    if getattr(args, "oracle", False):
        cap = args.oracle_cap or oracle_cap_from_env()
        try:
            of = oracle_admissible_count(strategy, strategy.f, report.syndrome, cap)
            od = oracle_admissible_count(strategy, strategy.d, report.syndrome, cap)
            oracle = {"checked": True, "count_f": str(of), "count_d": str(od),
                      "agree": (of, od) == (report.count_f, report.count_d)}
        except OracleRangeError as exc:
            oracle = {"checked": False, "reason": str(exc)}

    if args.json:
        payload = report.to_dict()
        if oracle is not None:
            payload["oracle"] = oracle
        print(json.dumps(payload, indent=2), file=out)
    else:
        for w in report_v.warnings:
            print(f"note: {w}", file=out)
        print(_render_report(report, strategy, len(report.class_sizes)), file=out)
        if oracle is not None:
            if oracle["checked"]:
                verdict = "agree" if oracle["agree"] else "DISAGREE"
                print(f"oracle: {verdict} (coin-level {oracle['count_f']} / {oracle['count_d']})", file=out)
            else:
                print(f"oracle: skipped ({oracle['reason']})", file=out)
    if oracle is not None and oracle["checked"] and not oracle["agree"]:
        print("error: class-level and coin-level counts disagree", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_PROVEN if report.success else EXIT_NOT_PROVEN


def cmd_verify(args) -> int:
    return _verify_and_print(_load(args.strategy), args)


def cmd_table(args) -> int:
    strategy = _load(args.strategy)
    rows = subset_table(strategy)
    order = best_order(strategy) if args.best_order else None
    if args.json:
        payload = [r.to_dict() for r in rows]
        if order is not None:
            payload = {"rows": payload, "best_order": order}
        _emit_json(payload)
        return 0
    width = max(len(r.label()) for r in rows)
    print(f"{'weighings':<{width}}  {'|W(s|Z_f)|':>12}  {'|W(s|Z_d)|':>12}")
    for r in rows:
        print(f"{r.label():<{width}}  {r.count_f:>12}  {r.count_d:>12}")
    if order is not None:
        print("best order: " + ", ".join(f"h{j + 1}" for j in order))
    return 0


def _generate(args) -> Strategy:
    fam = args.family
    need = {
        "divisibility": ("t", "f", "d", "a"),
        "indiscreet": ("t", "f", "d", "a"),
        "three-family": ("t", "f", "d"),
        "three-family-augmented": ("t", "f", "d"),
        "lincomb": ("t", "f", "d", "c", "g"),
    }.get(fam, ())
    missing = [f"--{n}" for n in need if getattr(args, n) is None]
    if missing:
        raise GeneratorError(f"{fam} needs {', '.join(missing)}")
    if fam == "shapovalov":
        return gen_shapovalov(*(v for v in (args.t, args.f, args.d) if v is not None))
    if fam == "divisibility":
        return gen_divisibility(args.t, args.f, args.d, args.a)
    if fam == "indiscreet":
        return gen_indiscreet_piles(args.t, args.f, args.d, args.a)
    if fam == "three-family":
        return gen_three_family(args.t, args.f, args.d, args.placement_family)
    if fam == "three-family-augmented":
        return gen_three_family_augmented(args.t, args.f, args.d, args.placement_family)
    return gen_linear_combination(args.t, args.f, args.d, LinCombConfig(args.c, args.g), args.placement)


def cmd_generate(args) -> int:
    strategy = _generate(args)
    text = strategy.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.verify:
        # strategy JSON may be on stdout; keep the report off it
        out = sys.stdout if args.output else sys.stderr
        return _verify_and_print(strategy, args, out=out)
    return 0


def cmd_search(args) -> int:
    result = search_lincomb(
        args.t, args.f, args.d,
        max_groups=args.max_groups,
        c_max=args.c_max,
        g_max=args.g_max,
        max_configs=args.max_configs,
    )
    top = result.entries[: args.top] if args.top else result.entries
    if args.json:
        _emit_json({
            "partial": result.partial,
            "examined": result.examined,
            "found": len(result.entries),
            "results": [
                {"c": list(e.config.c), "g": list(e.config.g), "count": str(e.count),
                 "X": format_ratio(Fraction(_prior(args), e.count))}
                for e in top
            ],
        })
    else:
        if result.partial:
            print(f"warning: search stopped after {result.examined} configurations (partial results)")
        print(f"{len(result.entries)} feasible configurations of {result.examined} examined")
        for rank, e in enumerate(top, 1):
            x = Fraction(_prior(args), e.count)
            print(f"{rank:>3}. c={list(e.config.c)} g={list(e.config.g)}  count={e.count}  X≈{decimal(x)}")
    if args.materialize and result.best is not None:
        best = result.best.config
        gen_linear_combination(args.t, args.f, args.d, best).dump(args.materialize)
    return 0


def _prior(args) -> int:
    return math.comb(args.t, args.f)


def cmd_sensitivity(args) -> int:
    rows = [sensitivity_result(n, m) for n in args.n for m in args.m]
    if args.json:
        _emit_json([r.to_dict() for r in rows])
        return 0
    print(f"{'n':>4} {'m':>3} {'exact':>24} {'decimal':>14} {'trig':>14} {'2n/m':>10} {'alpha/sqrt(n)':>14}")
    for r in rows:
        print(
            f"{r.n:>4} {r.m:>3} {format_ratio(r.exact) if r.exact.denominator != 1 else str(r.exact.numerator):>24} "
            f"{float(r.exact):>14.6g} {r.trig:>14.6g} {float(r.asymptote):>10.6g} {r.bound_order:>14.6g}"
        )
    return 0


def cmd_solve(args) -> int:
    sols = solve_solution_vectors(args.c, args.g, args.target)
    if args.json:
        _emit_json([list(x) for x in sols])
    else:
        for x in sols:
            print(" ".join(map(str, x)))
        if not sols:
            print("no solution vectors")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinproof",
        description="Verify, generate and search balance-scale proofs that there are f fake coins and not d.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def json_flag(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("verify", help="verify a strategy file")
    p.add_argument("strategy", help="strategy JSON file, or - for stdin")
    p.add_argument("--oracle", action="store_true", help="cross-check with coin-level brute force")
    p.add_argument("--oracle-cap", type=int, default=None, help="max subsets for --oracle")
    json_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="admissible counts for every subset of weighings")
    p.add_argument("strategy")
    p.add_argument("--best-order", action="store_true", help="append the greedy weighing order")
    json_flag(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("generate", help="emit a strategy of a known family")
    p.add_argument("family", choices=FAMILIES)
    for name in ("t", "f", "d", "a"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--family", dest="placement_family", default="A", choices=["A", "B", "C"],
                   help="three-family: which family holds the fakes")
    p.add_argument("--c", type=_int_list, help="lincomb group multiplicities, e.g. 2,2,3")
    p.add_argument("--g", type=_int_list, help="lincomb pile sizes, e.g. 10,10,10")
    p.add_argument("--placement", type=_int_list, help="lincomb fakes per pile in each group")
    p.add_argument("-o", "--output", help="write strategy here instead of stdout")
    p.add_argument("--verify", action="store_true", help="verify the generated strategy")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--oracle-cap", type=int, default=None)
    json_flag(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("search", help="brute-force linear-combination configurations")
    for name in ("t", "f", "d"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--max-groups", type=int, default=3)
    p.add_argument("--c-max", type=int, default=None)
    p.add_argument("--g-max", type=int, default=None)
    p.add_argument("--max-configs", type=int, default=2_000_000)
    p.add_argument("--top", type=int, default=10, help="rows to show (0 = all)")
    p.add_argument("--materialize", help="write the best configuration as a strategy file")
    json_flag(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sensitivity", help="average sensitivity of MOD*_m")
    p.add_argument("--n", type=_int_range, required=True, help="e.g. 6 or 1-20")
    p.add_argument("--m", type=_int_range, required=True, help="e.g. 3 or 2-9")
    json_flag(p)
    p.set_defaults(func=cmd_sensitivity)

    p = sub.add_parser("solve", help="list solution vectors of sum c_i x_i = target")
    p.add_argument("--c", type=_int_list, required=True)
    p.add_argument("--g", type=_int_list, required=True)
    p.add_argument("--target", type=int, required=True)
    json_flag(p)
    p.set_defaults(func=cmd_solve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, StrategyError, GeneratorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())
