"""Command-line frontend: triangle export, point queries, conversions, and
identity verification.

Exit codes are part of the contract and stable across versions:

    0   all requested checks passed
    1   at least one identity violation was found
    2   usage error (bad arguments, unknown identity or kind)
    3   resource limit (index cap or enumeration budget exceeded)

All numeric output is exact decimal; the machine formats (csv, json)
re-serialize byte for byte.
"""

import argparse
import os
import sys
from dataclasses import dataclass

from .engine import PerturbedCalculator, StirlingCalculator, StirlingKind
from .exact import DEFAULT_INDEX_CAP, ResourceLimitError, dump_json
from .identities import IdentityId, run_all, run_identity
from .oracle import (
    BudgetExceededError,
    DEFAULT_ENUMERATION_BUDGET,
    count_permutations_by_cycles,
    count_set_partitions,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

ENV_INDEX_CAP = "STIRLING_INDEX_CAP"
ENV_ORACLE_BUDGET = "STIRLING_ORACLE_BUDGET"

_KIND_TOKENS = tuple(kind.value for kind in StirlingKind)
_IDENTITY_TOKENS = ("all",) + tuple(identity.value for identity in IdentityId)


class UsageError(ValueError):
    pass


@dataclass
class CliConfig:
    index_cap: int = DEFAULT_INDEX_CAP
    oracle_budget: int = DEFAULT_ENUMERATION_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirling",
        description="Exact Stirling number triangles and a verified identity catalog.",
    )
    parser.add_argument(
        "--index-cap",
        type=int,
        default=None,
        metavar="N",
        help=f"cap on index arguments (env {ENV_INDEX_CAP}, default {DEFAULT_INDEX_CAP})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="print rows 0..N of one triangle")
    tri.add_argument("--kind", required=True, choices=_KIND_TOKENS)
    tri.add_argument("--rows", type=int, required=True, metavar="N")
    tri.add_argument("--format", choices=("table", "csv", "json"), default="table")

    val = sub.add_parser("value", help="print one triangle entry")
    val.add_argument("--kind", required=True, choices=_KIND_TOKENS)
    val.add_argument("n", type=int)
    val.add_argument("m", type=int)

    ver = sub.add_parser("verify", help="sweep one identity or the whole catalog")
    ver.add_argument("--identity", required=True, choices=_IDENTITY_TOKENS)
    ver.add_argument("--max", dest="max_index", type=int, default=25, metavar="N",
                     help="sweep bound (default 25)")
    ver.add_argument("--format", choices=("table", "json"), default="table")
    ver.add_argument(
        "--inject-fault",
        metavar="KIND:N:M[:DELTA]",
        default=None,
        help="self-test hook: offset one stored entry before sweeping, "
        "e.g. second:5:2:1; a healthy install must then exit 1",
    )

    orc = sub.add_parser(
        "oracle-check",
        help="compare engine values against brute-force enumeration",
    )
    orc.add_argument("--max", dest="max_n", type=int, default=8, metavar="N",
                     help="check all 1 <= m <= n <= N (default 8)")
    orc.add_argument(
        "--budget",
        type=int,
        default=None,
        metavar="N",
        help=f"enumeration budget (env {ENV_ORACLE_BUDGET}, "
        f"default {DEFAULT_ENUMERATION_BUDGET})",
    )

    conv = sub.add_parser("convert", help="rebuild one kind from the other at (n, m)")
    conv.add_argument("--direction", required=True,
                      choices=("s1-from-s2", "s2-from-s1"))
    conv.add_argument("--format", choices=("table", "json"), default="table")
    conv.add_argument("n", type=int)
    conv.add_argument("m", type=int)

    return parser


def _env_int(name: str):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name}={raw!r} is not an integer")


def _resolve_config(args) -> CliConfig:
    # flags win over environment, environment over defaults; everything is
    # validated here, before any computation
    index_cap = args.index_cap
    if index_cap is None:
        index_cap = _env_int(ENV_INDEX_CAP)
    if index_cap is None:
        index_cap = DEFAULT_INDEX_CAP
    if index_cap < 0:
        raise UsageError(f"index cap must be non-negative, got {index_cap}")

    budget = getattr(args, "budget", None)
    if budget is None:
        budget = _env_int(ENV_ORACLE_BUDGET)
    if budget is None:
        budget = DEFAULT_ENUMERATION_BUDGET
    if budget < 0:
        raise UsageError(f"oracle budget must be non-negative, got {budget}")

    return CliConfig(index_cap=index_cap, oracle_budget=budget)


def _render_table(rows, align_right=True) -> str:
    widths = {}
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths.get(i, 0), len(cell))
    pad = str.rjust if align_right else str.ljust
    lines = []
    for row in rows:
        cells = [pad(cell, widths[i]) for i, cell in enumerate(row)]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _cmd_triangle(args, config) -> int:
    calc = StirlingCalculator(index_cap=config.index_cap)
    triangle = calc.triangle(StirlingKind.from_token(args.kind), args.rows)
    if args.format == "csv":
        sys.stdout.write(triangle.to_csv())
    elif args.format == "json":
        print(triangle.to_json())
    else:
        sys.stdout.write(
            _render_table([[str(v) for v in row] for row in triangle.rows])
        )
    return EXIT_OK


def _cmd_value(args, config) -> int:
    calc = StirlingCalculator(index_cap=config.index_cap)
    print(calc.value(StirlingKind.from_token(args.kind), args.n, args.m))
    return EXIT_OK


def _parse_fault(fault: str, index_cap: int) -> PerturbedCalculator:
    parts = fault.split(":")
    if len(parts) not in (3, 4):
        raise UsageError(
            f"--inject-fault expects KIND:N:M[:DELTA], got {fault!r}"
        )
    kind_token, n_text, m_text = parts[:3]
    if kind_token not in ("first", "second"):
        raise UsageError(
            f"--inject-fault kind must be 'first' or 'second', got {kind_token!r}"
        )
    try:
        n = int(n_text)
        m = int(m_text)
        delta = int(parts[3]) if len(parts) == 4 else 1
    except ValueError:
        raise UsageError(f"--inject-fault expects integer N:M[:DELTA], got {fault!r}")
    try:
        return PerturbedCalculator(
            StirlingKind.from_token(kind_token), n, m, delta, index_cap=index_cap
        )
    except ValueError as exc:
        raise UsageError(f"--inject-fault: {exc}")


def _report_rows(reports):
    rows = [["id", "status", "range", "counterexamples", "elapsed"]]
    for report in reports:
        rows.append(
            [
                report.id.value,
                report.status,
                report.range,
                str(len(report.counterexamples)),
                f"{report.elapsed_ms} ms",
            ]
        )
    return rows


def _print_counterexamples(report):
    print(f"counterexamples for {report.id.value}:")
    for ce in report.counterexamples:
        where = ", ".join(f"{name}={value}" for name, value in ce.indices.items())
        data = ce.to_json_data()
        print(f"  {where}: lhs={data['lhs']} rhs={data['rhs']}")


def _cmd_verify(args, config) -> int:
    if args.inject_fault is not None:
        calc = _parse_fault(args.inject_fault, config.index_cap)
    else:
        calc = StirlingCalculator(index_cap=config.index_cap)

    if args.identity == "all":
        reports = run_all(args.max_index, calc)
    else:
        reports = [run_identity(IdentityId.from_token(args.identity), args.max_index, calc)]
    all_passed = all(report.passed for report in reports)

    if args.format == "json":
        if args.identity == "all":
            payload = {
                "reports": [report.to_json_data() for report in reports],
                "all_passed": all_passed,
            }
            print(dump_json(payload))
        else:
            print(reports[0].to_json())
    else:
        sys.stdout.write(_render_table(_report_rows(reports), align_right=False))
        for report in reports:
            if not report.passed:
                _print_counterexamples(report)
        summary = "all passed" if all_passed else "violations found"
        print(f"{len(reports)} identit{'y' if len(reports) == 1 else 'ies'} checked, {summary}")

    return EXIT_OK if all_passed else EXIT_VIOLATION


def _cmd_oracle_check(args, config) -> int:
    if args.max_n < 1:
        raise UsageError(f"--max must be at least 1, got {args.max_n}")
    if args.max_n > config.oracle_budget:
        raise BudgetExceededError(args.max_n, config.oracle_budget)

    calc = StirlingCalculator(index_cap=config.index_cap)
    cases = 0
    mismatches = []
    for n in range(1, args.max_n + 1):
        for m in range(1, n + 1):
            pairs = (
                (
                    StirlingKind.FIRST_UNSIGNED,
                    count_permutations_by_cycles(n, m, config.oracle_budget),
                ),
                (
                    StirlingKind.SECOND,
                    count_set_partitions(n, m, config.oracle_budget),
                ),
            )
            for kind, counted in pairs:
                cases += 1
                computed = calc.value(kind, n, m)
                if computed != counted:
                    mismatches.append((kind, n, m, computed, counted))

    if not mismatches:
        print(f"{cases} cases, all equal")
        return EXIT_OK
    print(f"{cases} cases, {len(mismatches)} mismatches")
    for kind, n, m, computed, counted in mismatches:
        print(f"  {kind.value} (n={n}, m={m}): engine={computed} enumeration={counted}")
    return EXIT_VIOLATION


def _cmd_convert(args, config) -> int:
    calc = StirlingCalculator(index_cap=config.index_cap)
    if args.direction == "s1-from-s2":
        converted = calc.first_from_second(args.n, args.m)
        direct = calc.value(StirlingKind.FIRST_SIGNED, args.n, args.m)
    else:
        converted = calc.second_from_first(args.n, args.m)
        direct = calc.value(StirlingKind.SECOND, args.n, args.m)
    agree = converted == direct

    if args.format == "json":
        print(
            dump_json(
                {
                    "direction": args.direction,
                    "n": args.n,
                    "m": args.m,
                    "value": str(converted),
                    "recurrence": str(direct),
                    "agree": agree,
                }
            )
        )
    else:
        print(f"value: {converted}")
        print(f"recurrence: {direct}")
        print(f"agree: {'yes' if agree else 'no'}")
    return EXIT_OK if agree else EXIT_VIOLATION


_HANDLERS = {
    "triangle": _cmd_triangle,
    "value": _cmd_value,
    "verify": _cmd_verify,
    "oracle-check": _cmd_oracle_check,
    "convert": _cmd_convert,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = _resolve_config(args)
    except UsageError as exc:
        print(f"stirling: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return _HANDLERS[args.command](args, config)
    except ResourceLimitError as exc:
        print(f"stirling: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except UsageError as exc:
        print(f"stirling: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"stirling: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
