"""Command-line front end.

Verbs:
  seq     print a sequence prefix (table, csv, json, or OEIS b-file format)
  table1  recompute the 36 reference counts (d = 2, 3; n = 1..6) and
          compare them to the embedded golden copy
  oracle  run brute-force enumeration checks against the recurrences
  asym    print growth-law diagnostics
  cache   inspect or clear the on-disk result cache

Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O error,
4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

import mpmath

from magicount import asymptotics, oracle, table_data, tensors
from magicount.cache import (
    DEFAULT_CACHE_PATH,
    CacheFormatError,
    load_cache,
    save_cache,
)
from magicount.errors import DEFAULT_BUDGET, BudgetExceededError
from magicount.exactmath import fraction_to_decimal
from magicount.report import RunReport
from magicount.sequences import (
    SequenceTable,
    compute_u,
    compute_v,
    compute_w,
    compute_zero_one,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_BUDGET = 4

_COMPUTERS = {
    "v": compute_v,
    "u": compute_u,
    "w": compute_w,
    "w01": compute_zero_one,
}


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _compute_table(kind: str, d: int, n_max: int) -> SequenceTable:
    return _COMPUTERS[kind](d, n_max)


def _update_cache(path: str, report: RunReport | None, values: dict) -> int | None:
    """Merge computed values into the cache file; returns an exit code on
    failure, None on success.  A cached value disagreeing with a fresh
    computation is a check failure and is reported with both values."""
    try:
        cached = load_cache(path)
    except CacheFormatError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_IO
    hits = 0
    for key, value in values.items():
        text = str(value)
        if key in cached:
            if cached[key] != text:
                kind, d, n = key
                message = (
                    f"cache mismatch at kind={kind} d={d} n={n}: "
                    f"cached={cached[key]} recomputed={text}"
                )
                if report is not None:
                    report.add_check("cache consistency", False, message)
                print(message, file=sys.stderr)
                return EXIT_CHECK_FAILED
            hits += 1
        cached[key] = text
    try:
        save_cache(path, cached)
    except OSError as exc:
        print(f"cache write error: {exc}", file=sys.stderr)
        return EXIT_IO
    if report is not None:
        report.add_line(f"cache: {hits} hits, {len(values) - hits} new entries")
    else:
        print(f"cache: {hits} hits, {len(values) - hits} new entries", file=sys.stderr)
    return None


def cmd_seq(args: argparse.Namespace) -> int:
    if args.dim < 2:
        return _usage(f"--dim must be >= 2, got {args.dim}")
    if args.n_max < 1:
        return _usage(f"--n-max must be >= 1, got {args.n_max}")
    offset = args.offset
    if offset == 0 and args.kind in ("u", "v"):
        return _usage("offset 0 is only valid for kinds w and w01")
    table = _compute_table(args.kind, args.dim, args.n_max)
    indices = [n for n in table.indices() if offset <= n <= args.n_max]
    values = [table[n] for n in indices]

    if args.format == "csv":
        print(",".join(str(v) for v in values))
    elif args.format == "bfile":
        for n, v in zip(indices, values):
            print(f"{n} {v}")
    elif args.format == "json":
        payload = {
            "dimension": args.dim,
            "kind": args.kind,
            "offset": offset,
            "values": [str(v) for v in values],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for n, v in zip(indices, values):
            print(f"{n:>4}  {v}")

    cache_values = {(args.kind, args.dim, n): table[n] for n in table.indices()}
    failure = _update_cache(args.cache, None, cache_values)
    return failure if failure is not None else EXIT_OK


def cmd_table1(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    report = RunReport(command="table1")
    golden = table_data.GOLDEN_COUNTS
    cache_values = {}
    for d in table_data.DIMENSIONS:
        computed = {kind: _compute_table(kind, d, max(table_data.SIZES))
                    for kind in table_data.ROW_KINDS}
        for kind in table_data.ROW_KINDS:
            for n in table_data.SIZES:
                got = computed[kind][n]
                expected = golden[(kind, d, n)]
                name = f"table d={d} kind={kind} n={n}"
                if got == expected:
                    report.add_check(name, True, f"value={got}")
                else:
                    report.add_check(name, False, f"expected={expected} got={got}")
            for n in computed[kind].indices():
                cache_values[(kind, d, n)] = computed[kind][n]
    failure = _update_cache(args.cache, report, cache_values)
    if failure is not None:
        return failure
    report.elapsed = time.perf_counter() - started
    print(report.render())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


_ORACLE_CHECKS = ("v", "w", "w01", "indec", "bijection", "birkhoff")


def _parse_pairs(text: str) -> list[tuple[int, int]] | None:
    pairs = []
    for chunk in text.split(","):
        head, sep, tail = chunk.partition(":")
        if not sep:
            return None
        try:
            pairs.append((int(head), int(tail)))
        except ValueError:
            return None
    return pairs


def cmd_oracle(args: argparse.Namespace) -> int:
    pairs = _parse_pairs(args.pairs)
    if pairs is None:
        return _usage(f"--pairs must look like 'd:n,d:n', got {args.pairs!r}")
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in _ORACLE_CHECKS]
    if unknown:
        return _usage(f"unknown checks: {', '.join(unknown)}")
    for d, n in pairs:
        if d < 2 or n < 1:
            return _usage(f"pairs need d >= 2 and n >= 1, got {d}:{n}")

    started = time.perf_counter()
    report = RunReport(command=f"oracle --pairs {args.pairs} --checks {args.checks}")
    cache_values = {}
    try:
        for d, n in pairs:
            tensor_counts = None
            if any(c in checks for c in ("w", "w01", "indec", "bijection", "birkhoff")):
                tensor_counts = oracle.count_tensor_kinds(d, n, budget=args.budget)
            for check in checks:
                name = f"{check} d={d} n={n}"
                if check == "v":
                    expected = compute_v(d, n)[n]
                    got = oracle.count_v_oracle(d, n, budget=args.budget)
                    report.add_check(name, got == expected,
                                     f"oracle={got} sequence={expected}")
                    cache_values[("v", d, n)] = expected
                elif check == "w":
                    expected = compute_w(d, n)[n]
                    got = tensor_counts.total
                    report.add_check(name, got == expected,
                                     f"oracle={got} sequence={expected}")
                    cache_values[("w", d, n)] = expected
                elif check == "w01":
                    expected = compute_zero_one(d, n)[n]
                    got = tensor_counts.zero_one
                    report.add_check(name, got == expected,
                                     f"oracle={got} sequence={expected}")
                    cache_values[("w01", d, n)] = expected
                elif check == "indec":
                    expected = compute_u(d, n)[n]
                    got = tensor_counts.indecomposable
                    report.add_check(name, got == expected,
                                     f"oracle={got} sequence={expected}")
                    cache_values[("u", d, n)] = expected
                elif check == "bijection":
                    if n < 2:
                        report.add_check(name, True,
                                         "skipped: correspondence needs n >= 2")
                        continue
                    tuples = oracle.count_v_oracle(d, n, budget=args.budget)
                    lhs = tensor_counts.indecomposable * 2**n
                    rhs = tuples * math.factorial(n) ** (d - 1)
                    report.add_check(
                        name, lhs == rhs,
                        f"tensors*2^n={lhs} tuples*(n!)^(d-1)={rhs}")
                elif check == "birkhoff":
                    failures = 0
                    total = 0
                    for t in tensors.enumerate_two_magic(d, n, budget=args.budget):
                        total += 1
                        if not tensors.is_sum_of_unit_magic(t):
                            failures += 1
                    passed = failures == 0 if d == 2 else True
                    report.add_check(
                        name, passed,
                        f"{failures} of {total} not a sum of two unit tensors")
    except BudgetExceededError as exc:
        print(f"budget exceeded at d={exc.dimension} n={exc.size}: {exc}",
              file=sys.stderr)
        return EXIT_BUDGET

    failure = _update_cache(args.cache, report, cache_values)
    if failure is not None:
        return failure
    report.elapsed = time.perf_counter() - started
    print(report.render())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_asym(args: argparse.Namespace) -> int:
    if args.dim < 2:
        return _usage(f"--dim must be >= 2, got {args.dim}")
    if args.n_max < 1:
        return _usage(f"--n-max must be >= 1, got {args.n_max}")
    if args.precision < 20:
        return _usage(f"--precision must be >= 20, got {args.precision}")

    started = time.perf_counter()
    report = RunReport(command=f"asym --dim {args.dim} --n-max {args.n_max}")

    if args.dim == 2:
        w = compute_w(2, args.n_max)
        series = asymptotics.w2_ratio_series(w, args.n_max, args.precision)
        for n, value in series.points:
            report.add_line(f"n={n:<4} w2_ratio={mpmath.nstr(value, args.precision)}")
        band_top = mpmath.mpf("1.2")
        in_band = all(1 < value < band_top for _, value in series.points)
        report.add_check("w2_ratio in (1, 1.2)", in_band)
        halving_pairs = [(n, n // 2) for n in range(20, args.n_max + 1)]
        if halving_pairs:
            points = dict(series.points)
            halves = all(
                abs(points[n] - 1) < abs(points[h] - 1) for n, h in halving_pairs
            )
            report.add_check("|w2_ratio - 1| halves as n doubles (n >= 20)", halves)
        report.elapsed = time.perf_counter() - started
        print(report.render())
        return EXIT_OK if report.ok else EXIT_CHECK_FAILED

    if args.n_max < 2:
        print("warning: ratio diagnostics for d >= 3 start at n = 2; "
              "nothing to report")
        return EXIT_OK

    u = compute_u(args.dim, args.n_max)
    w = compute_w(args.dim, args.n_max)
    u_series = asymptotics.u_ratio_series(args.dim, u, args.n_max)
    w_series = asymptotics.w_ratio_series(args.dim, w, args.n_max)
    digits = min(args.precision, 50)
    for (n, uval), (_, wval) in zip(u_series.points, w_series.points):
        report.add_line(
            f"n={n:<4} u_ratio={fraction_to_decimal(uval, digits)} "
            f"w_ratio={fraction_to_decimal(wval, digits)}"
        )
    u_values = u_series.values()
    report.add_check("u_ratio <= 1", all(v <= 1 for v in u_values))
    report.add_check(
        "u_ratio non-decreasing",
        all(b >= a for a, b in zip(u_values, u_values[1:])),
    )
    report.add_check(
        "w_ratio >= u_ratio",
        all(wv >= uv for (_, uv), (_, wv) in zip(u_series.points, w_series.points)),
    )
    report.add_check(
        "excess bound (exact)",
        asymptotics.x_bound_check(args.dim, args.n_max, u, w),
    )
    report.elapsed = time.perf_counter() - started
    print(report.render())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_cache(args: argparse.Namespace) -> int:
    try:
        if args.action == "inspect":
            records = load_cache(args.cache)
            print(f"records: {len(records)}")
            for (kind, d, n), value in sorted(records.items()):
                print(f"{kind} d={d} n={n} {value}")
        else:
            if os.path.exists(args.cache):
                os.unlink(args.cache)
                print("cache cleared")
            else:
                print("no cache file")
    except CacheFormatError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magicount",
        description="Exact counts of d-dimensional matrices with hyperplane sums 2.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_cache_option(p):
        p.add_argument("--cache", default=DEFAULT_CACHE_PATH,
                       help="result cache file (ndjson)")

    p_seq = sub.add_parser("seq", help="print a sequence prefix")
    p_seq.add_argument("--kind", required=True, choices=("u", "v", "w", "w01"))
    p_seq.add_argument("--dim", required=True, type=int)
    p_seq.add_argument("--n-max", required=True, type=int)
    p_seq.add_argument("--format", default="table",
                       choices=("table", "csv", "json", "bfile"))
    p_seq.add_argument("--offset", type=int, default=1, choices=(0, 1),
                       help="first index to print (0 valid for w/w01 only)")
    add_cache_option(p_seq)
    p_seq.set_defaults(func=cmd_seq)

    p_table = sub.add_parser("table1", help="verify the golden reference counts")
    add_cache_option(p_table)
    p_table.set_defaults(func=cmd_table1)

    p_oracle = sub.add_parser("oracle", help="brute-force enumeration checks")
    p_oracle.add_argument("--pairs", required=True,
                          help="comma-separated d:n pairs, e.g. 3:2,2:4")
    p_oracle.add_argument("--checks", default="v,w,w01,indec",
                          help=f"subset of {','.join(_ORACLE_CHECKS)}")
    p_oracle.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    add_cache_option(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    p_asym = sub.add_parser("asym", help="growth-law diagnostics")
    p_asym.add_argument("--dim", required=True, type=int)
    p_asym.add_argument("--n-max", required=True, type=int)
    p_asym.add_argument("--precision", type=int, default=30)
    add_cache_option(p_asym)
    p_asym.set_defaults(func=cmd_asym)

    p_cache = sub.add_parser("cache", help="inspect or clear the result cache")
    p_cache.add_argument("action", choices=("inspect", "clear"))
    add_cache_option(p_cache)
    p_cache.set_defaults(func=cmd_cache)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
