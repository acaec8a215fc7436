"""Command-line surface.

Every subcommand is a thin adapter over the library: it parses arguments,
calls the one function that does the work, and prints the result either
as plain text or, with ``--json``, as line-delimited records with stable
key order.  Exact values are always rendered as decimal strings or
"num/den" -- ``--approx`` may append a decimal approximation but never
replaces the exact form.

Exit codes: 0 success (and "integral" for check), 1 not integral (check
only), 2 usage or input error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bench, bernoulli, integrality, powersum, primes, selftest
from .exact import approx_decimal, format_rational
from .powersum import InconsistencyError, PowerSumQuery

__all__ = ["main", "entry"]


def _emit(record: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(record))
    else:
        print(human)


def _sum_by_route(k: int, n: int, route: str) -> int:
    q = PowerSumQuery(k=k, n=n)
    if route == "brute":
        return powersum.s_brute(q)
    if route == "faulhaber":
        return powersum.s_faulhaber(q)
    if route == "recursive":
        return powersum.s_recursive(k, n)[-1]
    values = {
        "brute": powersum.s_brute(q),
        "faulhaber": powersum.s_faulhaber(q),
        "recursive": powersum.s_recursive(k, n)[-1],
    }
    if len(set(values.values())) != 1:
        raise InconsistencyError(f"routes disagree for k={k}, n={n}: {values}")
    return values["brute"]


def _cmd_bern(args: argparse.Namespace) -> int:
    if args.k < 0:
        raise ValueError(f"index must be >= 0, got {args.k}")
    if args.k > args.cap:
        raise ValueError(f"index {args.k} exceeds the table cap {args.cap}")
    table = bernoulli.bernoulli_recursive(args.k)
    value = table[args.k]
    record = {"command": "bern", "k": str(args.k), "value": format_rational(value)}
    human = format_rational(value)
    if args.verify:
        other = bernoulli.bernoulli_egf(args.k)
        if other.values != table.values:
            raise InconsistencyError(f"recursion and series routes disagree up to {args.k}")
        record["verified"] = True
    if args.approx:
        record["approx"] = approx_decimal(value)
        human += f" ≈ {record['approx']}"
    _emit(record, args.json, human)
    return 0


def _cmd_denom(args: argparse.Namespace) -> int:
    d = bernoulli.vsc_denominator(args.k)
    ps = primes.vsc_primes(args.k)
    record = {
        "command": "denom",
        "k": str(args.k),
        "value": str(d),
        "primes": [str(p) for p in ps],
    }
    _emit(record, args.json, str(d))
    return 0


def _cmd_sum(args: argparse.Namespace) -> int:
    value = _sum_by_route(args.k, args.n, args.route)
    record = {
        "command": "sum",
        "k": str(args.k),
        "n": str(args.n),
        "route": args.route,
        "value": str(value),
    }
    if args.route == "all":
        record["routes_agree"] = True  # a disagreement never reaches this line
    _emit(record, args.json, str(value))
    return 0


def _cmd_avg(args: argparse.Namespace) -> int:
    value = Fraction(_sum_by_route(args.k, args.n, args.route), args.n)
    record = {
        "command": "avg",
        "k": str(args.k),
        "n": str(args.n),
        "route": args.route,
        "value": format_rational(value),
        "integral": value.denominator == 1,
    }
    if args.route == "all":
        record["routes_agree"] = True
    human = format_rational(value)
    if args.approx:
        record["approx"] = approx_decimal(value)
        human += f" ≈ {record['approx']}"
    _emit(record, args.json, human)
    return 0


def _verdict_record(command: str, k: int, n: int, v: integrality.Verdict) -> dict:
    return {
        "command": command,
        "k": str(k),
        "n": str(n),
        "integral": v.integral,
        "rule": v.rule,
        "witness_primes": [str(p) for p in v.witness_primes],
        "witness_residue": None if v.witness_residue is None else str(v.witness_residue),
    }


def _cmd_check(args: argparse.Namespace) -> int:
    verdict = integrality.decide(args.k, args.n)
    human = "integral" if verdict.integral else f"not integral; {verdict.witness_text()}"
    _emit(_verdict_record("check", args.k, args.n, verdict), args.json, human)
    return 0 if verdict.integral else 1


def _cmd_table(args: argparse.Namespace) -> int:
    kmax = args.kmax if args.kmax_pos is None else args.kmax_pos
    nmax = args.nmax if args.nmax_pos is None else args.nmax_pos
    rows = integrality.grid(kmax, nmax)
    if args.json:
        for k, row in enumerate(rows, start=1):
            den = str(bernoulli.vsc_denominator(k)) if k >= 2 and k % 2 == 0 else None
            for n, verdict in enumerate(row, start=1):
                record = _verdict_record("table", k, n, verdict)
                record["denominator"] = den
                print(json.dumps(record))
        return 0
    print(f"  k  denominator  integral for n = 1..{nmax}")
    for k, row in enumerate(rows, start=1):
        den = str(bernoulli.vsc_denominator(k)) if k >= 2 and k % 2 == 0 else "-"
        cells = " ".join("✓" if v.integral else "✗" for v in row)
        print(f"{k:>3}  {den:>11}  {cells}")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = selftest.run_groups(quick=args.quick)
    failed = [r for r in results if not r.passed]
    for r in results:
        record = {
            "command": "selftest",
            "group": r.name,
            "passed": r.passed,
            "detail": r.detail,
            "seconds": round(r.elapsed, 3),
        }
        mark = "ok  " if r.passed else "FAIL"
        human = f"{mark} {r.name:<26} {r.elapsed:7.2f}s"
        if r.detail:
            human += f"  {r.detail}"
        _emit(record, args.json, human)
    summary = {
        "command": "selftest-summary",
        "groups": str(len(results)),
        "failed": str(len(failed)),
    }
    if failed:
        names = ", ".join(r.name for r in failed)
        _emit(summary, args.json, f"{len(failed)} of {len(results)} invariant groups FAILED: {names}")
        return 3
    _emit(summary, args.json, f"all {len(results)} invariant groups passed")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    cells = bench.DEFAULT_CELLS
    if args.kmax is not None and args.nmax is not None:
        cells = cells + ((args.kmax, args.nmax),)
    results = bench.run_bench(cells, budget_ms=args.budget_ms)
    for c in results:
        record = {
            "command": "bench",
            "k": str(c.k),
            "n": str(c.n),
            "method": c.method,
            "status": c.status,
            "ms": c.elapsed_ms,
            "integral": c.integral,
            "est_ms": c.est_ms,
        }
        if c.status == "ok":
            verdict = "integral" if c.integral else "not integral"
            human = f"k={c.k:<5} n={c.n:<11} {c.method:<8} {c.elapsed_ms:>12.3f} ms  {verdict}"
        else:
            human = (
                f"k={c.k:<5} n={c.n:<11} {c.method:<8} "
                f"infeasible within {args.budget_ms:.0f} ms (estimated {c.est_ms:.0f} ms)"
            )
        _emit(record, args.json, human)
    gap = bench.speedup_estimate(results)
    if gap is not None:
        k, n, ratio = gap
        record = {"command": "bench-summary", "k": str(k), "n": str(n), "speedup": ratio}
        _emit(
            record,
            args.json,
            f"rule-based decision vs modular summation at k={k}, n={n}: ~{ratio}x",
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faulhaber",
        description="Exact Bernoulli numbers, power sums, and integrality of their averages.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit line-delimited JSON records")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bern", parents=[common], help="print the k-th Bernoulli number")
    p.add_argument("k", type=int)
    p.add_argument("--verify", action="store_true", help="cross-check the two routes")
    p.add_argument("--approx", action="store_true", help="append a decimal approximation")
    p.add_argument("--cap", type=int, default=bernoulli.DEFAULT_TABLE_CAP, help="table cap")
    p.set_defaults(handler=_cmd_bern)

    p = sub.add_parser("denom", parents=[common], help="Bernoulli denominator for even k")
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_denom)

    p = sub.add_parser("sum", parents=[common], help="S_k(n) = 1^k + ... + n^k, exactly")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument(
        "--route",
        choices=("brute", "faulhaber", "recursive", "all"),
        default="faulhaber",
        help="evaluation route; 'all' cross-checks every route",
    )
    p.set_defaults(handler=_cmd_sum)

    p = sub.add_parser("avg", parents=[common], help="average of the first n k-th powers")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--route", choices=("brute", "faulhaber", "recursive", "all"), default="faulhaber")
    p.add_argument("--approx", action="store_true", help="append a decimal approximation")
    p.set_defaults(handler=_cmd_avg)

    p = sub.add_parser("check", parents=[common], help="decide integrality, with witness")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("table", parents=[common], help="verdict grid over 1..kmax x 1..nmax")
    p.add_argument("kmax_pos", nargs="?", type=int, default=None, metavar="kmax")
    p.add_argument("nmax_pos", nargs="?", type=int, default=None, metavar="nmax")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--nmax", type=int, default=16)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("selftest", parents=[common], help="run the full invariant suite")
    p.add_argument("--quick", action="store_true", help="reduced ranges, same checks")
    p.set_defaults(handler=_cmd_selftest)

    p = sub.add_parser("bench", parents=[common], help="decision rule vs summation timings")
    p.add_argument("--budget-ms", type=float, default=bench.DEFAULT_BUDGET_MS)
    p.add_argument("--kmax", type=int, default=None, help="extra cell: exponent")
    p.add_argument("--nmax", type=int, default=None, help="extra cell: upper limit")
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ZeroDivisionError, primes.FactorizationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
