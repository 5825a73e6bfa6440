"""Command-line entry point.

    hurwitz compute --genus 1 --profile 2,1 --method oracle --normalization raw
    hurwitz verify theorem1 --max-genus 2 --max-n 5
    hurwitz table --max-n 3 --max-genus 1 --format json

Exit codes: 0 success, 1 failed relation, 2 bad arguments or unwritable
output, 3 oracle budget exceeded, 4 closed form requested for an
unsupported genus.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from random import Random

from . import closedform, cutjoin, oracle, relations, series
from .core import Partition, aut_order, convert, format_rational, from_hat, partitions

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_UNSUPPORTED = 4


def _profile(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hurwitz", description="Exact one-part double Hurwitz numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a single Hurwitz number")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--profile", type=_profile, required=True, help='parts over infinity, e.g. "2,1,1"')
    p.add_argument("--method", choices=("oracle", "recursion", "closed-form"), default="recursion")
    p.add_argument("--normalization", choices=("raw", "prime", "hat"), default="raw")
    p.add_argument("--budget", type=_positive, default=oracle.DEFAULT_BUDGET,
                   help="maximum oracle tuple evaluations (default: %(default)s)")
    p.add_argument("--threads", type=_positive, default=1, help="oracle worker processes")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run a verification suite")
    vsub = p.add_subparsers(dest="suite", required=True)

    v = vsub.add_parser("theorem1", help="alternating binomial relation")
    v.add_argument("--max-genus", type=_nonneg, default=3)
    v.add_argument("--max-n", type=_positive, default=6)
    v.set_defaults(func=verify_theorem1)

    v = vsub.add_parser("cutjoin", help="recursion against the brute-force oracle")
    v.add_argument("--max-n", type=_positive, default=4)
    v.add_argument("--max-genus", type=_nonneg, default=2)
    v.add_argument("--budget", type=_positive, default=oracle.DEFAULT_BUDGET)
    v.add_argument("--threads", type=_positive, default=1)
    v.set_defaults(func=verify_cutjoin)

    v = vsub.add_parser("genus2", help="genus-2 closed form against the recursion")
    v.add_argument("--max-n", type=_positive, default=8)
    v.set_defaults(func=verify_genus2)

    v = vsub.add_parser("eq4", help="symbolic shift identity of the genus-2 formula")
    v.add_argument("--samples", type=_nonneg, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=verify_eq4)

    v = vsub.add_parser("pde", help="cut-and-join PDE on the truncated generating function")
    v.add_argument("--max-degree", type=_positive, default=6)
    v.add_argument("--max-order", type=_positive, default=8)
    v.set_defaults(func=verify_pde)

    p = sub.add_parser("table", help="tabulate H, H' and Hhat by recursion")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--max-genus", type=_nonneg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_table)
    return parser


def cmd_compute(args) -> int:
    g, b = args.genus, args.profile
    if args.method == "oracle":
        try:
            h = oracle.oracle_hurwitz(g, b, budget=args.budget, workers=args.threads)
        except oracle.InfeasibleError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INFEASIBLE
        value = convert(g, b, h, args.normalization)
    elif args.method == "recursion":
        value = convert(g, b, cutjoin.hurwitz_raw(g, b), args.normalization)
    else:
        if g not in (0, 2):
            print(f"error: closed form available only for genus 0 and 2, got {g}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        hhat = closedform.hat_closed_form(g, b)
        value = convert(g, b, from_hat(g, b, hhat), args.normalization)
    print(format_rational(value))
    return 0


def _summary(name: str, failures: int, total: int) -> int:
    print(f"{name}: {total - failures}/{total} passed")
    return EXIT_FAIL if failures else 0


def verify_theorem1(args) -> int:
    failures = total = 0
    for g in range(args.max_genus + 1):
        for n in range(1, args.max_n + 1):
            for b in partitions(n):
                verdict = relations.verify_theorem1(g, b)
                print(verdict.report())
                total += 1
                failures += not verdict.equal
    return _summary("theorem1", failures, total)


def verify_cutjoin(args) -> int:
    failures = total = 0
    table, skipped = oracle.oracle_table(args.max_n, args.max_genus, args.budget, args.threads)
    for (g, b) in sorted(table, key=lambda k: (k.genus, k.profile.degree(), [-x for x in k.profile])):
        expected = aut_order(b) * table[(g, b)]
        got = cutjoin.hprime(g, b)
        ok = expected == got
        total += 1
        failures += not ok
        print(f"[{'ok' if ok else 'FAIL'}] g={g} b={b} oracle*aut={format_rational(expected)} "
              f"recursion={format_rational(got)}")
    for g, b in skipped:
        print(f"[skip] g={g} b={b} exceeds budget {args.budget}")
    return _summary("cutjoin", failures, total)


def verify_genus2(args) -> int:
    failures = total = 0
    for n in range(1, args.max_n + 1):
        for b in partitions(n):
            closed = closedform.genus2_hat(b)
            rec = cutjoin.hurwitz_hat(2, b)
            ok = closed == rec
            total += 1
            failures += not ok
            print(f"[{'ok' if ok else 'FAIL'}] b={b} closed-form={format_rational(closed)} "
                  f"recursion={format_rational(rec)}")
    return _summary("genus2", failures, total)


def verify_eq4(args) -> int:
    residual = closedform.eq4_identity_residual()
    print(f"residual polynomial = {residual!r}")
    failures = int(not residual.is_zero())
    lhs = closedform.eq4_lhs()
    rng = Random(args.seed)
    for _ in range(args.samples):
        A = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
        B = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
        value = lhs(A, B)
        ok = value == 1
        failures += not ok
        print(f"[{'ok' if ok else 'FAIL'}] A={format_rational(A)} B={format_rational(B)} "
              f"lhs={format_rational(value)}")
    return _summary("eq4", failures, args.samples + 1)


def verify_pde(args) -> int:
    residual = series.pde_residual(args.max_degree, args.max_order)
    for (r, b), c in residual.sorted_items():
        print(f"[FAIL] theta^{r} | {b} | residual {format_rational(c)}")
    print(f"pde residual (N={args.max_degree}, R={args.max_order}): "
          f"{'zero' if residual.is_zero() else f'{len(residual.coeffs)} nonzero terms'}")
    return 0 if residual.is_zero() else EXIT_FAIL


def render_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    lines = [",".join(cutjoin.TABLE_FIELDS)]
    for row in rows:
        # the partition field contains commas and is always quoted
        lines.append(",".join(f'"{row[k]}"' if k == "b" else str(row[k]) for k in cutjoin.TABLE_FIELDS))
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    text = render_table(cutjoin.table_rows(args.max_n, args.max_genus), args.format)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
