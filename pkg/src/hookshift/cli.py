"""Command-line interface.

Exit codes: 0 success / all checks passed, 1 at least one verification
failure, 2 usage or parse error.  Computation subcommands print nothing
machine-dependent, so their output is a pure function of argv.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .harness import SweepConfig, render_report, run_sweep
from .identities import (
    IdentityId,
    Workspace,
    check_identity,
    corner_quotient_factors,
    g_poly,
    g_quotient_factors,
    thm_4_2_numerator,
)
from .partitions import (
    Partition,
    PartitionError,
    corner_sets,
    hook_length,
    hook_lengths,
    hook_product,
    parse_partition,
    syt_count,
)
from .schur import schur_lhs, schur_rhs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookshift",
        description="Exact hook-length and shifted-parts computations, and "
        "exhaustive verification of the identities relating them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hooks", help="hook-length grid and hook product")
    p.add_argument("partition")

    p = sub.add_parser("gpoly", help="the shifted-parts g-polynomial")
    p.add_argument("partition")

    p = sub.add_parser("corners", help="in/out corner rows and removals")
    p.add_argument("partition")

    p = sub.add_parser("syt", help="number of standard Young tableaux")
    p.add_argument("partition")

    p = sub.add_parser("schur-lhs", help="binomial/elementary side of the Schur identity")
    p.add_argument("n", type=int)

    p = sub.add_parser("schur-rhs", help="hook/g side of the Schur identity")
    p.add_argument("n", type=int)

    p = sub.add_parser("check", help="check one identity at one partition")
    p.add_argument("identity", metavar="identity-id")
    p.add_argument("partition")

    p = sub.add_parser("sweep", help="verify the catalog over all partitions up to a bound")
    p.add_argument("--max-n", type=int, default=25, help="identity sweep bound (default 25)")
    p.add_argument("--max-n-schur", type=int, default=9,
                   help="bound for the Schur-identity checks (default 9)")
    p.add_argument("--max-n-oracle", type=int, default=8,
                   help="bound for the monomial-oracle cross-check (default 8)")
    p.add_argument("--identities", default="all",
                   help="comma-separated identity ids (default all)")
    p.add_argument("--jobs", default="auto", help="worker count or 'auto'")
    p.add_argument("--format", default="json", choices=("json", "csv", "text"))
    p.add_argument("--fail-fast", action="store_true")
    p.add_argument("--witnesses", action="store_true",
                   help="record witnesses for passing checks too")
    p.add_argument("--output", default=None, help="write the report here instead of stdout")

    sub.add_parser("example-55331", help="worked example for the partition 5,5,3,3,1")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (PartitionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "hooks":
        return _cmd_hooks(parse_partition(args.partition))
    if cmd == "gpoly":
        print(g_poly(parse_partition(args.partition)))
        return 0
    if cmd == "corners":
        return _cmd_corners(parse_partition(args.partition))
    if cmd == "syt":
        print(syt_count(parse_partition(args.partition)))
        return 0
    if cmd == "schur-lhs":
        print(json.dumps(schur_lhs(_nonnegative(args.n)).serialize(), indent=2))
        return 0
    if cmd == "schur-rhs":
        print(json.dumps(schur_rhs(_nonnegative(args.n)).serialize(), indent=2))
        return 0
    if cmd == "check":
        return _cmd_check(args)
    if cmd == "sweep":
        return _cmd_sweep(args)
    if cmd == "example-55331":
        return _cmd_example()
    raise AssertionError(cmd)


def _nonnegative(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n


def _cmd_hooks(lam: Partition) -> int:
    for row in hook_lengths(lam):
        print(" ".join(str(h) for h in row))
    print(f"H = {hook_product(lam)}")
    return 0


def _fmt_rows(rows) -> str:
    return "{" + ",".join(str(i) for i in rows) + "}"


def _cmd_corners(lam: Partition) -> int:
    data = corner_sets(lam)
    print(f"T={_fmt_rows(data.in_corners)}")
    print(f"B={_fmt_rows(data.out_corners)}")
    for i in data.in_corners:
        print(f"row {i} removed -> {data.removals[i]}")
    return 0


def _cmd_check(args) -> int:
    try:
        identity = IdentityId(args.identity)
    except ValueError:
        print(f"error: unknown identity id {args.identity!r}; one of "
              + ", ".join(i.value for i in IdentityId), file=sys.stderr)
        return 2
    lam = parse_partition(args.partition)
    outcomes = check_identity(identity, lam, Workspace(), capture=True)
    for o in outcomes:
        corner = f" corner={o.corner_index}" if o.corner_index is not None else ""
        print(f"{o.status.upper()} {o.identity} {o.partition}{corner} "
              f"lhs={o.lhs} rhs={o.rhs}")
    return 0 if all(o.passed for o in outcomes) else 1


def _parse_identity_selection(text: str):
    if text == "all":
        return "all"
    try:
        return tuple(IdentityId(tok) for tok in text.split(",") if tok)
    except ValueError as exc:
        raise ValueError(f"bad --identities value: {exc}") from None


def _cmd_sweep(args) -> int:
    jobs = args.jobs if args.jobs == "auto" else int(args.jobs)
    config = SweepConfig(
        max_n_identities=args.max_n,
        max_n_theorem_1_2=args.max_n_schur,
        max_n_oracles=min(args.max_n_oracle, args.max_n),
        identities=_parse_identity_selection(args.identities),
        parallelism=jobs,
        output_format=args.format,
        fail_fast=args.fail_fast,
        capture_witnesses=args.witnesses,
    )
    report = run_sweep(config)
    text = render_report(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    return 0 if report.all_passed else 1


def _factor_str(polys) -> str:
    return "".join(f"({p})" for p in polys)


def _value_str(values) -> str:
    return "".join(f"({v})" for v in values)


def _cmd_example() -> int:
    lam = parse_partition("55331")
    n = lam.size
    corner_row = 4
    data = corner_sets(lam)
    mu = data.removals[corner_row]

    print(f"partition 5,5,3,3,1 of n = {n}")
    print()
    print("hook lengths:")
    for row in hook_lengths(lam):
        print("  " + " ".join(str(h) for h in row))
    print(f"  H = {hook_product(lam)}")
    print()
    print(f"after removing the corner box in row {corner_row} ({mu}):")
    for row in hook_lengths(mu):
        print("  " + " ".join(str(h) for h in row))
    print(f"  H' = {hook_product(mu)}")
    print()

    changed = [c for c in lam.cells()
               if not mu.contains_cell(c) or hook_length(lam, c) != hook_length(mu, c)]
    num_hooks = [hook_length(lam, c) for c in changed]
    den_hooks = [hook_length(mu, c) for c in changed if mu.contains_cell(c)]
    ratio = Fraction(hook_product(lam), hook_product(mu))
    print("only the hooks in the removed box's row and column change, so")
    print(f"  H/H' = {_value_str(num_hooks)} / {_value_str(den_hooks)} = {ratio}")
    print()

    num, den = corner_quotient_factors(lam, corner_row)
    print(f"cancelled quotient g(x+1)/g'(x) for the row-{corner_row} removal:")
    print(f"  {_factor_str(num)} / {_factor_str(den)}")
    a = corner_row - lam.part(corner_row)
    num_vals = [p(a) for p in num]
    den_vals = [p(a) for p in den]
    print(f"at x = {corner_row} - {lam.part(corner_row)} = {a} this is "
          f"{_value_str(num_vals)} / {_value_str(den_vals)} = "
          f"{Fraction(g_poly(lam)(a + 1), g_poly(mu)(a))} = H/H'")
    print()

    print(f"corner index sets: T={_fmt_rows(data.in_corners)} and B={_fmt_rows(data.out_corners)}")
    for i in data.in_corners:
        print(f"  row {i} removed -> {data.removals[i]}")
    qnum, qden = g_quotient_factors(lam)
    print(f"so (x-{n}) g(x+1)/g(x) = {_factor_str(qnum)} / {_factor_str(qden)}")
    print("and the weighted corner sum identity reads")
    print("  sum over rows i in T of (H/H_i-) / (x+part(i)-i)")
    print(f"    = x - {_factor_str(qnum)} / {_factor_str(qden)}")
    print(f"    = ({thm_4_2_numerator(lam)}) / {_factor_str(qden)}")
    print()

    total = sum(Fraction(hook_product(lam), hook_product(m)) for m in data.removal_list)
    print(f"sum of H/H_mu over all corner removals = {total} = n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
