"""Command-line frontend.

Four subcommands: compute (one exact value), verify (run claim suites),
paths (the lattice-path oracle), table (CSV sweeps of a quantity). Data goes
to stdout, diagnostics to stderr, nothing is written to disk unless --out is
given. Exit codes: 0 for success or an all-green verification, 1 when any
suite reports violations (or compute hits a failed exact division), 2 for
usage errors, unknown names, and over-budget ranges.

All numeric output is exact decimal; there is no floating point anywhere.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Iterable

from .closed_forms import ClosedFormFamily, closed_form
from .exact import (
    binomial,
    catalan,
    decimal,
    gessel,
    smallest_clearing_factor,
    super_catalan,
)
from .kernels import Kernel, KernelFamily
from .paths import BoardTooLarge, count_paths, enumerate_paths, gessel_path_spec, prefix_path_spec
from .sums import gessel_convolution, m_sum, quarter_psi, supercat_convolution
from .verify import (
    DEFAULT_SEED,
    RangeTooLarge,
    SweepRange,
    UnknownSuite,
    reports_to_csv,
    reports_to_json,
    run_all,
    run_suite,
    suite_names,
)

_COMPUTE_QUANTITIES = (
    "binomial",
    "catalan",
    "supercatalan",
    "gessel",
    "phi",
    "psi",
    "quarter-psi",
    "msum",
    "closed-form",
)

_TABLE_QUANTITIES = (
    "binomial",
    "catalan",
    "supercatalan",
    "gessel",
    "phi",
    "psi",
    "quarter-psi",
    "kr",
)

# kernel families constructible from the command line (custom needs a table)
_CLI_KERNELS = ("plain", "rising", "central", "supercat", "half-supercat", "gessel")


class _UsageError(ValueError):
    """Bad flag combination detected after parsing."""


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convolvium",
        description="Exact computation and machine verification of Gessel / "
        "super Catalan convolution identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser(
        "compute",
        help="print one exact value",
        description="Evaluate one quantity exactly and print it in decimal. "
        "phi, psi, and quarter-psi take the half index n (the sum runs to "
        "2n) with defaults m=1, r=1; msum takes the full index n with "
        "defaults j=0, t=0, a=0 and uses --r as the kernel order.",
    )
    comp.add_argument("quantity", choices=_COMPUTE_QUANTITIES)
    comp.add_argument("--n", type=int, help="main index")
    comp.add_argument("--k", type=int, help="binomial lower index")
    comp.add_argument("--m", type=int, help="binomial weight exponent (default 1)")
    comp.add_argument("--r", type=int, help="order parameter (default 1)")
    comp.add_argument("--j", type=int, help="M-sum offset (default 0)")
    comp.add_argument("--t", type=int, help="M-sum weight level (default 0)")
    comp.add_argument("--a", type=int, help="kernel shift parameter (default 0)")
    comp.add_argument("--kernel", choices=_CLI_KERNELS, help="kernel for msum")
    comp.add_argument(
        "--family",
        choices=[f.value for f in ClosedFormFamily],
        help="closed-form family for closed-form",
    )

    ver = sub.add_parser(
        "verify",
        help="run one verification suite or all of them",
        description="Sweep a claim over its parameter box and report "
        "violations. Known suites: " + ", ".join(suite_names()) + ", or 'all'.",
    )
    ver.add_argument("suite", help="suite name, or 'all'")
    ver.add_argument("--n-max", dest="n_max", type=int, default=None)
    ver.add_argument("--m-max", dest="m_max", type=int, default=None)
    ver.add_argument("--r-max", dest="r_max", type=int, default=None)
    ver.add_argument("--a-max", dest="a_max", type=int, default=None)
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the randomized suites")
    ver.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    ver.add_argument("--jobs", type=_positive_int, default=1, help="suites run in parallel (default 1)")
    ver.add_argument("--out", type=Path, default=None, help="write the report to a file instead of stdout")
    ver.add_argument(
        "--timings",
        action="store_true",
        help="include real elapsed_ms in JSON (forfeits byte-identical output)",
    )

    pat = sub.add_parser(
        "paths",
        help="count (or list) the lattice paths behind the Gessel numbers",
        description="Monotone paths from (0,0) to (n+r, n+r-1) avoiding a "
        "forbidden diagonal set: 'gessel' forbids (x,x) for x >= r, "
        "'prefix' forbids (x,x) for 1 <= x <= n. Both counts equal the "
        "Gessel number P(n,r).",
    )
    pat.add_argument("--n", type=int, required=True)
    pat.add_argument("--r", type=int, required=True)
    pat.add_argument("--interpretation", choices=("gessel", "prefix"), default="gessel")
    pat.add_argument("--list", action="store_true", help="print every path as an R/U string")

    tab = sub.add_parser(
        "table",
        help="emit a CSV sweep of one quantity",
        description="CSV with a header row. Grid quantities sweep n up to "
        "--n-max and r up to --r-max (default 5); phi, psi, and quarter-psi "
        "evaluate at weight --m (default 1); kr needs only --r-max.",
    )
    tab.add_argument("quantity", choices=_TABLE_QUANTITIES)
    tab.add_argument("--n-max", dest="n_max", type=int, default=None)
    tab.add_argument("--r-max", dest="r_max", type=int, default=None)
    tab.add_argument("--m", type=int, default=1)
    tab.add_argument("--format", choices=("csv",), default="csv")

    return parser


def _need(args: argparse.Namespace, flag: str, quantity: str) -> int:
    value = getattr(args, flag)
    if value is None:
        raise _UsageError(f"compute {quantity} requires --{flag}")
    return value


def _opt(value: int | None, default: int) -> int:
    return default if value is None else value


def _cmd_compute(args: argparse.Namespace) -> int:
    q = args.quantity
    if q == "binomial":
        value = binomial(_need(args, "n", q), _need(args, "k", q))
    elif q == "catalan":
        value = catalan(_need(args, "n", q))
    elif q == "supercatalan":
        value = super_catalan(_need(args, "n", q), _need(args, "r", q))
    elif q == "gessel":
        value = gessel(_need(args, "n", q), _need(args, "r", q))
    elif q in ("phi", "psi", "quarter-psi"):
        n = _need(args, "n", q)
        m = _opt(args.m, 1)
        r = _opt(args.r, 1)
        fn = {"phi": gessel_convolution, "psi": supercat_convolution, "quarter-psi": quarter_psi}[q]
        value = fn(n, m, r)
    elif q == "msum":
        if args.kernel is None:
            raise _UsageError("compute msum requires --kernel")
        family = KernelFamily(args.kernel)
        order = _opt(args.r, 1) if family in (
            KernelFamily.SUPERCAT,
            KernelFamily.HALF_SUPERCAT,
            KernelFamily.GESSEL,
        ) else None
        kern = Kernel(family, order=order)
        value = m_sum(kern, _need(args, "n", q), _opt(args.j, 0), _opt(args.t, 0), _opt(args.a, 0))
    else:  # closed-form
        if args.family is None:
            raise _UsageError("compute closed-form requires --family")
        value = closed_form(
            ClosedFormFamily(args.family),
            n=_need(args, "n", q),
            j=_opt(args.j, 0),
            r=_opt(args.r, 1),
            a=_opt(args.a, 0),
        )
    sys.stdout.write(decimal(value) + "\n")
    return 0


def _plain_report_lines(reports) -> Iterable[str]:
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        yield f"{rep.suite} {status} cases={rep.cases_checked} violations={len(rep.violations)}"
        for note in rep.notes:
            yield f"  note: {note}"
        for violation in rep.violations:
            yield (
                f"  at {violation['parameters']!r}: "
                f"expected {violation['expected']}, got {violation['actual']}"
            )


def _cmd_verify(args: argparse.Namespace) -> int:
    sweep = SweepRange(
        n_max=args.n_max,
        m_max=args.m_max,
        r_max=args.r_max,
        a_max=args.a_max,
        seed=args.seed,
    )
    if args.suite == "all":
        reports = run_all(sweep, jobs=args.jobs)
    else:
        reports = [run_suite(args.suite, sweep)]

    if args.format == "json":
        text = reports_to_json(reports, include_timings=args.timings)
    elif args.format == "csv":
        text = reports_to_csv(reports)
    else:
        text = "\n".join(_plain_report_lines(reports)) + "\n"

    if args.out is not None:
        args.out.write_text(text)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_paths(args: argparse.Namespace) -> int:
    make = gessel_path_spec if args.interpretation == "gessel" else prefix_path_spec
    spec = make(args.n, args.r)
    if args.list:
        for path in enumerate_paths(spec):
            sys.stdout.write(path + "\n")
    else:
        sys.stdout.write(decimal(count_paths(spec)) + "\n")
    return 0


def _table_rows(args: argparse.Namespace) -> tuple[tuple[str, ...], Iterable[tuple[int, ...]]]:
    q = args.quantity
    r_max = _opt(args.r_max, 5)
    if q == "kr":
        return ("r", "value"), ((r, smallest_clearing_factor(r)) for r in range(1, r_max + 1))
    if args.n_max is None:
        raise _UsageError(f"table {q} requires --n-max")
    n_max = args.n_max
    if n_max < 0:
        raise _UsageError("--n-max must be non-negative")
    if q == "binomial":
        return ("n", "k", "value"), (
            (n, k, binomial(n, k)) for n in range(n_max + 1) for k in range(n + 1)
        )
    if q == "catalan":
        return ("n", "value"), ((n, catalan(n)) for n in range(n_max + 1))
    if q == "supercatalan":
        return ("n", "r", "value"), (
            (n, r, super_catalan(n, r)) for n in range(n_max + 1) for r in range(r_max + 1)
        )
    if q == "gessel":
        return ("n", "r", "value"), (
            (n, r, gessel(n, r)) for n in range(n_max + 1) for r in range(1, r_max + 1)
        )
    fn = {"phi": gessel_convolution, "psi": supercat_convolution, "quarter-psi": quarter_psi}[q]
    return ("n", "r", "value"), (
        (n, r, fn(n, args.m, r)) for n in range(n_max + 1) for r in range(1, r_max + 1)
    )


def _cmd_table(args: argparse.Namespace) -> int:
    if args.m < 1:
        raise _UsageError("--m must be at least 1")
    if args.r_max is not None and args.r_max < 1:
        raise _UsageError("--r-max must be at least 1")
    header, rows = _table_rows(args)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([decimal(x) if isinstance(x, int) else x for x in row])
    sys.stdout.write(buf.getvalue())
    return 0


_COMMANDS = {
    "compute": _cmd_compute,
    "verify": _cmd_verify,
    "paths": _cmd_paths,
    "table": _cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (_UsageError, UnknownSuite, RangeTooLarge, BoardTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
