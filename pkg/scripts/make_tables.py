#!/usr/bin/env python3
"""Emit reference CSV tables for the core number families.

Writes one file per quantity into --out-dir.  Values go through
exact.decimal so tables with thousands of digits per entry do not trip
CPython's int-to-str guard.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from convolvium.exact import (
    catalan,
    decimal,
    gessel,
    smallest_clearing_factor,
    super_catalan,
)
from convolvium.sums import gessel_convolution, supercat_convolution


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--r-max", type=int, default=6)
    parser.add_argument("--m-max", type=int, default=3)
    parser.add_argument("--out-dir", type=Path, default=Path("tables"))
    return parser.parse_args(argv)


def write_table(path: Path, header: tuple[str, ...], rows) -> None:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([*row[:-1], decimal(row[-1])])
    print(f"wrote {path}")


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    n_max, r_max, m_max = args.n_max, args.r_max, args.m_max
    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)

    write_table(out / "catalan.csv", ("n", "value"),
                ((n, catalan(n)) for n in range(n_max + 1)))
    write_table(out / "super_catalan.csv", ("n", "r", "value"),
                ((n, r, super_catalan(n, r))
                 for n in range(n_max + 1) for r in range(r_max + 1)))
    write_table(out / "gessel.csv", ("n", "r", "value"),
                ((n, r, gessel(n, r))
                 for n in range(n_max + 1) for r in range(1, r_max + 1)))
    write_table(out / "clearing_factors.csv", ("r", "value"),
                ((r, smallest_clearing_factor(r)) for r in range(1, r_max + 1)))
    for m in range(1, m_max + 1):
        write_table(out / f"phi_m{m}.csv", ("n", "r", "value"),
                    ((n, r, gessel_convolution(n, m, r))
                     for n in range(n_max + 1) for r in range(1, r_max + 1)))
        write_table(out / f"psi_m{m}.csv", ("n", "r", "value"),
                    ((n, r, supercat_convolution(n, m, r))
                     for n in range(n_max + 1) for r in range(1, r_max + 1)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
