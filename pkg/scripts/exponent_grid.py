#!/usr/bin/env python3
"""Fit empirical runtime exponents for both fast rank tiers on one grid.

Writes one CSV block per algorithm to stdout, then a line per fitted
slope. The default grid spans 10^6 to 2.56*10^8 so the asymptotic gap
between the two tiers is visible above interpreter noise.
"""

import argparse

from fareylattice.bench import ALGOS, fit_exponent, run_grid, to_csv

DEFAULT_GRID = [10**6, 4 * 10**6, 16 * 10**6, 64 * 10**6, 256 * 10**6]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--sizes",
        default=",".join(str(n) for n in DEFAULT_GRID),
        help="comma-separated ascending n values",
    )
    parser.add_argument("--reps", type=int, default=5)
    parser.add_argument(
        "--algos",
        default="improved,pawlewicz",
        help="comma-separated subset of: " + ",".join(sorted(ALGOS)),
    )
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    fits = {}
    for algo in args.algos.split(","):
        records = run_grid(algo, sizes, reps=args.reps)
        print(to_csv(records))
        fits[algo] = fit_exponent(records)
    for algo, slope in fits.items():
        print(f"{algo} exponent: {slope:.3f}")


if __name__ == "__main__":
    main()
