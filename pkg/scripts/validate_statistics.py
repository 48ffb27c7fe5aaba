#!/usr/bin/env python3
"""Run every Monte Carlo self-check of the analytic band statistics.

Checks A-D validate the mean/variance formulas behind the confidence bands
(IID signature moments, indicator-signature moments, shifted-coefficient
mean, correlated variance bound).  The coverage check measures per-z band
coverage; run it with --z-max near 3 to stay inside the region where the
normal approximation behind the band is accurate, and with a few thousand
runs, since a single excursion at low run counts already drops the
empirical coverage below the 0.999 floor.
"""

import argparse
import sys

from nide.bench import MC_CHECKS, mc_validate


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--runs", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--z-max", type=float, default=3.0, help="coverage grid upper end")
    args = parser.parse_args()

    params = {
        "appendixA": {"n": 2048},
        "appendixB": {"n": 2048},
        "appendixC": {"n": 2048},
        "appendixD": {"n": 1024, "ar": 0.8, "grid_points": 50},
        "coverage": {"n": 2048, "z_max": args.z_max, "grid_points": 30},
    }
    all_ok = True
    for check in MC_CHECKS:
        report = mc_validate(check, params[check], runs=args.runs, seed=args.seed)
        all_ok &= report.passed
        print(report.text())
        print()
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
