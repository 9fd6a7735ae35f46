#!/usr/bin/env python3
"""Convergence study of the three curvature conventions.

For a fixed edge length the three kappa formulas agree to third order in the
turning angle.  This script tabulates the pairwise differences over a range
of angles and fits the log-log slope, which should be 3.
"""

import argparse
import math

import numpy as np

from frenetkit import Convention, kappa_from_angle


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ell", type=float, default=1.0)
    parser.add_argument("--theta-min", type=float, default=1e-3)
    parser.add_argument("--theta-max", type=float, default=1e-1)
    parser.add_argument("--n", type=int, default=25)
    args = parser.parse_args()

    thetas = np.geomspace(args.theta_min, args.theta_max, args.n)
    pairs = [
        (Convention.INSCRIBED, Convention.CENTERED),
        (Convention.CENTERED, Convention.CIRCUMSCRIBED),
        (Convention.INSCRIBED, Convention.CIRCUMSCRIBED),
    ]
    print(f"{'theta':>12} " + " ".join(f"{a.value[:4]}-{b.value[:4]:>8}" for a, b in pairs))
    diffs = {pair: [] for pair in pairs}
    for th in thetas:
        row = [f"{th:12.5e}"]
        for pair in pairs:
            d = abs(
                kappa_from_angle(th, args.ell, pair[0])
                - kappa_from_angle(th, args.ell, pair[1])
            )
            diffs[pair].append(d)
            row.append(f"{d:13.5e}")
        print(" ".join(row))
    print()
    for pair, vals in diffs.items():
        slope = np.polyfit(np.log(thetas), np.log(vals), 1)[0]
        print(f"log-log slope {pair[0].value} vs {pair[1].value}: {slope:.4f}")


if __name__ == "__main__":
    main()
