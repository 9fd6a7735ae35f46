#!/usr/bin/env python3
"""Length-preservation report for the two centered-offset variants.

Discretizes the unit circle at several densities with both offset formulas
and reports the total polyline length against 2*pi.  The exact (apothem)
offset preserves the length; the published outward offset overshoots the
half-edge budget and cannot complete the construction on a circle.
"""

import argparse
import math

from frenetkit.discretize2d import circle, discretize_centered
from frenetkit.errors import MTooSmall


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--densities", type=float, nargs="*", default=[4.0, 10.0, 50.0])
    args = parser.parse_args()

    target = 2.0 * math.pi
    print(f"target length: {target!r}")
    print(f"{'density':>8} {'variant':>8} {'result':>24}")
    winners = set()
    for density in args.densities:
        for variant in ("exact", "published"):
            try:
                rc = discretize_centered(circle(1.0), density, variant=variant)
                err = abs(rc.length() - target)
                print(f"{density:8.1f} {variant:>8} length error {err:.3e}")
                if err <= 1e-9:
                    winners.add(variant)
            except MTooSmall as exc:
                print(f"{density:8.1f} {variant:>8} failed: {exc}")
    print()
    print(f"variant(s) satisfying the 1e-9 length test: {sorted(winners) or 'none'}")


if __name__ == "__main__":
    main()
