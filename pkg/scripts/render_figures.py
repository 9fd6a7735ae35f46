#!/usr/bin/env python3
"""Render the canonical demonstration figures to SVG files."""

import argparse
from pathlib import Path

from frenetkit.figures import FIGURES


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("figures"))
    parser.add_argument("--only", nargs="*", choices=sorted(FIGURES), default=None)
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    names = args.only if args.only else sorted(FIGURES)
    for name in names:
        path = args.out_dir / f"{name}.svg"
        path.write_text(FIGURES[name]() + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
