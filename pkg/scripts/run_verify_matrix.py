#!/usr/bin/env python3
"""Sweep the cross-validation over a grid of (r, n) and print one report block
per r.  Exit status is nonzero if any route disagrees anywhere.

Example:
    python3 scripts/run_verify_matrix.py --r 3 4 5 --n-max 40 --workers 4
"""

import argparse
import sys

from regsimplex.cli import run_verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--n-max", type=int, default=40)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    all_ok = True
    for r in args.r:
        if r < args.k:
            print(f"# r={r}: skipped (need r >= k={args.k})")
            continue
        ok, report = run_verify(range(r, args.n_max + 1), r, args.k, args.workers)
        print(f"# r={r}")
        sys.stdout.write(report)
        all_ok = all_ok and ok
    print("# all routes agree" if all_ok else "# MISMATCH somewhere above")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
