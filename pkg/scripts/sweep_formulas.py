#!/usr/bin/env python3
"""Tabulate the triangle-count maximum against its leading term.

For each n in the range, print the case-selected partition, the exact count,
the compact value where the divisibility condition 12r | n holds, and the
gap to the asymptotic leading term.  CSV on stdout.

Example:
    python3 scripts/sweep_formulas.py --r 3 --n-max 120 > sweep.csv
"""

import argparse
import sys

from regsimplex.formulas import (
    asymptotic_leading,
    eval_T2r_closed,
    eval_corollary13,
)
from regsimplex.lenz import theorem12_partition


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=120)
    args = ap.parse_args()

    print("n,partition,count,compact,leading,gap")
    for n in range(args.r, args.n_max + 1):
        partition = theorem12_partition(n, args.r)
        value = eval_T2r_closed(n, args.r).value
        compact = (
            eval_corollary13(n, args.r).value if n % (12 * args.r) == 0 else ""
        )
        lead = asymptotic_leading(n, args.r, 3)
        gap = value - lead
        print(f'{n},"{" ".join(map(str, partition))}",{value},{compact},{lead},{gap}')
    return 0


if __name__ == "__main__":
    sys.exit(main())
