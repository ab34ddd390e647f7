#!/usr/bin/env python3
"""Scan comet rows for record setters: running minima and maxima of r(2N).

Record minima trace the lower envelope of the comet scatter (the hard
targets); record maxima are the highly composite evens with many prime
pairs.  Writes nothing; prints two small tables.

Example:
    python scripts/comet_extremes.py --hi 1000000 --workers 4
"""

import argparse
import sys

from goldbach_ab import build_table, comet_rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=int, default=8)
    ap.add_argument("--hi", type=int, default=10**5)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    table = build_table(args.hi + 1)
    rows = comet_rows(args.lo, args.hi, workers=args.workers, table=table)

    lows, highs = [], []
    best_low = None
    best_high = -1
    for two_n, r, s, a_count, b_count in rows:
        if best_low is None or r < best_low:
            best_low = r
            lows.append((two_n, r, s))
        if r > best_high:
            best_high = r
            highs.append((two_n, r, s))

    print(f"comet extremes over [{args.lo}, {args.hi}] "
          f"({len(rows)} evens)\n")
    print("running minima of r(2N):")
    for two_n, r, s in lows:
        print(f"  2N={two_n:<10} r={r:<6} s={s}")
    print("\nrunning maxima of r(2N) (last 15):")
    for two_n, r, s in highs[-15:]:
        print(f"  2N={two_n:<10} r={r:<6} s={s}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
