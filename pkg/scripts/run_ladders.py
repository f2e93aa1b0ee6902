#!/usr/bin/env python3
"""Run the standard convergence battery over a height ladder.

Writes one CSV row per (experiment, height) pair.  The ratio column is the
measured sum divided by its predicted main term, so drift toward 1 with
increasing T is the thing to look at.

    python scripts/run_ladders.py --heights 1e3,1e4 --out ladders.csv
"""

import argparse
import sys

from zetalab.harness import ladder_suite, rows_to_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--heights", default="1e3,1e4",
                    help="comma separated ladder of window heights")
    ap.add_argument("--shards", type=int, default=1)
    ap.add_argument("--out", default="", help="CSV path (default stdout)")
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args()

    heights = tuple(float(s) for s in args.heights.split(","))
    progress = None if args.quiet else sys.stderr
    rows = ladder_suite(shards=args.shards, heights=heights,
                        progress=progress)
    text = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
