#!/usr/bin/env python3
"""Scan the shifted autocorrelation sum against the shift multiple.

For fixed T the sum of Z^2(t_nu) Z^2(t_{nu+d}) over a window decays with
the shift distance d = l - k.  This prints, for each d, the sum on the full
and half grids and the ratio to the unshifted main term, which makes the
d^2-flavored falloff visible in two columns of numbers.

    python scripts/shift_scan.py --T 1e5 --dmax 6
"""

import argparse
import sys

from zetalab.correlation import CorrelationSpec, autocorrelation_sum
from zetalab.gram import GramKind


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--T", type=float, default=1e5)
    ap.add_argument("--dmax", type=int, default=6)
    ap.add_argument("--shards", type=int, default=1)
    args = ap.parse_args()

    print("# d  full_ratio  half_ratio  full_value  half_value")
    for d in range(args.dmax + 1):
        row = [d]
        vals = []
        for kind in (GramKind.FULL, GramKind.HALF):
            spec = CorrelationSpec(T=args.T, kind=kind, k=0, l=d)
            res = autocorrelation_sum(spec, shards=args.shards)
            row.append(res.ratio)
            vals.append(res.value)
        print("%d  %12.6f  %12.6f  %18.6f  %18.6f"
              % (row[0], row[1], row[2], vals[0], vals[1]))
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
