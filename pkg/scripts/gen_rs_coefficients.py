"""Regenerate the frozen Chebyshev tables in src/zetalab/_rscoef.py.

The Riemann-Siegel correction terms C0..C3 are smooth functions of the
fractional part p of sqrt(t/2pi).  C0 is the classical
cos(2pi(p^2 - p - 1/16))/cos(2pi p); the higher terms are the standard
combinations of its derivatives:

    C1 = -C0'''/(96 pi^2)
    C2 =  C0''/(64 pi^2) + C0^(6)/(18432 pi^4)
    C3 = -C0'/(64 pi^2) - C0^(5)/(3840 pi^4) - C0^(9)/(5308416 pi^6)

Each is sampled at 160 Chebyshev nodes with 50-digit arithmetic, fitted in
the Chebyshev basis on 2p - 1, and the negligible tail (|c| < 1e-16) is
dropped.  Runtime is a few minutes; the output is committed so the package
itself never needs mpmath at import time.

Usage: python scripts/gen_rs_coefficients.py [output_path]
"""

import sys
from pathlib import Path

import mpmath as mp
import numpy as np

mp.mp.dps = 50

DEGREES = (34, 40, 46, 50)
NODES = 160
TRIM = 1e-16


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def dpsi(p, k):
    if k == 0:
        return psi(p)
    return mp.diff(psi, p, k)


def correction(j, p):
    pi = mp.pi
    if j == 0:
        return psi(p)
    if j == 1:
        return -dpsi(p, 3) / (96 * pi**2)
    if j == 2:
        return dpsi(p, 2) / (64 * pi**2) + dpsi(p, 6) / (18432 * pi**4)
    if j == 3:
        return (-dpsi(p, 1) / (64 * pi**2) - dpsi(p, 5) / (3840 * pi**4)
                - dpsi(p, 9) / (5308416 * pi**6))
    raise ValueError(j)


def fit(j, deg):
    xs = [(mp.cos(mp.pi * (2 * i + 1) / (2 * NODES)) + 1) / 2 for i in range(NODES)]
    x = np.array([float(v) for v in xs])
    y = np.array([float(correction(j, v)) for v in xs])
    coef = np.polynomial.chebyshev.chebfit(2 * x - 1, y, deg)
    keep = len(coef)
    while keep > 1 and abs(coef[keep - 1]) < TRIM:
        keep -= 1
    coef = coef[:keep]
    grid = np.linspace(0, 1, 1203)
    approx = np.polynomial.chebyshev.chebval(2 * grid - 1, coef)
    exact = np.array([float(correction(j, mp.mpf(float(g)))) for g in grid])
    return coef, float(np.max(np.abs(approx - exact)))


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "zetalab" / "_rscoef.py")
    tables = []
    for j, deg in enumerate(DEGREES):
        coef, err = fit(j, deg)
        print(f"C{j}: degree {deg}, kept {len(coef)} coefficients, max error {err:.3e}")
        tables.append(coef)

    lines = [
        '"""Chebyshev tables for the Riemann-Siegel correction terms.',
        "",
        "Generated by scripts/gen_rs_coefficients.py; do not edit by hand.",
        "Table j holds Chebyshev coefficients of the j-th correction on the",
        "argument 2p - 1, p the fractional part of sqrt(t/2pi).",
        '"""',
        "",
        "import numpy as np",
        "",
    ]
    for j, coef in enumerate(tables):
        lines.append(f"C{j} = np.array([")
        for c in coef:
            lines.append(f"    {c!r},")
        lines.append("])")
        lines.append("")
    lines.append("TABLES = (C0, C1, C2, C3)")
    lines.append("")
    out.write_text("\n".join(lines))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
