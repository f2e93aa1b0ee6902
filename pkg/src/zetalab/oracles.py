"""Independent reference evaluations for the test and acceptance batteries.

Deliberately different routes from the production code: the phase comes from
a high-precision log-gamma, zeta on the critical line from Euler-Maclaurin
summation with a large cutoff, divisor counts from trial division.  Slow and
simple on purpose; the computational modules never import this one.
"""

from __future__ import annotations

import cmath
import math

import mpmath as mp
import numpy as np

_BERNOULLI = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
              5.0 / 66.0, -691.0 / 2730.0)


def theta_reference(t: float, dps: int = 30) -> float:
    """Im ln Gamma(1/4 + it/2) - (t/2) ln pi, via mpmath."""
    with mp.workdps(dps):
        lg = mp.loggamma(mp.mpc(mp.mpf(1) / 4, mp.mpf(t) / 2))
        val = mp.im(lg) - mp.mpf(t) / 2 * mp.log(mp.pi)
        return float(val)


def theta_root_reference(target: float, lo: float, hi: float, iters: int = 120) -> float:
    """Bisection root of theta_reference(t) = target on [lo, hi]."""
    flo = theta_reference(lo) - target
    fhi = theta_reference(hi) - target
    if flo * fhi > 0:
        raise ValueError("root not bracketed")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fmid = theta_reference(mid) - target
        if flo * fmid <= 0:
            hi = mid
        else:
            lo, flo = mid, fmid
        if hi - lo < 1e-14 * (1 + abs(hi)):
            break
    return 0.5 * (lo + hi)


def zeta_half_line(t: float) -> complex:
    """zeta(1/2 + it) by Euler-Maclaurin with cutoff ~ 2t.

    With six Bernoulli corrections the truncation error is far below
    float rounding for every t >= 10.
    """
    s = complex(0.5, t)
    big_n = max(32, int(2 * abs(t)))
    n = np.arange(1, big_n, dtype=float)
    head = np.sum(np.exp(-s * np.log(n)))
    n_pow = cmath.exp(-s * math.log(big_n))  # N^{-s}
    total = head + big_n * n_pow / (s - 1) + 0.5 * n_pow
    poch = 1.0 + 0.0j
    inv_n2 = 1.0 / (big_n * big_n)
    fact = 1.0
    n_shift = n_pow / big_n  # N^{-s-1}, then stepped down by N^-2 per k
    for k, b in enumerate(_BERNOULLI, start=1):
        if k == 1:
            poch = s
            fact = 2.0
        else:
            poch = poch * (s + (2 * k - 3)) * (s + (2 * k - 2))
            fact = fact * (2 * k - 1) * (2 * k)
            n_shift = n_shift * inv_n2
        total += b / fact * poch * n_shift
    return complex(total)


def z_reference(t: float) -> float:
    """Z(t) = Re of e^{i theta} zeta(1/2 + it), phases from the log-gamma route."""
    th = theta_reference(t)
    return float((complex(math.cos(th), math.sin(th)) * zeta_half_line(t)).real)


def zeta_abs2_reference(t: float) -> float:
    return float(abs(zeta_half_line(t)) ** 2)


def divisor_count_reference(n: int) -> int:
    """Divisor count by trial division up to sqrt(n)."""
    n = int(n)
    r = math.isqrt(n)
    ds = np.arange(1, r + 1, dtype=np.int64)
    hits = int(np.count_nonzero(n % ds == 0))
    return 2 * hits - (1 if r * r == n else 0)
