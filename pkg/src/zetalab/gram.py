"""The three Gram-type grids and their structural identities.

FULL solves theta(t) = pi nu, HALF solves theta(t) = pi nu / 2, and
HALF_THETA1 solves the elementary phase theta1(t) = pi nu / 2.  All three
share the local spacing 2 pi / ln(t / 2 pi).  Roots are found on theta1
first (closed form, safeguarded Newton inside a doubling bracket) and, for
the two theta grids, polished by a couple of Newton steps on the full phase;
the theta1 root is within O(1/(t ln t)) so the polish converges immediately.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

import numpy as np

from .errors import DomainError, IndexTooSmallError, SolverError
from .special import DEFAULT_MIN_T, TWO_PI, _theta_raw, theta, theta1, theta1_prime, theta_prime


class GramKind(str, Enum):
    FULL = "full"
    HALF = "half"
    HALF_THETA1 = "half-theta1"


# target phase per unit index
_STEP = {GramKind.FULL: math.pi,
         GramKind.HALF: math.pi / 2.0,
         GramKind.HALF_THETA1: math.pi / 2.0}

# nu = 1 already solves above t = 17 for every kind, clearing the t >= 10
# domain floor, so the smallest admissible index does not depend on kind.
NU_MIN = 1

RESIDUAL_TOL = 1e-10  # scaled by (1 + nu)


def nu_min(kind: GramKind) -> int:
    return NU_MIN


@dataclass(frozen=True)
class GramPoint:
    kind: GramKind
    nu: int
    t: float
    residual: float


@dataclass(frozen=True)
class Spacing:
    """Local grid spacing 2 pi / ln(t/2pi) attached to an index."""

    kind: GramKind
    nu: int
    value: float


class CountReport(NamedTuple):
    kind: GramKind
    T: float
    count: int
    main_term: float
    ratio: float


@dataclass(frozen=True)
class GramRange:
    """Solved points of one kind with lo <= t <= hi, ascending in nu."""

    kind: GramKind
    nus: np.ndarray
    ts: np.ndarray
    residuals: np.ndarray

    def __len__(self) -> int:
        return len(self.nus)

    @property
    def point_count(self) -> int:
        return len(self.nus)

    def spacings(self) -> np.ndarray:
        return spacing_from_heights(self.ts)

    def __iter__(self) -> Iterator[GramPoint]:
        for i in range(len(self.nus)):
            yield GramPoint(self.kind, int(self.nus[i]), float(self.ts[i]),
                            float(self.residuals[i]))


def spacing_from_heights(ts: np.ndarray) -> np.ndarray:
    return TWO_PI / np.log(np.asarray(ts, dtype=float) / TWO_PI)


def _phase(kind: GramKind, ts: np.ndarray) -> np.ndarray:
    if kind is GramKind.HALF_THETA1:
        return 0.5 * ts * np.log(ts / TWO_PI) - 0.5 * ts - math.pi / 8.0
    return _theta_raw(ts)


def _solve_theta1(targets: np.ndarray, nus: np.ndarray) -> np.ndarray:
    """Vectorized safeguarded Newton for theta1(t) = target."""
    t0 = TWO_PI * np.maximum(math.e, nus.astype(float))
    lo = t0.copy()
    hi = t0.copy()
    # expand the bracket by doubling; theta1 is increasing above 2 pi
    for _ in range(64):
        mask = theta1(hi) < targets
        if not mask.any():
            break
        lo[mask] = hi[mask]
        hi[mask] *= 2.0
    floor = TWO_PI * (1.0 + 1e-9)
    for _ in range(64):
        mask = theta1(lo) > targets
        if not mask.any():
            break
        hi[mask] = lo[mask]
        lo[mask] = np.maximum(0.5 * lo[mask], floor)
    t = 0.5 * (lo + hi)
    for _ in range(80):
        f = theta1(t) - targets
        lo = np.where(f <= 0.0, t, lo)
        hi = np.where(f >= 0.0, t, hi)
        tn = t - f / theta1_prime(t)
        bad = ~np.isfinite(tn) | (tn <= lo) | (tn >= hi)
        tn = np.where(bad, 0.5 * (lo + hi), tn)
        if np.all(np.abs(tn - t) <= 1e-12 * tn):
            t = tn
            break
        t = tn
    return t


def _solve_many(kind: GramKind, nus: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Solve the phase equation for an array of indices; returns (t, residual)."""
    nus = np.asarray(nus, dtype=np.int64)
    if nus.size == 0:
        return np.empty(0), np.empty(0)
    if nus.min() < NU_MIN:
        raise IndexTooSmallError(f"indices must be >= {NU_MIN}")
    targets = _STEP[kind] * nus.astype(float)
    t = _solve_theta1(targets, nus)
    if kind is not GramKind.HALF_THETA1:
        # polish on the full phase; the theta1 root is O(1/(t ln t)) away
        for _ in range(3):
            t = t - (_theta_raw(t) - targets) / theta_prime(t)
    deriv = theta1_prime if kind is GramKind.HALF_THETA1 else theta_prime
    residuals = np.abs(_phase(kind, t) - targets)
    tol = RESIDUAL_TOL * (1.0 + nus.astype(float))
    miss = residuals > 0.02 * tol
    if miss.any():
        # a second Newton round; needing more would mean the bracket logic broke
        for _ in range(8):
            t2 = t[miss] - (_phase(kind, t[miss]) - targets[miss]) / deriv(t[miss])
            t = t.copy()
            t[miss] = t2
            residuals = np.abs(_phase(kind, t) - targets)
            miss = residuals > 0.02 * tol
            if not miss.any():
                break
        if (residuals > tol).any():
            worst = int(nus[int(np.argmax(residuals / tol))])
            raise SolverError(f"residual tolerance missed at nu={worst} kind={kind.value}")
    return t, residuals


_memo_lock = threading.Lock()
_memo: dict[tuple[GramKind, int], GramPoint] = {}


def gram_point(kind: GramKind, nu: int) -> GramPoint:
    """One solved grid point; memoized, deterministic either way."""
    key = (kind, int(nu))
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    ts, res = _solve_many(kind, np.array([nu], dtype=np.int64))
    point = GramPoint(kind, int(nu), float(ts[0]), float(res[0]))
    with _memo_lock:
        if len(_memo) < 1 << 20:
            _memo[key] = point
    return point


def gram_points(kind: GramKind, nus) -> GramRange:
    """Solve an explicit ascending index array."""
    nus = np.asarray(nus, dtype=np.int64)
    ts, res = _solve_many(kind, nus)
    return GramRange(kind, nus, ts, res)


def gram_range(kind: GramKind, lo: float, hi: float) -> GramRange:
    """Exactly the points with lo <= t <= hi, ascending."""
    if lo < DEFAULT_MIN_T:
        raise DomainError(f"gram_range requires lo >= {DEFAULT_MIN_T}")
    if hi < lo:
        raise DomainError("gram_range requires hi >= lo")
    step = _STEP[kind]
    first = max(NU_MIN, int(math.ceil(float(_phase(kind, np.asarray(lo, dtype=float))) / step)) - 1)
    last = max(first, int(math.floor(float(_phase(kind, np.asarray(hi, dtype=float))) / step)) + 1)
    nus = np.arange(first, last + 1, dtype=np.int64)
    ts, res = _solve_many(kind, nus)
    keep = (ts >= lo) & (ts <= hi)
    return GramRange(kind, nus[keep], ts[keep], res[keep])


def gram_spacing(kind: GramKind, nu: int) -> Spacing:
    point = gram_point(kind, nu)
    return Spacing(kind, int(nu), TWO_PI / math.log(point.t / TWO_PI))


def proxy_gap(nu: int) -> float:
    """Height gap between the half grid and its elementary-phase proxy.

    Returns t(HALF, nu) - t(HALF_THETA1, nu); decays like 1/(t ln t).
    """
    return gram_point(GramKind.HALF, nu).t - gram_point(GramKind.HALF_THETA1, nu).t


def count_report(kind: GramKind, T: float) -> CountReport:
    """Cardinality of the grid inside [T, 2T] against its density main term."""
    count = gram_range(kind, T, 2.0 * T).point_count
    density = 1.0 if kind is GramKind.FULL else 2.0
    main = density / TWO_PI * T * math.log(T)
    return CountReport(kind, T, count, main, count / main)
