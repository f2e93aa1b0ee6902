"""Correlation sums of Z^2 over Gram-type grids.

The centerpiece sums: shifted products Z^2(t + k rho) Z^2(t + l rho) over a
dyadic window, their alternating and Euler-weighted variants, discrete
moments, and the exact four-part expansion of a single product into divisor
sums.  Every accumulation goes through the blocked deterministic reducer, so
shard counts never change a reported value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .divisors import DivisorTable
from .errors import CostGuardError, DomainError, SpecError
from .gram import GramKind, gram_point, gram_points, gram_range, spacing_from_heights
from .special import DEFAULT_RS, RiemannSiegelConfig, z_many
from .summation import blocked_fsum, run_sharded

TWO_PI = 2.0 * math.pi

WINDOW_T_MIN = 1000.0


@dataclass(frozen=True)
class CorrelationSpec:
    """One shifted-product sum: window, grid kind, and the two shift indices.

    The window is [T, 2T] unless U is given, then [T, T+U].  Shifts are in
    units of the local spacing 2 pi / ln(t/2 pi); their magnitude is capped
    by M, and M itself must stay below ln T (slowly growing shift budget).
    """

    T: float
    kind: GramKind = GramKind.FULL
    k: int = 0
    l: int = 0
    M: int | None = None
    U: float | None = None

    def __post_init__(self):
        if self.T < WINDOW_T_MIN:
            raise DomainError(f"window start must be >= {WINDOW_T_MIN}")
        if self.kind not in (GramKind.FULL, GramKind.HALF):
            raise SpecError("correlation sums run on the full or half grid")
        if self.M is None:
            object.__setattr__(self, "M", int(math.floor(math.log(self.T))))
        if self.M > math.log(self.T):
            raise SpecError(f"shift budget M={self.M} exceeds ln T")
        if max(abs(self.k), abs(self.l)) > self.M:
            raise SpecError(f"shifts ({self.k},{self.l}) exceed the budget M={self.M}")
        if self.U is not None and not self.U > 0:
            raise SpecError("window length U must be positive")

    @property
    def window(self) -> tuple[float, float]:
        if self.U is not None:
            return self.T, self.T + self.U
        return self.T, 2.0 * self.T

    @property
    def window_length(self) -> float:
        lo, hi = self.window
        return hi - lo


@dataclass(frozen=True)
class SumResult:
    spec: CorrelationSpec
    nu_range: tuple[int, int]
    value: float
    main_term: float
    ratio: float
    point_count: int


def correlation_main_term(spec: CorrelationSpec) -> float:
    """Leading term of the shifted-product sum over the spec's window.

    Shift-difference 0 carries 1/(4 pi^3); difference delta carries
    3/(4 pi^5 delta^2).  The half grid has twice the point density and
    exactly doubles both constants.
    """
    delta = spec.k - spec.l
    if delta == 0:
        coeff = 1.0 / (4.0 * math.pi**3)
    else:
        coeff = 3.0 / (4.0 * math.pi**5 * delta * delta)
    if spec.kind is GramKind.HALF:
        coeff *= 2.0
    return coeff * spec.window_length * math.log(spec.T) ** 5


def _z2_at(ts: np.ndarray, shards: int, rs_cfg: RiemannSiegelConfig) -> np.ndarray:
    """Z^2 on a grid, filled shard-by-shard into absolute positions."""
    out = np.empty_like(ts)

    def fill(i0: int, i1: int) -> None:
        np.square(z_many(ts[i0:i1], rs_cfg), out=out[i0:i1])

    run_sharded(len(ts), shards, fill)
    return out


def _result(spec: CorrelationSpec, gr, value: float, main: float) -> SumResult:
    return SumResult(
        spec=spec,
        nu_range=(int(gr.nus[0]), int(gr.nus[-1])),
        value=value,
        main_term=main,
        ratio=value / main if main != 0.0 else math.nan,
        point_count=len(gr),
    )


def autocorrelation_sum(spec: CorrelationSpec, shards: int = 1,
                        rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> SumResult:
    """Sum of Z^2(t + k rho) Z^2(t + l rho) over the window's grid points."""
    lo, hi = spec.window
    gr = gram_range(spec.kind, lo, hi)
    if len(gr) == 0:
        raise DomainError("window contains no grid points")
    rho = spacing_from_heights(gr.ts)
    z2k = _z2_at(gr.ts + spec.k * rho, shards, rs_cfg)
    z2l = z2k if spec.l == spec.k else _z2_at(gr.ts + spec.l * rho, shards, rs_cfg)
    value = blocked_fsum(z2k * z2l)
    return _result(spec, gr, value, correlation_main_term(spec))


def titchmarsh_sum(T: float, shards: int = 1,
                   rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> SumResult:
    """Sum of Z^2 at consecutive grid points, Z^2(t_nu) Z^2(t_nu+1), over [T, 2T].

    The partner of the last in-window point lies just beyond 2T, so the grid
    is solved with a short margin and the products are formed from adjacent
    entries of one height array.
    """
    spec = CorrelationSpec(T=T, kind=GramKind.FULL, k=0, l=1)
    # four spacings cover the one-past-the-end partner at any T >= 1000
    margin = 4.0 * TWO_PI / math.log(2.0 * T / TWO_PI)
    gr = gram_range(GramKind.FULL, T, 2.0 * T + margin)
    inside = int(np.searchsorted(gr.ts, 2.0 * T, side="right"))
    if inside < 1 or inside >= len(gr):
        raise DomainError("window too narrow for a consecutive-pair sum")
    z2 = _z2_at(gr.ts, shards, rs_cfg)
    value = blocked_fsum(z2[:inside] * z2[1:inside + 1])
    nu_pair = (int(gr.nus[0]), int(gr.nus[inside - 1]))
    main = correlation_main_term(spec)
    return SumResult(spec=spec, nu_range=nu_pair, value=value, main_term=main,
                     ratio=value / main, point_count=inside)


def alternating_sum(spec: CorrelationSpec, shards: int = 1,
                    rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> SumResult:
    """Parity-signed shifted-product sum on the half grid.

    The sign (-1)^nu only has meaning where consecutive indices advance the
    phase by pi/2, so the full grid is rejected.  main_term carries the
    cancellation envelope (M+1) T ln^4 T rather than a leading term: the
    reported ratio measures how far below the envelope the signed sum sits.
    """
    if spec.kind is not GramKind.HALF:
        raise SpecError("alternating sums are defined on the half grid")
    lo, hi = spec.window
    gr = gram_range(spec.kind, lo, hi)
    if len(gr) == 0:
        raise DomainError("window contains no grid points")
    rho = spacing_from_heights(gr.ts)
    z2k = _z2_at(gr.ts + spec.k * rho, shards, rs_cfg)
    z2l = z2k if spec.l == spec.k else _z2_at(gr.ts + spec.l * rho, shards, rs_cfg)
    signs = np.where(gr.nus % 2 == 0, 1.0, -1.0)
    value = blocked_fsum(signs * z2k * z2l)
    envelope = (spec.M + 1) * spec.window_length * math.log(spec.T) ** 4
    return _result(spec, gr, value, envelope)


def second_moment_discrete(T: float, U: float | None = None, shards: int = 1,
                           rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> SumResult:
    """Sum of Z^2 over full-grid points in [T, T+U]; U defaults to sqrt(T) ln T."""
    if T < WINDOW_T_MIN:
        raise DomainError(f"window start must be >= {WINDOW_T_MIN}")
    if U is None:
        U = math.sqrt(T) * math.log(T)
    spec = CorrelationSpec(T=T, kind=GramKind.FULL, k=0, l=0, U=float(U))
    gr = gram_range(GramKind.FULL, T, T + U)
    if len(gr) == 0:
        raise DomainError("window contains no grid points")
    z2 = _z2_at(gr.ts, shards, rs_cfg)
    value = blocked_fsum(z2)
    main = U * math.log(T) ** 2 / TWO_PI
    return _result(spec, gr, value, main)


def euler_weighted_sum(T: float, N: int, signs: Sequence[int], shards: int = 1,
                       rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> SumResult:
    """Z^2(t_nu) times a sum of Z^2 at N signed spacing multiples of t_nu.

    value = sum over t_nu in [T, 2T] of Z^2(t_nu) * sum_{n<=N} Z^2(t_nu +
    s_n n rho(nu)).  The depth is capped by N^2 <= M+1 with M = floor(ln T),
    keeping every shift inside the usual budget.  The main term scales the
    shift-1 constant by the partial sum of 1/n^2 relative to its full series,
    and is insensitive to the sign choices.
    """
    if T < WINDOW_T_MIN:
        raise DomainError(f"window start must be >= {WINDOW_T_MIN}")
    m_budget = int(math.floor(math.log(T)))
    if N < 1 or N * N > m_budget + 1:
        raise SpecError(f"depth N={N} violates N^2 <= {m_budget + 1}")
    if len(signs) != N or any(s not in (-1, 1) for s in signs):
        raise SpecError("signs must be exactly N entries of +-1")
    spec = CorrelationSpec(T=T, kind=GramKind.FULL, k=0, l=0, M=m_budget)
    gr = gram_range(GramKind.FULL, T, 2.0 * T)
    rho = spacing_from_heights(gr.ts)
    z0 = _z2_at(gr.ts, shards, rs_cfg)
    inner = np.zeros_like(z0)
    for n in range(1, N + 1):
        inner += _z2_at(gr.ts + signs[n - 1] * n * rho, shards, rs_cfg)
    value = blocked_fsum(z0 * inner)
    partial = math.fsum(1.0 / (n * n) for n in range(1, N + 1))
    main = (1.0 / (8.0 * math.pi**3)) * T * math.log(T) ** 5 \
        * partial * 6.0 / math.pi**2
    return _result(spec, gr, value, main)


def biquadratic_local_average(T: float, M: int, shards: int = 1,
                              rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> float:
    """Mean squared local average of Z^2 over M spacing steps.

    For each index nu with g_nu in [T, 2T] (elementary-phase half grid), the
    inner average runs over Z^2(t_nu + n rho(nu)), n = 1..M, on the full grid
    at the same index; the returned value is the mean of the squared inner
    averages.  M must sit in [ceil(ln T), 3 ceil(ln T)].
    """
    if T < WINDOW_T_MIN:
        raise DomainError(f"window start must be >= {WINDOW_T_MIN}")
    lo_m = int(math.ceil(math.log(T)))
    if not lo_m <= M <= 3 * lo_m:
        raise SpecError(f"M={M} outside [{lo_m}, {3 * lo_m}]")
    anchor = gram_range(GramKind.HALF_THETA1, T, 2.0 * T)
    if len(anchor) == 0:
        raise DomainError("window contains no grid points")
    t_full = gram_points(GramKind.FULL, anchor.nus).ts
    rho = spacing_from_heights(t_full)
    inner = np.zeros_like(t_full)
    for n in range(1, M + 1):
        inner += _z2_at(t_full + n * rho, shards, rs_cfg)
    inner /= float(M)
    return blocked_fsum(inner * inner) / float(len(anchor))


@dataclass(frozen=True)
class ProductParts:
    """Exact four-part divisor expansion of one Z^2 * Z^2 product.

    The product at shifted points a = t + k rho, b = t + l rho expands over
    divisor terms into a slowly varying diagonal (shift-difference phases), a
    slow off-diagonal, and two rapidly oscillating parts whose phases carry
    2t ln n and t ln(mn).  total restates their identity with the factored
    cosine sums; product is the Riemann-Siegel value of the same object.
    """

    nu: int
    diagonal_slow: float
    offdiagonal_slow: float
    diagonal_fast: float
    offdiagonal_fast: float
    product: float

    @property
    def total(self) -> float:
        return math.fsum((self.diagonal_slow, self.offdiagonal_slow,
                          self.diagonal_fast, self.offdiagonal_fast))


DECOMPOSITION_CAP = 20000.0


def _cos_sin_sums(x: float, weights: np.ndarray, logs: np.ndarray) -> tuple[float, float]:
    return (blocked_fsum(weights * np.cos(x * logs)),
            blocked_fsum(weights * np.sin(x * logs)))


def z4_product_decomposition(nu: int, k: int, l: int, dtab: DivisorTable,
                             cap: float = DECOMPOSITION_CAP,
                             rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> ProductParts:
    """Split Z^2(t+k rho) Z^2(t+l rho) at half-grid index nu into four sums.

    The two off-diagonal double sums collapse exactly onto products of single
    cosine/sine sums minus their diagonals, so the evaluation is linear in
    the cutoff rather than quadratic.  A cost guard rejects cutoffs beyond
    cap; the divisor table must cover the cutoff.
    """
    t = gram_point(GramKind.HALF, nu).t
    if t < WINDOW_T_MIN:
        raise DomainError("decomposition needs heights >= 1000")
    cutoff = t / TWO_PI
    if cutoff > cap:
        raise CostGuardError(f"cutoff {cutoff:.0f} exceeds the cap {cap:.0f}")
    m = int(math.floor(cutoff))
    dtab.require(1, m)
    rho = float(TWO_PI / math.log(t / TWO_PI))
    a = t + k * rho
    b = t + l * rho

    d = dtab.values(1, m).astype(float)
    n = np.arange(1, m + 1, dtype=float)
    logs = np.log(n)
    w_half = d / np.sqrt(n)        # d(n)/sqrt(n) weights of the single sums
    w_diag = d * d / n             # d^2(n)/n weights of the diagonals

    diag_slow = 2.0 * blocked_fsum(w_diag * np.cos((k - l) * rho * logs))
    diag_fast = 2.0 * blocked_fsum(w_diag * np.cos((2.0 * t + (k + l) * rho) * logs))
    ca, sa = _cos_sin_sums(a, w_half, logs)
    cb, sb = _cos_sin_sums(b, w_half, logs)
    off_slow = 2.0 * (ca * cb + sa * sb) - diag_slow
    off_fast = 2.0 * (ca * cb - sa * sb) - diag_fast

    za, zb = z_many(np.array([a, b]), rs_cfg)
    return ProductParts(nu=int(nu), diagonal_slow=diag_slow,
                        offdiagonal_slow=off_slow, diagonal_fast=diag_fast,
                        offdiagonal_fast=off_fast,
                        product=float(za * za * zb * zb))
