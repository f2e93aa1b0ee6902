"""Continuous moments and sampling-theorem checks for Z.

The integrals resolve Z's fastest oscillation (about ln(t/2pi)/2 radians per
unit t) with fixed-order Gauss-Legendre panels a small fraction of that
period wide, and the cardinal-series side treats Z as approximately
band-limited with bandwidth ln(T/2pi)/(4pi) cycles, giving the uniform
sample step 2pi/ln(T/2pi).  Everything reduces through the deterministic
blocked pipeline (shard counts never change values).
"""

from __future__ import annotations

import math
import threading
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .correlation import CorrelationSpec, autocorrelation_sum, second_moment_discrete
from .errors import DomainError, EdgeError, SpecError
from .special import DEFAULT_RS, RiemannSiegelConfig, z_many
from .summation import blocked_fsum, run_sharded

TWO_PI = 2.0 * math.pi

T_MIN = 1000.0

# Panel widths track the local oscillation period; segments this close to
# geometric keep the tracking within 2% without per-panel log evaluations.
_SEGMENT_RATIO = 1.02


@dataclass(frozen=True)
class QuadratureConfig:
    """Panel sizing for oscillation-resolving quadrature.

    panel_fraction is the panel width as a fraction of the local period
    2pi/ln(t/2pi) of Z's fastest component; at most 1/4 so every period
    spans four or more panels.  rule_order is the Gauss-Legendre point
    count per panel.
    """

    panel_fraction: float = 0.125
    rule_order: int = 8

    def __post_init__(self):
        if not 0.0 < self.panel_fraction <= 0.25:
            raise SpecError("panel_fraction must lie in (0, 1/4]")
        if self.rule_order < 2:
            raise SpecError("rule_order must be at least 2")


DEFAULT_QUAD = QuadratureConfig()


@lru_cache(maxsize=8)
def _gauss_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def _quadrature_grid(T: float, U: float,
                     cfg: QuadratureConfig) -> tuple[np.ndarray, np.ndarray]:
    """All nodes and weights over [T, T+U], ordered left to right."""
    xg, wg = _gauss_rule(cfg.rule_order)
    nodes = []
    weights = []
    s0 = T
    end = T + U
    while s0 < end:
        s1 = min(s0 * _SEGMENT_RATIO, end)
        target = cfg.panel_fraction * TWO_PI / math.log(s1 / TWO_PI)
        count = max(1, int(math.ceil((s1 - s0) / target)))
        h = (s1 - s0) / count
        # panel k covers s0 + [k, k+1) h; map the rule onto each panel
        starts = s0 + h * np.arange(count)
        pts = starts[:, None] + (0.5 * h) * (xg[None, :] + 1.0)
        nodes.append(pts.ravel())
        weights.append(np.broadcast_to(0.5 * h * wg, (count, len(wg))).ravel())
        s0 = s1
    return np.concatenate(nodes), np.concatenate(weights)


def moment_integral(power: int, T: float, U: float,
                    cfg: QuadratureConfig = DEFAULT_QUAD, shards: int = 1,
                    rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> float:
    """Composite quadrature of Z^power over [T, T+U]; power is 2 or 4."""
    if power not in (2, 4):
        raise SpecError("power must be 2 or 4")
    if T < T_MIN:
        raise DomainError(f"integration start must be >= {T_MIN}")
    if not U > 0:
        raise DomainError("integration length must be positive")
    nodes, weights = _quadrature_grid(T, U, cfg)
    z2 = np.empty_like(nodes)

    def fill(i0: int, i1: int) -> None:
        np.square(z_many(nodes[i0:i1], rs_cfg), out=z2[i0:i1])

    run_sharded(len(nodes), shards, fill)
    integrand = weights * z2 if power == 2 else weights * z2 * z2
    return blocked_fsum(integrand)


def quadratic_effect_ratio(T: float, U: float | None = None, shards: int = 1,
                           cfg: QuadratureConfig = DEFAULT_QUAD,
                           rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> float:
    """Integral of Z^2 against its grid-sum surrogate (2pi/ln T) sum Z^2(t_nu).

    Both sides live on [T, T+U]; U defaults to sqrt(T) ln T.  The ratio
    tends to 1; a window shorter than one grid gap is allowed but flagged,
    since the denominator then rests on a single summand.
    """
    if U is None:
        U = math.sqrt(T) * math.log(T)
    if U < TWO_PI / math.log(T / TWO_PI):
        warnings.warn("window shorter than one grid gap; ratio rests on one term",
                      stacklevel=2)
    discrete = second_moment_discrete(T, U, shards=shards, rs_cfg=rs_cfg)
    integral = moment_integral(2, T, U, cfg, shards=shards, rs_cfg=rs_cfg)
    return integral / (TWO_PI / math.log(T) * discrete.value)


def biquadratic_effect_ratio(T: float, shards: int = 1,
                             cfg: QuadratureConfig = DEFAULT_QUAD,
                             rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> float:
    """Integral of Z^4 over [T, 2T] against (2pi/ln T) times the grid sum."""
    discrete = autocorrelation_sum(CorrelationSpec(T=T), shards=shards,
                                   rs_cfg=rs_cfg)
    integral = moment_integral(4, T, T, cfg, shards=shards, rs_cfg=rs_cfg)
    return integral / (TWO_PI / math.log(T) * discrete.value)


@dataclass(frozen=True)
class CardinalSpec:
    """Uniform sampling window for the cardinal (sinc) series.

    w is the bandwidth ln(T/2pi)/(4pi) in cycles per unit t, fixed by the
    window start; the sample step is 1/(2w) = 2pi/ln(T/2pi).  truncation
    is the number of sinc terms kept on each side of the target point.
    """

    T: float
    span: float
    truncation: int = 64
    w: float = 0.0  # derived; any passed value is overwritten

    def __post_init__(self):
        if self.T < T_MIN:
            raise DomainError(f"window start must be >= {T_MIN}")
        if not self.span > 0:
            raise DomainError("span must be positive")
        if self.truncation < 16:
            raise SpecError("truncation must be at least 16")
        object.__setattr__(self, "w", math.log(self.T / TWO_PI) / (2.0 * TWO_PI))

    @property
    def spacing(self) -> float:
        return 1.0 / (2.0 * self.w)

    @property
    def sample_count(self) -> int:
        return int(math.floor(self.span / self.spacing)) + 1


# sample grids are expensive; keep a few recent ones
_grid_lock = threading.Lock()
_grid_cache: dict[tuple, np.ndarray] = {}


def cardinal_samples(spec: CardinalSpec, shards: int = 1,
                     rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> np.ndarray:
    """Z on the spec's uniform grid (cached per spec and evaluator)."""
    key = (spec, rs_cfg)
    with _grid_lock:
        hit = _grid_cache.get(key)
    if hit is not None:
        return hit
    ts = spec.T + spec.spacing * np.arange(spec.sample_count)
    out = np.empty_like(ts)

    def fill(i0: int, i1: int) -> None:
        out[i0:i1] = z_many(ts[i0:i1], rs_cfg)

    run_sharded(len(ts), shards, fill)
    out.setflags(write=False)
    with _grid_lock:
        if len(_grid_cache) >= 8:
            _grid_cache.pop(next(iter(_grid_cache)))
        _grid_cache[key] = out
    return out


SNAP_TOL = 1e-9  # in units of the sample spacing


def cardinal_reconstruct(spec: CardinalSpec, t: float, shards: int = 1,
                         rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> float:
    """Truncated sinc interpolation of Z at t from the spec's samples.

    On a sample point (to within SNAP_TOL spacings) the sample value is
    returned exactly.  Elsewhere the kernel needs `truncation` whole
    samples on each side; points too close to the window edge raise.
    """
    samples = cardinal_samples(spec, shards=shards, rs_cfg=rs_cfg)
    u = (t - spec.T) / spec.spacing
    if u < 0 or u > len(samples) - 1:
        raise EdgeError("target lies outside the sampling window")
    nearest = int(round(u))
    if abs(u - nearest) < SNAP_TOL:
        return float(samples[nearest])
    left = int(math.floor(u))
    lo = left - spec.truncation + 1
    hi = left + spec.truncation  # inclusive
    if lo < 0 or hi > len(samples) - 1:
        raise EdgeError("truncation window exits the sampled span")
    n = np.arange(lo, hi + 1)
    return float(np.sum(samples[lo:hi + 1] * np.sinc(u - n)))


def cardinal_energy_ratio(spec: CardinalSpec, shards: int = 1,
                          cfg: QuadratureConfig = DEFAULT_QUAD,
                          rs_cfg: RiemannSiegelConfig = DEFAULT_RS) -> float:
    """Integral of Z^2 over the window against its sample-energy surrogate.

    The surrogate is spacing times the sum of squared samples; for a
    band-limited signal the two agree, and for Z the ratio sits near 1.
    """
    samples = cardinal_samples(spec, shards=shards, rs_cfg=rs_cfg)
    length = spec.spacing * (len(samples) - 1)
    integral = moment_integral(2, spec.T, length, cfg, shards=shards,
                               rs_cfg=rs_cfg)
    discrete = spec.spacing * blocked_fsum(samples * samples)
    return integral / discrete
