"""Batch experiment runner: ladders over T, CSV emission, plot data.

Every experiment produces one ConvergenceRow per ladder height; rows go to
a CSV whose value columns are bit-identical across shard counts and runs
(wall_seconds is the only nondeterministic column).  Progress goes to
stderr so stdout can carry the CSV itself.
"""

from __future__ import annotations

import io
import math
import sys
import time
from dataclasses import dataclass, fields

import numpy as np

from . import correlation, divisors, nyquist
from .errors import ConfigError
from .gram import GramKind, gram_range
from .special import theta, theta1
from .summation import blocked_fsum

EXPERIMENTS = ("gram", "titchmarsh", "autocorr", "alternating", "moment4",
               "moment2", "nyquist", "cardinal", "euler", "hl-effect",
               "decompose", "acceptance")

CSV_HEADER = "experiment,T,point_count,value,main_term,ratio,wall_seconds"

_KINDS = {k.value: k for k in GramKind}


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    T_ladder: tuple[float, ...] = (1e3, 1e4, 1e5)
    k: int = 0
    l: int = 1
    M: int | None = None
    N: int = 2
    kind: GramKind = GramKind.FULL
    seed: int = 42
    shards: int = 1
    out_path: str = ""

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"experiment: unknown name {self.experiment!r}")
        if not self.T_ladder:
            raise ConfigError("T_ladder: must not be empty")
        if any(b <= a for a, b in zip(self.T_ladder, self.T_ladder[1:])):
            raise ConfigError("T_ladder: heights must be strictly ascending")
        if self.shards < 1:
            raise ConfigError("shards: must be a positive integer")
        if not isinstance(self.kind, GramKind):
            raise ConfigError(f"kind: not a grid kind: {self.kind!r}")


@dataclass(frozen=True)
class ConvergenceRow:
    experiment: str
    T: float
    point_count: int
    value: float
    main_term: float
    ratio: float
    wall_seconds: float


def _fmt(x: float) -> str:
    return "%.17g" % x


def format_row(row: ConvergenceRow) -> str:
    return ",".join([row.experiment, _fmt(row.T), str(row.point_count),
                     _fmt(row.value), _fmt(row.main_term), _fmt(row.ratio),
                     _fmt(row.wall_seconds)])


# ---------------------------------------------------------------- experiments

def _run_gram(cfg: ExperimentConfig, T: float) -> tuple[int, float, float]:
    """Worst phase residual over the window, scaled by the index budget."""
    gr = gram_range(cfg.kind, T, 2.0 * T)
    phase = theta1(gr.ts) if cfg.kind is GramKind.HALF_THETA1 else theta(gr.ts)
    step = math.pi if cfg.kind is GramKind.FULL else math.pi / 2.0
    scaled = np.abs(phase - step * gr.nus) / (1.0 + gr.nus)
    return len(gr.nus), float(scaled.max()), 1e-10


def _run_decompose(cfg: ExperimentConfig, T: float) -> tuple[int, float, float]:
    """Mean divisor-model total against the mean measured Z^2 Z^2 product.

    The window stays narrow so the cutoff t/2pi respects the default cost
    cap; past it the decomposition refuses and the refusal surfaces.
    """
    count = 50
    gr = gram_range(GramKind.HALF, T, 1.25 * T)
    rng = np.random.default_rng(cfg.seed)
    picks = np.sort(rng.choice(gr.nus, size=min(count, len(gr.nus)),
                               replace=False))
    dtab = divisors.sieve(1, int(1.25 * T / (2.0 * math.pi)) + 2)
    totals, products = [], []
    for nu in picks:
        parts = correlation.z4_product_decomposition(int(nu), cfg.k, cfg.l,
                                                     dtab)
        totals.append(parts.total)
        products.append(parts.product)
    return len(picks), float(np.mean(totals)), float(np.mean(products))


def _run_one(cfg: ExperimentConfig, T: float) -> ConvergenceRow:
    t0 = time.monotonic()
    shards = cfg.shards
    if cfg.experiment == "gram":
        count, value, main = _run_gram(cfg, T)
    elif cfg.experiment == "titchmarsh":
        r = correlation.titchmarsh_sum(T, shards=shards)
        count, value, main = r.point_count, r.value, r.main_term
    elif cfg.experiment == "autocorr":
        spec = correlation.CorrelationSpec(T=T, kind=cfg.kind, k=cfg.k,
                                           l=cfg.l, M=cfg.M)
        r = correlation.autocorrelation_sum(spec, shards=shards)
        count, value, main = r.point_count, r.value, r.main_term
    elif cfg.experiment == "alternating":
        spec = correlation.CorrelationSpec(T=T, kind=GramKind.HALF, k=cfg.k,
                                           l=cfg.l, M=cfg.M)
        r = correlation.alternating_sum(spec, shards=shards)
        count, value, main = r.point_count, r.value, r.main_term
    elif cfg.experiment == "moment4":
        value = nyquist.moment_integral(4, T, T, shards=shards)
        main = T * math.log(T) ** 4 / (2.0 * math.pi ** 2)
        count = len(nyquist._quadrature_grid(T, T, nyquist.DEFAULT_QUAD)[0])
    elif cfg.experiment == "moment2":
        U = math.sqrt(T) * math.log(T)
        value = nyquist.moment_integral(2, T, U, shards=shards)
        main = U * math.log(T)
        count = len(nyquist._quadrature_grid(T, U, nyquist.DEFAULT_QUAD)[0])
    elif cfg.experiment == "nyquist":
        U = math.sqrt(T) * math.log(T)
        disc = correlation.second_moment_discrete(T, U, shards=shards)
        value = nyquist.moment_integral(2, T, U, shards=shards)
        main = 2.0 * math.pi / math.log(T) * disc.value
        count = disc.point_count
    elif cfg.experiment == "cardinal":
        spec = nyquist.CardinalSpec(T=T, span=1999.5 * (2.0 * math.pi)
                                    / math.log(T / (2.0 * math.pi)))
        samples = nyquist.cardinal_samples(spec, shards=shards)
        lo, hi = spec.truncation, len(samples) - spec.truncation - 1
        mids = spec.T + spec.spacing * (np.arange(lo, hi) + 0.5)
        rec = np.array([nyquist.cardinal_reconstruct(spec, t) for t in mids])
        true = correlation.z_many(mids)
        value = math.sqrt(blocked_fsum((rec - true) ** 2)
                          / blocked_fsum(true * true))
        main = 0.1
        count = len(mids)
    elif cfg.experiment == "euler":
        r = correlation.euler_weighted_sum(T, cfg.N, [1] * cfg.N,
                                           shards=shards)
        count, value, main = r.point_count, r.value, r.main_term
    elif cfg.experiment == "hl-effect":
        M = cfg.M if cfg.M is not None else int(math.ceil(math.log(T)))
        value = correlation.biquadratic_local_average(T, M, shards=shards)
        main = math.log(T) ** 4 / (math.pi * M)
        count = len(gram_range(GramKind.HALF_THETA1, T, 2.0 * T).nus)
    elif cfg.experiment == "decompose":
        count, value, main = _run_decompose(cfg, T)
    else:
        raise ConfigError(f"experiment: {cfg.experiment} is not a ladder "
                          "experiment")
    ratio = value / main if main != 0.0 else math.nan
    return ConvergenceRow(cfg.experiment, T, count, value, main, ratio,
                          time.monotonic() - t0)


def run(config: ExperimentConfig, progress=sys.stderr) -> list[ConvergenceRow]:
    """One row per ladder height, streamed to config.out_path when set."""
    if config.experiment == "acceptance":
        raise ConfigError("experiment: acceptance runs through its own "
                          "entry point, not the ladder runner")
    rows: list[ConvergenceRow] = []
    sink = open(config.out_path, "w") if config.out_path else None
    try:
        if sink:
            print(CSV_HEADER, file=sink, flush=True)
        for T in config.T_ladder:
            row = _run_one(config, T)
            rows.append(row)
            if sink:
                print(format_row(row), file=sink, flush=True)
            if progress is not None:
                print(f"  {row.experiment} T={T:g} ratio={row.ratio:.4f} "
                      f"({row.wall_seconds:.1f}s)", file=progress)
    finally:
        if sink:
            sink.close()
    return rows


def rows_to_csv(rows: list[ConvergenceRow]) -> str:
    buf = io.StringIO()
    print(CSV_HEADER, file=buf)
    for row in rows:
        print(format_row(row), file=buf)
    return buf.getvalue()


def strip_timing(csv_text: str) -> str:
    """Drop the wall_seconds column; what remains is the deterministic part."""
    lines = csv_text.strip().split("\n")
    return "\n".join(",".join(ln.split(",")[:-1]) for ln in lines)


def emit_plot_data(rows: list[ConvergenceRow], out_path: str) -> list[str]:
    """Two-column (ln T, ratio) files, one per experiment name in rows."""
    if not rows:
        raise ConfigError("rows: nothing to plot")
    names = []
    by_exp: dict[str, list[ConvergenceRow]] = {}
    for row in rows:
        by_exp.setdefault(row.experiment, []).append(row)
    for exp, group in by_exp.items():
        path = f"{out_path}.{exp}.dat" if len(by_exp) > 1 else out_path
        with open(path, "w") as fh:
            for row in sorted(group, key=lambda r: r.T):
                print(f"{math.log(row.T):.10f} {row.ratio:.10f}", file=fh)
        names.append(path)
    return names


def ladder_suite(shards: int = 1, heights: tuple[float, ...] = (1e3, 1e4),
                 progress=sys.stderr) -> list[ConvergenceRow]:
    """The fixed battery run at several shard counts by the determinism check."""
    rows: list[ConvergenceRow] = []
    battery = ["gram", "titchmarsh", "autocorr", "alternating", "moment2",
               "moment4", "nyquist", "euler", "hl-effect", "decompose"]
    for name in battery:
        cfg = ExperimentConfig(experiment=name, T_ladder=heights,
                               shards=shards)
        rows.extend(run(cfg, progress=progress))
    return rows


# ---------------------------------------------------------- config-file layer

_INT_KEYS = {"k", "l", "M", "N", "seed", "shards"}


def parse_config_text(text: str, base: dict | None = None) -> dict:
    """Flat key = value lines into a config dict; unknown keys are errors."""
    known = {f.name for f in fields(ExperimentConfig)}
    out = dict(base or {})
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, _, val = (s.strip() for s in line.partition("="))
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        out[key] = val
    return out


def build_config(raw: dict) -> ExperimentConfig:
    """Typed ExperimentConfig from string-or-typed values, with field names
    in every complaint."""
    kw: dict = {}
    for key, val in raw.items():
        if val is None:
            continue
        if key == "T_ladder":
            if isinstance(val, str):
                try:
                    val = tuple(float(s) for s in val.split(",") if s.strip())
                except ValueError:
                    raise ConfigError(f"T_ladder: not a number list: {val!r}")
            kw[key] = tuple(val)
        elif key in _INT_KEYS:
            try:
                kw[key] = int(val)
            except (TypeError, ValueError):
                raise ConfigError(f"{key}: not an integer: {val!r}")
        elif key == "kind":
            name = val.value if isinstance(val, GramKind) else str(val)
            if name not in _KINDS:
                raise ConfigError(f"kind: unknown grid kind {name!r}; "
                                  f"choose from {sorted(_KINDS)}")
            kw[key] = _KINDS[name]
        else:
            kw[key] = val
    if "experiment" not in kw:
        raise ConfigError("experiment: required")
    return ExperimentConfig(**kw)
