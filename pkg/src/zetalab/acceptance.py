"""The acceptance battery: sixteen criteria, one pass/fail line each.

Structural identities get tight bounds; asymptotic ratio checks get loose,
trend-based bounds because every main term here carries an O(1/ln T)
relative remainder that is still large at desk scale.  Criteria are run in
order with shared fixtures cached across them; nothing is tuned per run
(fixed seed, fixed windows, fixed instances).
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import correlation, divisors, harness, nyquist, oracles
from .gram import GramKind, gram_points, gram_range
from .special import theta, theta1, z_many
from .summation import blocked_fsum

SEED = 20260822

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag} {self.number:2d} {self.title}: {self.detail}"


def _toward_one(ratios) -> bool:
    gaps = [abs(r - 1.0) for r in ratios]
    return all(b <= a for a, b in zip(gaps, gaps[1:]))


class AcceptanceLab:
    """Runs the criteria in order, caching expensive intermediates."""

    def __init__(self, progress=sys.stderr):
        self.progress = progress
        self._cache: dict = {}

    def _note(self, msg: str) -> None:
        if self.progress is not None:
            print(msg, file=self.progress, flush=True)

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    # shared fixtures ------------------------------------------------------

    def divisor_table(self) -> divisors.DivisorTable:
        return self._get("dtab", lambda: divisors.sieve(1, 10_000_000))

    def autocorr(self, T: float, kind: GramKind, k: int, l: int):
        spec = correlation.CorrelationSpec(T=T, kind=kind, k=k, l=l)
        return self._get(("ac", T, kind, k, l),
                         lambda: correlation.autocorrelation_sum(spec))

    def fourth_integral(self, T: float) -> float:
        return self._get(("i4", T), lambda: nyquist.moment_integral(4, T, T))

    # criteria -------------------------------------------------------------

    def c1_gram_residuals(self) -> CriterionResult:
        rng = np.random.default_rng(SEED)
        nus = np.unique(rng.integers(1, 1_000_001, size=1000))
        worsts = []
        for kind in GramKind:
            gr = gram_points(kind, nus)
            phase = theta1(gr.ts) if kind is GramKind.HALF_THETA1 else theta(gr.ts)
            step = math.pi if kind is GramKind.FULL else math.pi / 2.0
            scaled = np.abs(phase - step * gr.nus) / (1.0 + gr.nus)
            worsts.append(float(scaled.max()))
        worst = max(worsts)
        return CriterionResult(1, "grid phase residuals", worst <= 1e-10,
                               f"max |phase-target|/(1+nu) = {worst:.3g} "
                               f"(bound 1e-10, {len(nus)} indices, 3 kinds)")

    def c2_interleaving(self) -> CriterionResult:
        nus = np.arange(1, 100_001)
        full = gram_points(GramKind.FULL, nus).ts
        half = gram_points(GramKind.HALF, 2 * nus).ts
        gap = float(np.abs(full - half).max())
        return CriterionResult(2, "half grid interleaving", gap <= 1e-9,
                               f"max |t_half(2 nu) - t_full(nu)| = {gap:.3g} "
                               "(bound 1e-9, nu <= 1e5)")

    def c3_spacing_law(self) -> CriterionResult:
        nus = np.unique(np.round(np.logspace(math.log10(820), math.log10(2.2e7),
                                             200)).astype(np.int64))
        here = gram_points(GramKind.FULL, nus)
        there = gram_points(GramKind.FULL, nus + 1)
        keep = (here.ts >= 1e3) & (here.ts <= 1e7)
        ts = here.ts[keep]
        rho = TWO_PI / np.log(ts / TWO_PI)
        metric = np.abs(there.ts[keep] - ts - rho) * ts * np.log(ts)
        worst = float(metric.max())
        return CriterionResult(3, "spacing law", worst <= 10.0,
                               f"max |gap - rho| t ln t = {worst:.3g} "
                               f"(bound 10, {keep.sum()} samples in [1e3,1e7])")

    def c4_z_oracle(self) -> CriterionResult:
        rng = np.random.default_rng(SEED + 4)
        ts = rng.uniform(50.0, 5000.0, size=100)
        fast = z_many(ts)
        slow = np.array([oracles.z_reference(t) for t in ts])
        worst = float(np.abs(fast - slow).max())
        return CriterionResult(4, "Z against slow oracle", worst <= 1e-4,
                               f"max |z - oracle| = {worst:.3g} "
                               "(bound 1e-4, 100 points in [50,5000])")

    def c5_divisor_exactness(self) -> CriterionResult:
        dtab = self.divisor_table()
        rng = np.random.default_rng(SEED + 5)
        ns = np.unique(rng.integers(1, 10_000_001, size=10_000))
        bad = 0
        for n in ns:
            n = int(n)
            r = math.isqrt(n)
            i = np.arange(1, r + 1)
            count = 2 * int(np.count_nonzero(n % i == 0)) - (r * r == n)
            if count != int(dtab.d[n - dtab.lo]):
                bad += 1
        d10 = int(np.sum(dtab.d[:10].astype(np.int64) ** 2))
        ok = bad == 0 and d10 == 83
        return CriterionResult(5, "divisor sieve exactness", ok,
                               f"{bad} mismatches in {len(ns)} trials; "
                               f"sum d^2 up to 10 = {d10} (want 83)")

    def c6_divisor_cosine(self) -> CriterionResult:
        dtab = self.divisor_table()
        worst = 0.0
        for x in (1e4, 1e5, 1e6):
            bound = 5.0 * math.log(x) ** 3
            for d in (1, 2, 3):
                alpha = TWO_PI * d / math.log(x)
                s = divisors.divisor_cosine_sum(x, alpha, dtab)
                f = divisors.divisor_cosine_main_term(x, alpha) / math.pi ** 2
                worst = max(worst, abs(s - f) / bound)
        h = divisors.divisor_cosine_sum(1e6, 0.0, dtab)
        norm = h * 4.0 * math.pi ** 2 / math.log(1e6) ** 4
        ok = worst <= 1.0 and 0.7 <= norm <= 1.6
        return CriterionResult(6, "divisor cosine sums", ok,
                               f"max err/(5 ln^3 x) = {worst:.3f}; "
                               f"normalized zero-shift sum = {norm:.4f} "
                               "(band [0.7,1.6])")

    def c7_titchmarsh_ladder(self) -> CriterionResult:
        ratios = []
        for T in (1e3, 1e4, 1e5):
            r = self._get(("titch", T), lambda T=T: correlation.titchmarsh_sum(T))
            ratios.append(r.ratio)
        trend = _toward_one(ratios)
        final = abs(ratios[-1] - 1.0) <= 0.5
        text = ", ".join(f"{r:.4f}" for r in ratios)
        return CriterionResult(7, "adjacent-pair ladder", trend and final,
                               f"ratios [{text}]; toward 1: {trend}; "
                               f"|final-1| = {abs(ratios[-1]-1):.3f} (bound 0.5)")

    def c8_shift_structure(self) -> CriterionResult:
        scaled = []
        hf = []
        for d in (1, 2, 3):
            full = self.autocorr(1e5, GramKind.FULL, 0, d)
            half = self.autocorr(1e5, GramKind.HALF, 0, d)
            scaled.append(full.ratio)  # main term already carries 1/d^2
            hf.append(half.value / full.value)
        spread = max(scaled) / min(scaled)
        gmean = math.exp(sum(math.log(r) for r in hf) / len(hf))
        ok = spread <= 1.3 and 1.6 <= gmean <= 2.4
        text = ", ".join(f"{r:.4f}" for r in scaled)
        return CriterionResult(8, "shift-squared law and doubling", ok,
                               f"d^2-scaled ratios [{text}], spread {spread:.3f} "
                               f"(bound 1.3); half/full gmean {gmean:.3f} "
                               "(band [1.6,2.4])")

    def c9_fourth_moment_discrete(self) -> CriterionResult:
        ratios = [self.autocorr(T, GramKind.FULL, 0, 0).ratio
                  for T in (1e3, 1e4, 1e5)]
        trend = _toward_one(ratios)
        final = abs(ratios[-1] - 1.0) <= 0.5
        text = ", ".join(f"{r:.4f}" for r in ratios)
        return CriterionResult(9, "discrete fourth moment ladder",
                               trend and final,
                               f"ratios [{text}]; toward 1: {trend}; "
                               f"|final-1| = {abs(ratios[-1]-1):.3f} (bound 0.5)")

    def c10_continuous_moments(self) -> CriterionResult:
        r4 = []
        for T in (1e3, 1e4, 1e5):
            main = T * math.log(T) ** 4 / (2.0 * math.pi ** 2)
            r4.append(self.fourth_integral(T) / main)
        T = 1e5
        U = math.sqrt(T) * math.log(T)
        r2 = nyquist.moment_integral(2, T, U) / (U * math.log(T))
        ok = (_toward_one(r4) and abs(r4[-1] - 1.0) <= 0.35
              and abs(r2 - 1.0) <= 0.3)
        text = ", ".join(f"{r:.4f}" for r in r4)
        return CriterionResult(10, "continuous moment ladders", ok,
                               f"fourth [{text}] (final bound 0.35); "
                               f"second {r2:.4f} (bound 0.3)")

    def c11_effect_ratios(self) -> CriterionResult:
        quad = [nyquist.quadratic_effect_ratio(T) for T in (1e3, 1e4, 1e5)]
        biq = []
        for T in (1e3, 1e4, 1e5):
            disc = self.autocorr(T, GramKind.FULL, 0, 0)
            biq.append(self.fourth_integral(T)
                       / (TWO_PI / math.log(T) * disc.value))
        ok = (0.8 <= quad[-1] <= 1.2 and 0.8 <= biq[-1] <= 1.2
              and _toward_one(quad) and _toward_one(biq))
        qt = ", ".join(f"{r:.4f}" for r in quad)
        bt = ", ".join(f"{r:.4f}" for r in biq)
        return CriterionResult(11, "sampling effect ratios", ok,
                               f"quadratic [{qt}], biquadratic [{bt}] "
                               "(final band [0.8,1.2], both monotone toward 1)")

    def c12_cardinal_series(self) -> CriterionResult:
        T = 1e5
        spacing = TWO_PI / math.log(T / TWO_PI)
        span = 1999.5 * spacing
        errors = {}
        for trunc in (16, 32, 64):
            spec = nyquist.CardinalSpec(T=T, span=span, truncation=trunc)
            samples = nyquist.cardinal_samples(spec)
            lo, hi = trunc, len(samples) - trunc - 1
            mids = T + spacing * (np.arange(lo, hi) + 0.5)
            rec = np.array([nyquist.cardinal_reconstruct(spec, t)
                            for t in mids])
            true = z_many(mids)
            errors[trunc] = math.sqrt(blocked_fsum((rec - true) ** 2)
                                      / blocked_fsum(true * true))
        spec = nyquist.CardinalSpec(T=T, span=span)
        samples = nyquist.cardinal_samples(spec)
        exact = nyquist.cardinal_reconstruct(spec, T + 700 * spec.spacing)
        exact_ok = exact == samples[700]
        energy = nyquist.cardinal_energy_ratio(spec)
        mono = errors[16] > errors[32] > errors[64]
        ok = (exact_ok and errors[64] <= 0.1 and 0.8 <= energy <= 1.2
              and mono)
        return CriterionResult(12, "cardinal reconstruction", ok,
                               f"sample-point exact: {exact_ok}; midpoint rms "
                               f"{errors[16]:.3f}/{errors[32]:.3f}/{errors[64]:.3f} "
                               f"for truncation 16/32/64 (final bound 0.1, "
                               f"monotone: {mono}); energy {energy:.4f} "
                               "(band [0.8,1.2])")

    def c13_alternating(self) -> CriterionResult:
        rats = []
        for k, l in ((0, 0), (0, 1)):
            spec = correlation.CorrelationSpec(T=1e5, kind=GramKind.HALF,
                                               k=k, l=l)
            alt = correlation.alternating_sum(spec).value
            non = self.autocorr(1e5, GramKind.HALF, k, l).value
            rats.append(abs(alt) / abs(non))
        ok = all(r <= 0.5 for r in rats)
        return CriterionResult(13, "alternating-sign cancellation", ok,
                               f"|alt|/|plain| = {rats[0]:.4f}, {rats[1]:.4f} "
                               "(bound 0.5)")

    def c14_decomposition_means(self) -> CriterionResult:
        # fixed protocol: widest window under the default cost cap, 200
        # systematically spaced indices, shift pair (0, 1)
        gr = gram_range(GramKind.HALF, 1e5, TWO_PI * correlation.DECOMPOSITION_CAP)
        picks = gr.nus[np.unique(np.linspace(0, len(gr.nus) - 1, 200)
                                 .round().astype(int))]
        dtab = divisors.sieve(1, int(correlation.DECOMPOSITION_CAP) + 1)
        parts = [correlation.z4_product_decomposition(int(nu), 0, 1, dtab)
                 for nu in picks]
        s1 = float(np.mean([p.diagonal_slow for p in parts]))
        s2 = float(np.mean([p.offdiagonal_slow for p in parts]))
        s3 = float(np.mean([p.diagonal_fast for p in parts]))
        s4 = float(np.mean([p.offdiagonal_fast for p in parts]))
        bound = 0.2 * s1
        ok = all(abs(v) <= bound for v in (s2, s3, s4))
        return CriterionResult(14, "slow-part dominance", ok,
                               f"means S1..S4 = {s1:.1f}, {s2:.1f}, {s3:.1f}, "
                               f"{s4:.1f}; bound 0.2 S1 = {bound:.1f} "
                               f"({len(parts)} indices near 1e5)")

    def c15_euler_and_local_average(self) -> CriterionResult:
        ladder = []
        for T, N in ((1e3, 2), (1e4, 3), (1e5, 3)):
            r = correlation.euler_weighted_sum(T, N, [1] * N)
            ladder.append(r.ratio)
        trend = (abs(ladder[-1] - 1.0) <= abs(ladder[0] - 1.0)
                 and abs(ladder[-1] - 1.0) <= 0.5)
        plus = correlation.euler_weighted_sum(1e5, 3, [1, 1, 1]).value
        minus = correlation.euler_weighted_sum(1e5, 3, [-1, -1, -1]).value
        flip = abs(plus - minus) / abs(plus)
        T = 1e5
        l4 = math.log(T) ** 4
        norms = {}
        vals = {}
        for M in (12, 24):
            vals[M] = correlation.biquadratic_local_average(T, M)
            norms[M] = vals[M] * math.pi * M / l4
        envelope = all(0.5 <= n <= 2.0 for n in norms.values())
        scaling = abs(vals[24] / vals[12] / 0.5 - 1.0) <= 0.3
        ok = trend and flip <= 0.1 and envelope and scaling
        lt = ", ".join(f"{r:.4f}" for r in ladder)
        return CriterionResult(15, "Euler weights and local averages", ok,
                               f"ladder [{lt}] (net toward 1: {trend}); "
                               f"sign flip {flip:.4f} (bound 0.1); normalized "
                               f"averages M=12: {norms[12]:.4f}, M=24: "
                               f"{norms[24]:.4f} (band [0.5,2]); halving check "
                               f"{vals[24]/vals[12]:.4f} (want 0.5 pm 30%)")

    def c16_determinism(self) -> CriterionResult:
        texts = []
        for shards in (1, 4, 8):
            rows = harness.ladder_suite(shards=shards, progress=None)
            texts.append(harness.strip_timing(harness.rows_to_csv(rows)))
        ok = texts[0] == texts[1] == texts[2]
        return CriterionResult(16, "shard determinism", ok,
                               "value columns byte-identical across shard "
                               f"counts 1/4/8: {ok} "
                               f"({len(texts[0].splitlines()) - 1} rows)")

    def run(self) -> list[CriterionResult]:
        steps = [self.c1_gram_residuals, self.c2_interleaving,
                 self.c3_spacing_law, self.c4_z_oracle,
                 self.c5_divisor_exactness, self.c6_divisor_cosine,
                 self.c7_titchmarsh_ladder, self.c8_shift_structure,
                 self.c9_fourth_moment_discrete, self.c10_continuous_moments,
                 self.c11_effect_ratios, self.c12_cardinal_series,
                 self.c13_alternating, self.c14_decomposition_means,
                 self.c15_euler_and_local_average, self.c16_determinism]
        results = []
        for step in steps:
            t0 = time.monotonic()
            res = step()
            results.append(res)
            self._note(f"{res.line()}  [{time.monotonic() - t0:.1f}s]")
        return results


def run_acceptance(progress=sys.stderr) -> tuple[list[CriterionResult], bool]:
    lab = AcceptanceLab(progress=progress)
    results = lab.run()
    passed = sum(r.passed for r in results)
    if progress is not None:
        print(f"{passed}/{len(results)} criteria passed", file=progress,
              flush=True)
    return results, passed == len(results)
