"""Divisor-count sieve, cumulative sums, and the oscillatory main term.

The sieve extracts prime exponents with strided slice arithmetic per block,
so memory stays within a configurable budget while d(n) is exact over
ranges up to 1e9.  All float reductions go through the fixed-block exact
accumulation from the summation module, aligned to n = 1, which makes every
cumulative quantity bit-identical under any blocking.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityError, DomainError, TableTooSmallError
from .summation import BLOCK, block_partials, blocked_fsum

MONOLITHIC_CAP = 10**8  # entries; larger requests must stream blocks

_MAGIC = b"ZDTB"
_VERSION = 1


@dataclass(frozen=True)
class DivisorTable:
    """Immutable d(n) for lo <= n <= hi (inclusive), entries uint16."""

    lo: int
    hi: int
    d: np.ndarray

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def require(self, lo: int, hi: int) -> None:
        if lo < self.lo or hi > self.hi:
            raise TableTooSmallError(
                f"table covers [{self.lo}, {self.hi}], need [{lo}, {hi}]")

    def values(self, lo: int, hi: int) -> np.ndarray:
        """View of d(n) for lo <= n <= hi."""
        self.require(lo, hi)
        return self.d[lo - self.lo: hi - self.lo + 1]

    def count(self, n: int) -> int:
        self.require(n, n)
        return int(self.d[n - self.lo])


def _primes_upto(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p:: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def _block_counts(lo: int, hi: int, primes: np.ndarray) -> np.ndarray:
    """Exact d(n) on [lo, hi] inclusive via per-prime exponent extraction."""
    size = hi - lo + 1
    rem = np.arange(lo, hi + 1, dtype=np.int64)
    d = np.ones(size, dtype=np.uint16)
    expo = np.empty(size, dtype=np.uint16)
    for p in primes:
        p = int(p)
        if p * p > hi:
            break
        expo[:] = 0
        q = p
        while q <= hi:
            start = ((lo + q - 1) // q) * q
            if start > hi:
                break
            expo[start - lo:: q] += 1
            rem[start - lo:: q] //= p
            if q > hi // p:
                break
            q *= p
        touched = expo > 0
        d[touched] *= expo[touched] + 1
    # whatever remains is a single prime factor above sqrt(hi)
    d[rem > 1] *= 2
    return d


def _block_len(memory_budget_mb: float) -> int:
    # residue, exponent, and downstream float arrays together cost ~40 B/entry
    entries = int(memory_budget_mb * 2**20 // 48)
    return max(BLOCK, (entries // BLOCK) * BLOCK)


def sieve_blocks(lo: int, hi: int, block_len: int | None = None,
                 memory_budget_mb: float = 256.0) -> Iterator[DivisorTable]:
    """Stream DivisorTable pieces covering [lo, hi] in ascending order.

    Block boundaries are multiples of the reduction block size away from lo,
    so downstream fixed-block accumulations never straddle a piece.
    """
    if not 1 <= lo <= hi:
        raise DomainError("sieve requires 1 <= lo <= hi")
    if hi > 10**9:
        raise DomainError("sieve supports ranges up to 1e9")
    if block_len is None:
        block_len = _block_len(memory_budget_mb)
    else:
        block_len = max(BLOCK, (block_len // BLOCK) * BLOCK)
    primes = _primes_upto(math.isqrt(hi))
    for start in range(lo, hi + 1, block_len):
        end = min(start + block_len - 1, hi)
        yield DivisorTable(start, end, _block_counts(start, end, primes))


def sieve(lo: int, hi: int, memory_budget_mb: float = 256.0) -> DivisorTable:
    """One materialized table; for > 1e8 entries use sieve_blocks instead."""
    if not 1 <= lo <= hi:
        raise DomainError("sieve requires 1 <= lo <= hi")
    entries = hi - lo + 1
    if entries > MONOLITHIC_CAP:
        raise CapacityError(
            f"{entries} entries exceed the monolithic cap {MONOLITHIC_CAP}; "
            "stream with sieve_blocks")
    d = np.empty(entries, dtype=np.uint16)
    for piece in sieve_blocks(lo, hi, memory_budget_mb=memory_budget_mb):
        d[piece.lo - lo: piece.hi - lo + 1] = piece.d
    return DivisorTable(lo, hi, d)


def dump_table(table: DivisorTable, path) -> None:
    """Versioned binary dump: magic, version, lo, hi, entry width, raw bytes."""
    payload = table.d.astype("<u2").tobytes()
    header = _MAGIC + struct.pack("<IQQI", _VERSION, table.lo, table.hi, 2)
    Path(path).write_bytes(header + payload)


def load_table(path) -> DivisorTable:
    raw = Path(path).read_bytes()
    if raw[:4] != _MAGIC:
        raise DomainError("not a divisor table dump")
    version, lo, hi, width = struct.unpack("<IQQI", raw[4:28])
    if version != _VERSION or width != 2:
        raise DomainError(f"unsupported dump version {version} width {width}")
    d = np.frombuffer(raw[28:], dtype="<u2")
    if len(d) != hi - lo + 1:
        raise DomainError("dump length does not match its header")
    return DivisorTable(int(lo), int(hi), d.astype(np.uint16))


@dataclass(frozen=True)
class CumulativeDivisorSums:
    """Running sums at cutoff x: sum d^2(n) (exact integer) and sum d^2(n)/n."""

    x: int
    d2_sum: int
    d2_over_n_sum: float


def _d2_over_n(d: np.ndarray, lo: int, hi: int) -> np.ndarray:
    df = d.astype(float)
    n = np.arange(lo, hi + 1, dtype=float)
    return df * df / n


def cumulative_sums(xs: Sequence[int],
                    memory_budget_mb: float = 256.0) -> list[CumulativeDivisorSums]:
    """Checkpointed prefix sums of d^2 and d^2/n at each ascending cutoff.

    One streaming pass; the float sum is reduced over blocks aligned to
    n = 1, so a checkpoint value depends only on its own cutoff.
    """
    cuts = [int(x) for x in xs]
    if any(c < 1 for c in cuts) or sorted(cuts) != cuts:
        raise DomainError("cutoffs must be ascending and >= 1")
    top = cuts[-1]
    results: list[CumulativeDivisorSums] = []
    d2_running = 0
    partials: list[float] = []  # fsum of each completed aligned block
    next_cut = 0
    for piece in sieve_blocks(1, top, memory_budget_mb=memory_budget_mb):
        vals = _d2_over_n(piece.d, piece.lo, piece.hi)
        dsq = piece.d.astype(np.int64)
        dsq *= dsq
        # piece length is BLOCK-aligned, so these are exactly the global blocks
        piece_partials = block_partials(vals)
        while next_cut < len(cuts) and cuts[next_cut] <= piece.hi:
            c = cuts[next_cut]
            inside = c - piece.lo + 1
            head = piece_partials[:inside // BLOCK]
            if inside % BLOCK:
                head = head + [math.fsum(vals[inside // BLOCK * BLOCK:inside])]
            d2_at = d2_running + int(dsq[:inside].sum())
            results.append(CumulativeDivisorSums(c, d2_at, math.fsum(partials + head)))
            next_cut += 1
        partials.extend(piece_partials)
        d2_running += int(dsq.sum())
    return results


def divisor_cosine_sum(x: float, alpha: float, dtab: DivisorTable) -> float:
    """sum_{n <= x} d^2(n)/n cos(alpha ln n); empty below n = 1."""
    m = int(math.floor(x))
    if m < 1:
        return 0.0
    dtab.require(1, m)
    vals = _d2_over_n(dtab.values(1, m), 1, m)
    if alpha != 0.0:
        vals = vals * np.cos(alpha * np.log(np.arange(1, m + 1, dtype=float)))
    return blocked_fsum(vals)


def divisor_cosine_main_term(x: float, alpha: float) -> float:
    """Closed form of the integral of w^3 (cos(aw) + a sin(aw)) over [0, ln x].

    The pi^-2 multiple of this is the main term of divisor_cosine_sum.  The
    closed form loses everything to the 6/alpha^4 cancellation as alpha -> 0,
    so below |alpha| ln x = 1 the factorial series takes over; terms decay
    like u^(2j)/(2j)! there, and the function is continuous through alpha = 0.
    """
    if x <= 1.0:
        raise DomainError("main term needs x > 1")
    big_l = math.log(x)
    a = float(alpha)
    u = a * big_l
    if abs(u) <= 1.0:
        u2 = u * u
        l3, l4 = big_l**3, big_l**4
        total = 0.0
        p = 1.0  # (-1)^j u^(2j) / (2j)!
        for j in range(64):
            term = p * (l4 / (2 * j + 4) + u2 * l3 / ((2 * j + 1) * (2 * j + 5)))
            total += term
            if abs(term) < 1e-18 * abs(total):
                break
            p *= -u2 / ((2 * j + 1) * (2 * j + 2))
        return total
    al = u
    cos_part = (3.0 * big_l**2 / a**2 - 6.0 / a**4 + 6.0 * big_l / a**2
                - big_l**3) * math.cos(al)
    sin_part = (big_l**3 / a - 6.0 * big_l / a**3 + 3.0 * big_l**2 / a
                - 6.0 / a**3) * math.sin(al)
    return cos_part + sin_part + 6.0 / a**4


def bilinear_divisor_sum(x: float, dtab: DivisorTable) -> float:
    """(sum_{n <= x} d(n)/sqrt(n))^2, the factored bilinear double sum."""
    m = int(math.floor(x))
    if m < 1:
        return 0.0
    dtab.require(1, m)
    d = dtab.values(1, m).astype(float)
    n = np.arange(1, m + 1, dtype=float)
    s = blocked_fsum(d / np.sqrt(n))
    return s * s


@dataclass(frozen=True)
class DivisorGrowthReport:
    """Measured growth of sum d^2 against x ln^3 x / pi^2 at one cutoff."""

    x: int
    d2_sum: int
    main_term: float
    ratio: float
    leading_coefficient: float  # three-point estimate of c in c x ln^3 x
    d2_over_n_sum: float
    h_main_term: float  # ln^4 x / (4 pi^2)
    h_ratio: float


def divisor_square_asymptotics(x: float, ladder_ratio: float = 10.0,
                               memory_budget_mb: float = 256.0) -> DivisorGrowthReport:
    """Growth report for sum d^2 with a differenced leading-coefficient fit.

    The raw ratio at desk scale is inflated by a full cubic of lower-order
    terms, so the leading coefficient is extracted from three geometric
    cutoffs by solving for the ln^3 component of D(x)/x.
    """
    x = int(x)
    if x < 1000:
        raise DomainError("growth report needs x >= 1000")
    if ladder_ratio <= 1.0:
        raise DomainError("ladder_ratio must exceed 1")
    cuts = sorted({max(10, int(round(x / ladder_ratio**k))) for k in (2, 1, 0)})
    sums = cumulative_sums(cuts, memory_budget_mb=memory_budget_mb)
    logs = np.array([math.log(s.x) for s in sums])
    g = np.array([s.d2_sum / s.x for s in sums])
    if len(sums) == 3:
        vander = np.stack([logs**3, logs**2, logs], axis=1)
        coeff = float(np.linalg.solve(vander, g)[0])
    else:
        coeff = float(g[-1] / logs[-1] ** 3)  # degenerate ladder; raw estimate
    top = sums[-1]
    big_l = math.log(top.x)
    main = top.x * big_l**3 / math.pi**2
    h_main = big_l**4 / (4.0 * math.pi**2)
    return DivisorGrowthReport(
        x=top.x, d2_sum=top.d2_sum, main_term=main, ratio=top.d2_sum / main,
        leading_coefficient=coeff, d2_over_n_sum=top.d2_over_n_sum,
        h_main_term=h_main, h_ratio=top.d2_over_n_sum / h_main)
