"""Deterministic blocked reduction and the shared worker pool.

Every heavy sum in the package follows the same recipe: per-point values are
materialized into a preallocated array, the array is reduced by exact partial
sums (math.fsum) over fixed-size blocks, and the block sums are added in index
order.  Block and chunk boundaries sit at absolute offsets, never at shard
boundaries, so any worker schedule produces bit-identical totals.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

# Part of the determinism contract: changing either constant changes the
# low-order bits of every reported sum.  BLOCK must stay a multiple of CHUNK
# so that evaluation chunks inside a shard land on absolute offsets.
BLOCK = 4096
CHUNK = 2048

THREADS_ENV = "ZETALAB_THREADS"


def block_partials(values: np.ndarray) -> list[float]:
    """Exact partial sums of a 1-d array over fixed BLOCK strides."""
    return [math.fsum(values[i:i + BLOCK]) for i in range(0, len(values), BLOCK)]


def blocked_fsum(values: np.ndarray) -> float:
    """Reduce a 1-d array exactly over fixed blocks, then the block sums in order."""
    if len(values) == 0:
        return 0.0
    return math.fsum(block_partials(values))


def thread_cap() -> int:
    """Worker ceiling from the environment; falls back to the CPU count."""
    raw = os.environ.get(THREADS_ENV, "")
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap <= 0:
        cap = os.cpu_count() or 1
    return cap


def shard_block_ranges(n: int, shards: int) -> list[tuple[int, int]]:
    """Split [0, n) into at most `shards` contiguous runs of whole blocks."""
    if n <= 0:
        return []
    nblocks = -(-n // BLOCK)
    shards = max(1, min(shards, nblocks))
    base, extra = divmod(nblocks, shards)
    ranges = []
    b0 = 0
    for s in range(shards):
        b1 = b0 + base + (1 if s < extra else 0)
        ranges.append((b0 * BLOCK, min(b1 * BLOCK, n)))
        b0 = b1
    return ranges


def run_sharded(n: int, shards: int, fill: Callable[[int, int], None]) -> None:
    """Run fill(i0, i1) over the shard ranges of [0, n).

    fill must only write to preallocated output slots in [i0, i1) and must
    derive any internal chunking from i0 (which is always BLOCK-aligned).
    The schedule never affects the result, so the pool is purely a throughput
    knob; ZETALAB_THREADS caps it.
    """
    ranges = shard_block_ranges(n, shards)
    if not ranges:
        return
    workers = min(len(ranges), thread_cap())
    if workers <= 1:
        for i0, i1 in ranges:
            fill(i0, i1)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fill, i0, i1) for i0, i1 in ranges]
        for fut in futures:
            fut.result()
