import math
import os

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.summation import (BLOCK, CHUNK, block_partials, blocked_fsum,
                               run_sharded, shard_block_ranges, thread_cap)


def test_block_divides_chunk_layout():
    assert BLOCK % CHUNK == 0


@pytest.mark.parametrize("n", [0, 1, 5, BLOCK - 1, BLOCK, BLOCK + 1,
                               3 * BLOCK + 17])
def test_blocked_fsum_accuracy_and_determinism(n, rng):
    vals = rng.standard_normal(n) * 10.0 ** rng.integers(-8, 8, size=n)
    got = blocked_fsum(vals)
    # each block sum is correctly rounded, so the blocked total sits within
    # one rounding per block of the exact sum
    assert abs(got - math.fsum(vals)) <= 5e-16 * np.abs(vals).sum() + 1e-300
    assert got == blocked_fsum(vals.copy())
    if n > 0:
        assert got == math.fsum(block_partials(vals))


def test_block_partials_shape(rng):
    vals = rng.standard_normal(2 * BLOCK + 3)
    parts = block_partials(vals)
    assert len(parts) == 3
    assert parts[0] == math.fsum(vals[:BLOCK])
    assert parts[2] == math.fsum(vals[2 * BLOCK:])


@given(n=st.integers(0, 10 * BLOCK), shards=st.integers(1, 12))
@settings(max_examples=60, deadline=None)
def test_shard_ranges_partition(n, shards):
    ranges = shard_block_ranges(n, shards)
    # contiguous cover of [0, n) with block-aligned interior boundaries
    pos = 0
    for i0, i1 in ranges:
        assert i0 == pos
        assert i1 > i0
        if i1 != n:
            assert i1 % BLOCK == 0
        pos = i1
    assert pos == n or (n == 0 and not ranges)


@pytest.mark.parametrize("shards", [1, 2, 5])
def test_run_sharded_covers_every_index(shards):
    n = 3 * BLOCK + 211
    hits = np.zeros(n, dtype=np.int64)

    def fill(i0, i1):
        hits[i0:i1] += 1

    run_sharded(n, shards, fill)
    assert (hits == 1).all()


def test_thread_cap_env(monkeypatch):
    monkeypatch.setenv("ZETALAB_THREADS", "3")
    assert thread_cap() == 3
    monkeypatch.setenv("ZETALAB_THREADS", "not-a-number")
    assert thread_cap() >= 1  # falls back to the machine
    monkeypatch.delenv("ZETALAB_THREADS")
    assert thread_cap() >= 1
