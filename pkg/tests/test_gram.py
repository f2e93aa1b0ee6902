import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.errors import IndexTooSmallError
from zetalab.gram import (GramKind, count_report, gram_point, gram_points,
                          gram_range, gram_spacing, proxy_gap,
                          spacing_from_heights)
from zetalab.special import theta, theta1

TWO_PI = 2.0 * math.pi

# frozen via bisection on the mpmath phase (40-digit log-gamma)
ROOT_REFERENCE = [
    (GramKind.FULL, 100, 238.58259051450332),
    (GramKind.FULL, 12345, 11855.510944710033),
    (GramKind.HALF, 201, 239.44598682195775),
    # elementary phase root, bisected at 40 digits on the closed form
    (GramKind.HALF_THETA1, 77, 122.94897143288031),
]


@pytest.mark.parametrize("kind,nu,ref", ROOT_REFERENCE)
def test_roots_against_frozen_oracle(kind, nu, ref):
    assert abs(gram_point(kind, nu).t - ref) <= 1e-9


@given(st.integers(1, 1_000_000))
@settings(max_examples=50, deadline=None)
def test_scaled_residual_bound(nu):
    for kind in GramKind:
        gp = gram_point(kind, nu)
        phase = theta1(gp.t) if kind is GramKind.HALF_THETA1 else theta(gp.t)
        step = math.pi if kind is GramKind.FULL else math.pi / 2.0
        assert abs(phase - step * nu) <= 1e-10 * (1 + nu)


@given(st.integers(1, 100_000))
@settings(max_examples=50, deadline=None)
def test_half_grid_interleaves_full(nu):
    assert abs(gram_point(GramKind.HALF, 2 * nu).t
               - gram_point(GramKind.FULL, nu).t) <= 1e-9


def test_points_strictly_increasing():
    nus = np.arange(1, 3000)
    for kind in GramKind:
        ts = gram_points(kind, nus).ts
        assert (np.diff(ts) > 0).all()


def test_spacing_tracks_local_gap():
    # |(t_{nu+1} - t_nu) - 2 pi / ln(t_nu / 2 pi)| * t ln t stays small
    for nu in (900, 5000, 120_000):
        a = gram_point(GramKind.FULL, nu).t
        b = gram_point(GramKind.FULL, nu + 1).t
        rho = TWO_PI / math.log(a / TWO_PI)
        assert abs(b - a - rho) * a * math.log(a) <= 10.0


def test_gram_range_window_and_indices():
    gr = gram_range(GramKind.FULL, 1e4, 1.2e4)
    assert (gr.ts >= 1e4).all() and (gr.ts <= 1.2e4).all()
    assert (np.diff(gr.nus) == 1).all()
    # no admissible point was dropped at either end
    before = gram_point(GramKind.FULL, int(gr.nus[0]) - 1).t
    after = gram_point(GramKind.FULL, int(gr.nus[-1]) + 1).t
    assert before < 1e4 and after > 1.2e4


def test_spacing_from_heights_formula(rng):
    ts = np.sort(rng.uniform(2e3, 5e4, size=64))
    got = spacing_from_heights(ts)
    assert np.allclose(got, TWO_PI / np.log(ts / TWO_PI), rtol=0, atol=0)


def test_spacing_object_consistency():
    sp = gram_spacing(GramKind.FULL, 4321)
    t = gram_point(GramKind.FULL, 4321).t
    assert sp.value == TWO_PI / math.log(t / TWO_PI)
    # the elementary-phase proxy sits a hair above the half grid point
    assert 0.0 < abs(proxy_gap(4321)) < 1e-4


def test_count_report_matches_range():
    rep = count_report(GramKind.FULL, 2e4)
    gr = gram_range(GramKind.FULL, 2e4, 4e4)
    assert rep.count == len(gr.nus)
    assert 0.8 <= rep.ratio <= 1.2


def test_index_floor():
    with pytest.raises(IndexTooSmallError):
        gram_point(GramKind.FULL, 0)
