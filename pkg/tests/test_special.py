import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab import oracles
from zetalab.errors import DomainError, PhaseVectorTooShortError
from zetalab.special import (CHUNK, DEFAULT_RS, RiemannSiegelConfig,
                             make_phase_vector, theta, theta1, theta_prime,
                             z, z2_divisor_sum, z2_divisor_sum_modulated,
                             z_many)

# frozen via mpmath log-gamma at 40 digits
THETA_REFERENCE = [
    (1000.0, 2034.5464280380315),
    (54321.123, 219043.86927441065),
    (2.5e6, 14867404.88658728),
]

# frozen via Euler-Maclaurin zeta on the half line
Z_REFERENCE = [
    (100.0, 2.692697056664416),
    (1000.5, 2.5492611355558137),
    (5000.25, 0.05210054391041999),
]


@pytest.mark.parametrize("t,ref", THETA_REFERENCE)
def test_theta_against_frozen_oracle(t, ref):
    assert abs(theta(t) - ref) <= 1e-9 * max(1.0, abs(ref))


@pytest.mark.parametrize("t,ref", Z_REFERENCE)
def test_z_against_frozen_oracle(t, ref):
    assert abs(z(t) - ref) <= 5e-6


def test_theta1_is_the_elementary_part():
    # theta - theta1 = 1/(48 t) + O(1/t^3); the subtraction of two values
    # of size ~t ln t leaves cancellation noise of order eps * |theta|
    for t in (500.0, 5000.0, 2e5):
        diff = theta(t) - theta1(t)
        slack = 8.0 / t ** 3 + 256.0 * 2.3e-16 * abs(theta(t))
        assert abs(diff - 1.0 / (48.0 * t)) <= slack


def test_theta_prime_matches_difference_quotient():
    t, h = 1234.5, 1e-5
    approx = (theta(t + h) - theta(t - h)) / (2.0 * h)
    assert abs(theta_prime(t) - approx) <= 1e-6


def test_z_many_matches_scalar(rng):
    ts = rng.uniform(60.0, 4000.0, size=2 * CHUNK + 13)
    many = z_many(ts)
    for i in (0, 1, CHUNK - 1, CHUNK, 2 * CHUNK + 12):
        assert many[i] == z(float(ts[i]))


def test_z_many_chunk_aligned_slices_reproduce(rng):
    ts = np.sort(rng.uniform(100.0, 2000.0, size=3 * CHUNK))
    full = z_many(ts)
    a = z_many(ts[:CHUNK])
    b = z_many(ts[CHUNK:2 * CHUNK])
    assert (full[:CHUNK] == a).all()
    assert (full[CHUNK:2 * CHUNK] == b).all()


def test_z_sign_change_brackets_known_zero():
    # the first zero sits near t = 14.1347; Z changes sign there
    assert z(14.0) * z(14.3) < 0


@given(st.floats(60.0, 9000.0))
@settings(max_examples=40, deadline=None)
def test_z_squared_tracks_divisor_expansion(t):
    # the two Z^2 routes differ by O(ln t); generous envelope
    import zetalab.divisors as dv
    m = int(t / (2 * math.pi)) + 1
    dtab = dv.sieve(1, max(m, 2))
    assert abs(z(t) ** 2 - z2_divisor_sum(t, dtab)) <= 60.0 * math.log(t)


def test_z_domain_floor():
    with pytest.raises(DomainError):
        z(3.0)
    with pytest.raises(DomainError):
        z_many(np.array([50.0, 2.0]))


def test_config_validation():
    with pytest.raises(DomainError):
        RiemannSiegelConfig(correction_order=7)
    with pytest.raises(DomainError):
        RiemannSiegelConfig(min_t=1.0)


def test_correction_ladder_tightens():
    # each added correction term shrinks the worst oracle gap
    ts = np.linspace(80.0, 400.0, 40)
    ref = np.array([oracles.z_reference(float(t)) for t in ts])
    worst = []
    for order in (0, 1, 3):
        got = z_many(ts, RiemannSiegelConfig(correction_order=order))
        worst.append(float(np.abs(got - ref).max()))
    assert worst[0] > worst[1] > worst[2]


def test_phase_vector_prefix_stability():
    short = make_phase_vector(99, 500)
    long = make_phase_vector(99, 2000)
    assert (short.phases == long.phases[:500]).all()
    with pytest.raises(PhaseVectorTooShortError):
        short.require(501)


def test_modulated_expansion_zero_phases_identical():
    import zetalab.divisors as dv
    t = 700.0
    m = int(t / (2 * math.pi)) + 1
    dtab = dv.sieve(1, m)
    phases = make_phase_vector(5, m)
    object.__setattr__(phases, "phases", np.zeros(m))
    assert z2_divisor_sum_modulated(t, phases, dtab) == z2_divisor_sum(t, dtab)
