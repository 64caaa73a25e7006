import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import sin_power_betainc, sin_power_quad
from orbivol.geometry import (
    ball_volume,
    euclidean_ball_volume,
    log10_sin_power_integral,
    log_gamma,
    sin_power_integral,
    wallis_integral,
)

SAMPLE_X = (0.01, 0.1, 0.5, 1.0, math.pi / 2)


# --- gamma ------------------------------------------------------------------

def test_gamma_at_integer_is_factorial():
    assert log_gamma(26).log10 == pytest.approx(math.log10(math.factorial(25)), abs=1e-13)


def test_gamma_at_half_integers():
    assert log_gamma(Fraction(1, 2)).log10 == pytest.approx(0.5 * math.log10(math.pi), abs=1e-15)
    assert log_gamma(Fraction(7, 2)).log10 == pytest.approx(
        math.log10(15 * math.sqrt(math.pi) / 8), abs=1e-15
    )
    # float half-integers take the exact path too
    assert log_gamma(3.5).log10 == log_gamma(Fraction(7, 2)).log10


@pytest.mark.parametrize("x", [0.3, 2.3, 17.77, 151.2])
def test_gamma_general_argument(x):
    with mpmath.workdps(30):
        expected = float(mpmath.loggamma(x) / mpmath.log(10))
    assert log_gamma(x).log10 == pytest.approx(expected, rel=1e-12, abs=1e-14)


@pytest.mark.parametrize("x", [0, -1, -0.5])
def test_gamma_rejects_non_positive(x):
    with pytest.raises(ValueError):
        log_gamma(x)


# --- sin^n integrals -----------------------------------------------------------

def test_trivial_sin_integrals():
    assert sin_power_integral(0, 0.5) == pytest.approx(0.5, rel=1e-15)
    assert sin_power_integral(1, math.pi / 2) == pytest.approx(1.0, rel=1e-15)
    assert sin_power_integral(7, 0.0) == 0.0
    assert log10_sin_power_integral(7, 0.0) == -math.inf


@pytest.mark.parametrize("n", range(1, 61))
def test_sin_integral_against_quadrature(n):
    for x in SAMPLE_X:
        got = sin_power_integral(n, x)
        ref = sin_power_quad(n, x)
        assert abs(got - ref) / ref <= 1e-10, (n, x, got, ref)


@pytest.mark.parametrize("n, x", [(51, 0.12344), (13, 0.134), (51, 0.134), (51, 0.123)])
def test_bound_integrals_against_two_oracles(n, x):
    got = sin_power_integral(n, x)
    assert got == pytest.approx(sin_power_quad(n, x), rel=1e-12)
    assert got == pytest.approx(sin_power_betainc(n, x), rel=1e-12)


def test_integral_of_high_power_stays_in_log_space():
    # ~1e-600: no float can hold it, the log must still be right
    n, x = 600, 0.1
    with mpmath.workdps(30):
        s2 = mpmath.sin(mpmath.mpf(x)) ** 2
        ref = mpmath.log10(mpmath.betainc(mpmath.mpf(n + 1) / 2, 0.5, 0, s2) / 2)
    assert log10_sin_power_integral(n, x) == pytest.approx(float(ref), rel=1e-12)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 12, 51])
def test_reflection_beyond_half_pi(n):
    for x in (2.0, 2.8, math.pi):
        assert sin_power_integral(n, x) == pytest.approx(sin_power_quad(n, x), rel=1e-10)
    assert sin_power_integral(n, math.pi) == pytest.approx(2 * float(wallis_integral(n)), rel=1e-13)


@given(st.integers(min_value=2, max_value=80), st.floats(min_value=1e-3, max_value=math.pi))
@settings(max_examples=60, deadline=None)
def test_reduction_formula_holds(n, x):
    # I_n = -sin^(n-1) x cos x / n + (n-1)/n I_(n-2), checked on the returned values
    lhs = sin_power_integral(n, x)
    t1 = -(math.sin(x) ** (n - 1)) * math.cos(x) / n
    t2 = (n - 1) / n * sin_power_integral(n - 2, x)
    # the two terms cancel at small x; scale the tolerance by their size
    assert abs(lhs - (t1 + t2)) <= 1e-12 * (abs(t1) + abs(t2))


def test_sin_integral_rejects_bad_arguments():
    with pytest.raises(ValueError):
        sin_power_integral(-1, 0.5)
    with pytest.raises(ValueError):
        sin_power_integral(3, 3.5)


# --- ball volume ------------------------------------------------------------

def test_hemisphere_of_unit_three_sphere():
    assert float(ball_volume(3, 1.0, math.pi / 2)) == pytest.approx(math.pi**2, rel=1e-13)
    assert float(ball_volume(3, 1.0, math.pi)) == pytest.approx(2 * math.pi**2, rel=1e-13)


@given(st.floats(min_value=1e-3, max_value=math.pi))
def test_three_ball_closed_form(r):
    expected = 2 * math.pi * (r - math.sin(r) * math.cos(r))
    assert float(ball_volume(3, 1.0, r)) == pytest.approx(expected, rel=1e-9)


def test_two_dimensional_euclidean_limit():
    assert float(ball_volume(2, 1e-12, 1.0)) == pytest.approx(math.pi, rel=1e-6)


@pytest.mark.parametrize("d", [2, 3, 5, 10])
def test_euclidean_limit(d):
    r = 0.7
    expected = math.pi ** (d / 2) / math.gamma(d / 2 + 1) * r**d
    assert float(ball_volume(d, 1e-10, r)) == pytest.approx(expected, rel=1e-6)
    assert float(euclidean_ball_volume(d, r)) == pytest.approx(expected, rel=1e-13)


def test_monotone_in_curvature_and_radius():
    ks = [0.2, 0.5, 1.0, 1.17259, 1.88462, 3.0]
    rs = [0.05, 0.098, 0.114, 0.3, 0.8]
    for d in (5, 14, 52):
        for r in rs:
            vals = [ball_volume(d, k, r).log10 for k in ks]
            assert all(a > b for a, b in zip(vals, vals[1:])), (d, r)
        for k in ks:
            vals = [ball_volume(d, k, r).log10 for r in rs]
            assert all(a < b for a, b in zip(vals, vals[1:])), (d, k)


def test_ball_volume_used_for_cayley_plane():
    d, k, r = 52, 1.17259, 0.114
    limit = r * math.sqrt(k)
    pref = 2 * (math.pi / k) ** (d / 2) / math.gamma(d / 2)
    expected = pref * sin_power_quad(d - 1, limit)
    assert float(ball_volume(d, k, r)) == pytest.approx(expected, rel=1e-10)


def test_ball_volume_refuses_beyond_cut_locus():
    with pytest.raises(ValueError, match="exceeds pi"):
        ball_volume(4, 1.0, 3.2)
    with pytest.raises(ValueError):
        ball_volume(4, -1.0, 0.1)
