import math
from fractions import Fraction

import pytest

from oracles import sin_power_betainc, sin_power_quad
from orbivol.bounds import (
    BoundError,
    BoundRefusedError,
    BoundResult,
    Family,
    Mode,
    bound_rows,
    bound_table,
    compute_bound,
    normalization_factor,
)
from orbivol.catalog import Catalog, get_space, list_spaces

PUBLISHED = {
    "H.4": (5.94845e-13, 5e-3),
    "CH.2": (7.86511e-11, 5e-3),
    "OH.2": (3.46914e-76, 5e-3),
    "G2_2": (5.427e-20, 2e-3),
    "F4_4": (4.015e-84, 2e-3),
}
WORKED = sorted(PUBLISHED)


def _fact_prod(start: int, stop: int, step: int = 2) -> int:
    return math.prod(math.factorial(j) for j in range(start, stop + 1, step))


def direct_float_bound(space_id: str, k: float, limit: float) -> float:
    """The whole product in plain floats, integral from the incomplete beta function."""
    s = get_space(space_id)
    e = s.k_volume
    kvol = float(e.rational_scalar) * 2.0**e.pow2 * math.pi ** float(e.pow_pi) * math.sqrt(e.sqrt_int)
    for f in e.factorial_denominators:
        kvol /= math.factorial(f)
    norm = (s.alpha_G / (2 * (s.N - 1))) ** (s.N / 2)
    ball = 2 * (math.pi / k) ** (s.d / 2) / math.gamma(s.d / 2) * sin_power_betainc(s.d - 1, limit)
    return norm / kvol * ball


@pytest.mark.parametrize("space_id", WORKED)
def test_published_figures_reproduced(space_id):
    value, tol = PUBLISHED[space_id]
    got = float(compute_bound(space_id, Mode.PAPER).bound)
    assert got == pytest.approx(value, rel=tol)


@pytest.mark.parametrize("space_id", WORKED)
def test_decomposition_identity(space_id):
    for mode in Mode:
        r = compute_bound(space_id, mode)
        total = r.normalization.log10 + r.k_volume_reciprocal.log10 + r.ball_term.log10
        assert r.bound.log10 == pytest.approx(total, abs=1e-12)
        assert r.bound.sign == 1
        assert (r.group_covolume / r.k_volume_reciprocal.reciprocal()).isclose(r.bound)


@pytest.mark.parametrize("space_id", WORKED)
def test_precise_mode_is_self_consistent(space_id):
    r = compute_bound(space_id, Mode.PRECISE)
    assert r.limit_used == r.r_used * math.sqrt(r.k_used)


@pytest.mark.parametrize("space_id", WORKED)
def test_mode_coherence(space_id):
    paper = compute_bound(space_id, Mode.PAPER).bound.log10
    precise = compute_bound(space_id, Mode.PRECISE).bound.log10
    assert abs(paper - precise) < 0.5


def test_precise_h4_regression():
    paper = float(compute_bound("H.4", Mode.PAPER).bound)
    precise = float(compute_bound("H.4", Mode.PRECISE).bound)
    assert 1 / 1.5 <= precise / paper <= 1.5
    assert precise == pytest.approx(5.97976e-13, rel=1e-5)


@pytest.mark.parametrize("space_id", WORKED + ["H.7", "H.12", "H.20", "CH.5", "CH.9"])
def test_log_space_matches_direct_float_pipeline(space_id):
    for mode in Mode:
        r = compute_bound(space_id, mode)
        direct = direct_float_bound(space_id, r.k_used, r.limit_used)
        assert float(r.bound) == pytest.approx(direct, rel=1e-9)


@pytest.mark.parametrize("n", range(4, 41))
def test_hyperbolic_normalization_is_exactly_one(n):
    s = get_space(f"H.{n}")
    assert Fraction(s.alpha_G, 2 * (s.N - 1)) == 1
    assert normalization_factor(s).log10_mag == 0.0
    assert normalization_factor(s) == compute_bound(s).normalization


def test_hyperbolic_family_decreases():
    for mode in Mode:
        logs = [compute_bound(f"H.{n}", mode).bound.log10 for n in range(4, 21)]
        assert all(b < a for a, b in zip(logs, logs[1:])), mode


def test_complex_hyperbolic_family_decreases():
    for mode in Mode:
        logs = [compute_bound(f"CH.{n}", mode).bound.log10 for n in range(2, 16)]
        assert all(b < a for a, b in zip(logs, logs[1:])), mode


# --- displayed closed forms, derived from the generic assembly ---------------

def _lg_integral(d: int, limit: float) -> float:
    return math.log10(sin_power_betainc(d - 1, limit))


@pytest.mark.parametrize("p", range(2, 9))
def test_even_hyperbolic_closed_form(p):
    r = compute_bound(f"H.{2 * p}", Mode.PAPER)
    k, lim = r.k_used, r.limit_used
    e = p * p + p / 2
    lg = (p / 2 * math.log10(math.pi) + math.log10(_fact_prod(2, 2 * p - 2))
          - (p * p + p - 2) * math.log10(2) - math.lgamma(e) / math.log(10) - e * math.log10(k))
    lg += _lg_integral(2 * p * p + p, lim)
    assert r.bound.log10 == pytest.approx(lg, abs=1e-10)


@pytest.mark.parametrize("p", range(2, 9))
def test_odd_hyperbolic_closed_form(p):
    r = compute_bound(f"H.{2 * p + 1}", Mode.PAPER)
    k, lim = r.k_used, r.limit_used
    e = (2 * p * p + 3 * p + 1) / 2
    lg = ((p + 1) / 2 * math.log10(math.pi) + math.log10(_fact_prod(1, 2 * p - 1))
          - (p * p + 2 * p - 1) * math.log10(2) - math.lgamma(e) / math.log(10) - e * math.log10(k))
    lg += _lg_integral(2 * p * p + 3 * p + 1, lim)
    assert r.bound.log10 == pytest.approx(lg, abs=1e-10)


@pytest.mark.parametrize("n", range(2, 10))
def test_complex_hyperbolic_closed_form(n):
    r = compute_bound(f"CH.{n}", Mode.PAPER)
    k, lim = r.k_used, r.limit_used
    e = n * n / 2 + n
    lg = (n * math.log10((n + 1) / (2 * n - 1)) + n / 2 * math.log10(math.pi)
          + math.log10(_fact_prod(2, n - 1, 1)) - 0.5 * math.log10(n + 1) - e * math.log10(k)
          - math.lgamma(e) / math.log(10) - (n * n + n - 2) / 2 * math.log10(2))
    lg += _lg_integral(n * n + 2 * n, lim)
    assert r.bound.log10 == pytest.approx(lg, abs=1e-10)


def test_simplified_cayley_plane_line():
    r = compute_bound("OH.2", Mode.PAPER)
    f = math.factorial
    value = (Fraction(f(7) * f(5) * f(3), f(25)) * Fraction(3**8, 5**8 * 2**24))
    expected = float(value) * math.pi**6 / 1.17259**26 * sin_power_quad(51, 0.12344)
    assert float(r.bound) == pytest.approx(expected, rel=1e-10)


def test_simplified_g2_line():
    r = compute_bound("G2_2", Mode.PAPER)
    expected = (32 * math.pi**3 / (7**4 * 1.885**7 * math.factorial(6) * 3 * math.sqrt(3))
                * sin_power_quad(13, 0.134))
    assert float(r.bound) == pytest.approx(expected, rel=1e-10)


def test_simplified_f4_line():
    r = compute_bound("F4_4", Mode.PAPER)
    expected = (math.factorial(5) * math.pi**12 / (3**13 * 2**19 * 1.885**26 * math.factorial(25))
                * sin_power_quad(51, 0.134))
    assert float(r.bound) == pytest.approx(expected, rel=1e-10)


# --- tables and refusals ------------------------------------------------------

def test_table_for_hyperbolic_range():
    rows = bound_table(Family.H, (4, 6), Mode.PAPER)
    assert [r.space_id for r in rows] == ["H.4", "H.5", "H.6"]
    assert float(rows[0].bound) == pytest.approx(5.94845e-13, rel=5e-3)


def test_table_of_fixed_spaces():
    rows = bound_table("ALL_FIXED", mode="paper")
    assert {r.space_id for r in rows} == {"OH.2", "G2_2", "F4_4"}
    for r in rows:
        value, tol = PUBLISHED[r.space_id]
        assert float(r.bound) == pytest.approx(value, rel=tol)


def test_precise_complex_hyperbolic_row():
    rows = bound_table(Family.CH, (2, 2), Mode.PRECISE)
    assert len(rows) == 1
    assert 1 / 1.5 <= float(rows[0].bound) / 7.86511e-11 <= 1.5


def test_table_is_deterministic():
    a = bound_table(Family.CH, (2, 6), Mode.PRECISE)
    b = bound_table(Family.CH, (2, 6), Mode.PRECISE)
    assert a == b


def test_error_rows_do_not_abort_the_table():
    rows = bound_table(Family.H, (2, 5))
    assert isinstance(rows[0], BoundError) and isinstance(rows[1], BoundError)
    assert "outside the worked families" in rows[1].message
    assert all(isinstance(r, BoundResult) for r in rows[2:])
    mixed = bound_rows(["H.4", "nope", "EVIII"])
    assert isinstance(mixed[0], BoundResult)
    assert "unknown space" in mixed[1].message
    assert "no recorded K-volume" in mixed[2].message


@pytest.mark.parametrize("space_id", ["H.2", "H.3"])
def test_low_dimensional_hyperbolic_refused(space_id):
    for mode in Mode:
        with pytest.raises(BoundRefusedError, match="outside the worked families"):
            compute_bound(space_id, mode)


def test_bad_table_arguments():
    with pytest.raises(ValueError):
        bound_table(Family.H)
    with pytest.raises(ValueError):
        bound_table(Family.H, (6, 4))


def test_user_space_bound():
    from orbivol.formats import parse_spaces

    # a copy of G2_2 under another id must reproduce the same bound
    extra = parse_spaces(
        "[G2copy]\ncartan_label = G\nN = 8\nd = 14\nalpha_G = 8\n"
        "constants_class = EQUAL_SQRT2\nk_pow_pi = 4\nk_sqrt = 3\nk_scalar = 48\n"
    )
    cat = Catalog(extra)
    got = compute_bound("G2copy", Mode.PRECISE, cat)
    ref = compute_bound("G2_2", Mode.PRECISE)
    assert got.bound.isclose(ref.bound, rel_tol=1e-14)
    assert "G2copy" in {s.id for s in cat.list_spaces(2)}
    assert "G2copy" not in {s.id for s in list_spaces(2)}
