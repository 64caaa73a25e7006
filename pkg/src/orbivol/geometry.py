"""Gamma function, powers-of-sine integrals and constant-curvature ball volumes.

All results that feed the volume bound are returned as :class:`LogReal`
so that dimension-52 balls of radius ~0.12 (volumes near 1e-70) never
pass through an underflowing intermediate.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .logreal import LogReal, log10_int, log10_rational

__all__ = [
    "log_gamma",
    "sin_power_integral",
    "log10_sin_power_integral",
    "wallis_integral",
    "ball_volume",
    "euclidean_ball_volume",
]

_LOG10_PI = math.log10(math.pi)
_LOG10_E = math.log10(math.e)

# Above this value of sin(x)^2 the series converges slowly and the forward
# recurrence is used instead; its error growth is bounded by (1/0.95)^(n/2).
_SERIES_SIN2_MAX = 0.95


def _as_half_integer(x) -> Fraction | None:
    """Return x as a Fraction if 2x is an integer, else None."""
    try:
        q = Fraction(x)
    except (TypeError, ValueError):
        return None
    if (2 * q).denominator == 1:
        return q
    return None


def log_gamma(x) -> LogReal:
    """Gamma(x) for x > 0 as a LogReal.

    Integers use the exact factorial, half-integers the exact value
    ``(2m)! sqrt(pi) / (4^m m!)``; anything else falls back to ``math.lgamma``.
    """
    if x <= 0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    q = _as_half_integer(x)
    if q is not None:
        if q.denominator == 1:
            return LogReal(1, log10_int(math.factorial(int(q) - 1)))
        m = int(q - Fraction(1, 2))
        exact = Fraction(math.factorial(2 * m), 4**m * math.factorial(m))
        return LogReal(1, log10_rational(exact) + 0.5 * _LOG10_PI)
    return LogReal(1, math.lgamma(float(x)) * _LOG10_E)


def wallis_integral(n: int) -> LogReal:
    """Integral of sin^n over [0, pi/2]."""
    return LogReal(1, 0.5 * _LOG10_PI - math.log10(2.0)) * (
        log_gamma(Fraction(n + 1, 2)) / log_gamma(Fraction(n + 2, 2))
    )


def _series_log10(n: int, x: float) -> float:
    # int_0^x sin^n = sum_k C(2k,k)/4^k * s^(n+2k+1)/(n+2k+1),  s = sin x
    s = math.sin(x)
    s2 = s * s
    terms = []
    coef = 1.0
    power = 1.0
    k = 0
    while True:
        t = coef * power / (n + 2 * k + 1)
        terms.append(t)
        if t < 1e-18 * terms[0] or k > 20000:
            break
        coef *= (2 * k + 1) / (2 * k + 2)
        power *= s2
        k += 1
    return (n + 1) * math.log10(s) + math.log10(math.fsum(terms))


def _recurrence(n: int, x: float) -> float:
    # I_m = -sin^(m-1) x cos x / m + (m-1)/m I_(m-2), stepping on n's parity.
    s, c = math.sin(x), math.cos(x)
    m, val = (0, x) if n % 2 == 0 else (1, 1.0 - c)
    while m < n:
        m += 2
        val = -(s ** (m - 1)) * c / m + (m - 1) / m * val
    return val


def log10_sin_power_integral(n: int, x: float) -> float:
    """log10 of the integral of sin^n over [0, x]; -inf when it vanishes."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0.0 <= x <= math.pi:
        raise ValueError(f"x must lie in [0, pi], got {x}")
    if x == 0.0:
        return -math.inf
    if x > math.pi / 2:
        # reflect about pi/2; the result is at least the Wallis value
        total = 2.0 * float(wallis_integral(n))
        rest = 10.0 ** log10_sin_power_integral(n, math.pi - x) if x < math.pi else 0.0
        return math.log10(total - rest)
    if math.sin(x) ** 2 <= _SERIES_SIN2_MAX:
        return _series_log10(n, x)
    return math.log10(_recurrence(n, x))


def sin_power_integral(n: int, x: float) -> float:
    """Integral of sin(phi)^n d phi over [0, x], for 0 <= x <= pi."""
    lg = log10_sin_power_integral(n, x)
    return 0.0 if lg == -math.inf else 10.0**lg


def ball_volume(d: int, k: float, r: float) -> LogReal:
    """Volume of a radius-r ball in the d-dimensional space form of curvature k > 0.

    ``V = 2 (pi/k)^(d/2) / Gamma(d/2) * int_0^(r sqrt k) sin^(d-1)``.
    """
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    if k <= 0 or r <= 0:
        raise ValueError("curvature and radius must be positive")
    limit = r * math.sqrt(k)
    if limit > math.pi:
        raise ValueError(f"r*sqrt(k) = {limit:.6g} exceeds pi (beyond the cut locus)")
    return ball_volume_at_limit(d, k, limit)


def ball_volume_at_limit(d: int, k: float, limit: float) -> LogReal:
    """Same as :func:`ball_volume` with the integration limit supplied directly."""
    if not 0 < limit <= math.pi:
        raise ValueError(f"integration limit must lie in (0, pi], got {limit}")
    prefactor = LogReal(1, math.log10(2.0) + 0.5 * d * (_LOG10_PI - math.log10(k)))
    integral = LogReal(1, log10_sin_power_integral(d - 1, limit))
    return prefactor / log_gamma(Fraction(d, 2)) * integral


def euclidean_ball_volume(d: int, r: float) -> LogReal:
    """pi^(d/2) r^d / Gamma(d/2 + 1)."""
    return LogReal(1, 0.5 * d * _LOG10_PI + d * math.log10(r)) / log_gamma(Fraction(d + 2, 2))
