"""Radius of H. C. Wang's Zassenhaus ball.

The radius R_G is the least positive zero of

    F(t) = exp(C1 t) - 1 + 2 sin(C2 t) - C1 t / (exp(C1 t) - 1)

and a ball of radius R_G / 2 embeds in the fundamental domain of every
lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["WangRadius", "NoZeroFoundError", "wang_f", "solve_wang_radius"]

SCAN_STEP = 1e-3  # in units of 1/C1
SCAN_LIMIT = 20.0  # in units of 1/C1
BISECT_WIDTH = 1e-14
_SERIES_CUTOFF = 1e-6


class NoZeroFoundError(ValueError):
    """F has no sign change on the scanned interval."""


@dataclass(frozen=True)
class WangRadius:
    c1: float
    c2: float
    r_g: float
    residual: float

    @property
    def r_half(self) -> float:
        return self.r_g / 2.0


def _x_over_expm1(x: float) -> float:
    if abs(x) < _SERIES_CUTOFF:
        # x/(e^x - 1) = 1 - x/2 + x^2/12 - x^4/720 + ...
        return 1.0 - x / 2.0 + x * x / 12.0
    return x / math.expm1(x)


def wang_f(c1: float, c2: float, t: float) -> float:
    """Evaluate F(t); the removable singularity at t = 0 gives F(0) = -1."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    x = c1 * t
    return math.expm1(x) + 2.0 * math.sin(c2 * t) - _x_over_expm1(x)


def solve_wang_radius(c1: float, c2: float) -> WangRadius:
    """Least positive zero of F by a fixed-step scan followed by bisection."""
    if c1 <= 0 or c2 <= 0:
        raise ValueError(f"constants must be positive, got C1={c1}, C2={c2}")
    step = SCAN_STEP / c1
    n_steps = int(round(SCAN_LIMIT / SCAN_STEP))
    lo, f_lo = 0.0, wang_f(c1, c2, 0.0)
    for i in range(1, n_steps + 1):
        hi = i * step
        f_hi = wang_f(c1, c2, hi)
        if f_hi == 0.0:
            return WangRadius(c1, c2, hi, 0.0)
        if (f_lo < 0) != (f_hi < 0):
            break
        lo, f_lo = hi, f_hi
    else:
        raise NoZeroFoundError(
            f"no zero of F found in (0, {SCAN_LIMIT / c1:.6g}] for C1={c1}, C2={c2}"
        )

    while hi - lo > BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = wang_f(c1, c2, mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    return WangRadius(c1, c2, root, abs(wang_f(c1, c2, root)))
