"""Upper bound for the sectional curvature of G from the constants C1, C2.

With alpha = C2 / C1, the sectional curvature of the canonical metric is
at most ``C1^2 / 4 * max P`` where, on the unit square,

    P(a, b) = a^2 + b^2 + (alpha^2 - 2) a^2 b^2
              + 6 (alpha + 1) a b sqrt(1 - a^2) sqrt(1 - b^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .constants import ConstantsProfile

__all__ = [
    "CurvatureBound",
    "curvature_poly",
    "curvature_poly_grad",
    "max_curvature_poly",
    "sectional_bound",
]

GRID_SIZE = 2001
ZOOM_SIZE = 201
GRAD_TOL = 1e-12
MAX_NEWTON_STEPS = 50


@dataclass(frozen=True)
class CurvatureBound:
    alpha: float
    poly_max: float
    argmax: tuple[float, float]
    grid_max: float
    c1: float | None = None

    @property
    def k(self) -> float:
        if self.c1 is None:
            raise ValueError("k needs C1; use sectional_bound()")
        return self.poly_max / 4.0 * self.c1**2


def curvature_poly(alpha: float, a, b):
    """P(alpha; a, b); works elementwise on numpy arrays."""
    sa = np.sqrt(np.clip(1.0 - a * a, 0.0, None))
    sb = np.sqrt(np.clip(1.0 - b * b, 0.0, None))
    return (
        a * a + b * b + (alpha * alpha - 2.0) * a * a * b * b
        + 6.0 * (alpha + 1.0) * a * b * sa * sb
    )


def curvature_poly_grad(alpha: float, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Gradient and Hessian of P at an interior point of the unit square."""
    c = alpha * alpha - 2.0
    m = 6.0 * (alpha + 1.0)
    sa, sb = math.sqrt(1.0 - a * a), math.sqrt(1.0 - b * b)
    # d/da [a sqrt(1-a^2)] = (1 - 2a^2)/sqrt(1-a^2),  second derivative a(2a^2-3)/(1-a^2)^(3/2)
    ga, gb = (1.0 - 2.0 * a * a) / sa, (1.0 - 2.0 * b * b) / sb
    ha, hb = a * (2.0 * a * a - 3.0) / sa**3, b * (2.0 * b * b - 3.0) / sb**3
    grad = np.array([
        2.0 * a + 2.0 * c * a * b * b + m * b * sb * ga,
        2.0 * b + 2.0 * c * a * a * b + m * a * sa * gb,
    ])
    hess = np.array([
        [2.0 + 2.0 * c * b * b + m * b * sb * ha, 4.0 * c * a * b + m * ga * gb],
        [4.0 * c * a * b + m * ga * gb, 2.0 + 2.0 * c * a * a + m * a * sa * hb],
    ])
    return grad, hess


def _scan(alpha: float, a_axis: np.ndarray, b_axis: np.ndarray) -> tuple[float, float, float]:
    values = curvature_poly(alpha, a_axis[:, None], b_axis[None, :])
    # np.argmax returns the first flat index, i.e. lexicographically smallest (a, b)
    i, j = np.unravel_index(int(np.argmax(values)), values.shape)
    return float(values[i, j]), float(a_axis[i]), float(b_axis[j])


def _grid_max(alpha: float, size: int = GRID_SIZE, zoom: int = ZOOM_SIZE) -> tuple[float, float, float]:
    """Uniform scan of the square, then a finer scan of the cells around the best node.

    The second pass keeps the grid maximum within ~1e-8 of the true one; a
    single 2001-point grid can miss it by up to ~1e-5 when P is sharply curved.
    """
    axis = np.linspace(0.0, 1.0, size)
    _, a, b = _scan(alpha, axis, axis)
    h = 1.0 / (size - 1)

    def local(c: float) -> np.ndarray:
        return np.linspace(max(c - h, 0.0), min(c + h, 1.0), zoom)

    return _scan(alpha, local(a), local(b))


def _newton(alpha: float, a: float, b: float) -> tuple[float, float]:
    x = np.array([a, b])
    for _ in range(MAX_NEWTON_STEPS):
        grad, hess = curvature_poly_grad(alpha, x[0], x[1])
        if np.linalg.norm(grad) <= GRAD_TOL:
            break
        step = np.linalg.solve(hess, -grad)
        t = 1.0
        # damp to stay strictly inside the square, away from the sqrt singularity
        while np.any(x + t * step <= 0.0) or np.any(x + t * step >= 1.0):
            t *= 0.5
            if t < 1e-12:
                return float(x[0]), float(x[1])
        x = x + t * step
    return float(x[0]), float(x[1])


@lru_cache(maxsize=64)
def max_curvature_poly(alpha: float) -> CurvatureBound:
    """Global maximum of P over [0, 1]^2: grid scan, then Newton on grad P = 0."""
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    gmax, a, b = _grid_max(alpha)
    assert abs(float(curvature_poly(alpha, a, b)) - float(curvature_poly(alpha, b, a))) <= 1e-14
    best, arg = gmax, (a, b)
    if 0.0 < a < 1.0 and 0.0 < b < 1.0:
        na, nb = _newton(alpha, a, b)
        value = float(curvature_poly(alpha, na, nb))
        # Newton may only ever improve on the grid point
        if value >= gmax:
            best, arg = value, (na, nb)
    return CurvatureBound(alpha=alpha, poly_max=best, argmax=arg, grid_max=gmax)


def sectional_bound(profile: ConstantsProfile) -> CurvatureBound:
    """Curvature bound k = max P / 4 * C1^2 for the given constants."""
    base = max_curvature_poly(profile.alpha_ratio)
    return CurvatureBound(
        alpha=base.alpha,
        poly_max=base.poly_max,
        argmax=base.argmax,
        grid_max=base.grid_max,
        c1=profile.c1,
    )
