"""Regression checks run by ``orbivol verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .catalog import DEFAULT_CATALOG, Catalog
from .constants import (
    VERIFY_TOL,
    RestrictedRootSystem,
    c1_from_restricted_roots,
    classify_constants,
    shipped_root_systems,
)
from .curvature import max_curvature_poly
from .wang import solve_wang_radius

__all__ = ["CheckResult", "GROUPS", "run_checks"]

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class CheckResult:
    group: str
    name: str
    passed: bool
    detail: str


def wang_checks() -> list[CheckResult]:
    out = []
    for label, c1, c2, target in [("(1,sqrt2)", 1.0, SQRT2, 0.228), ("(sqrt2,sqrt2)", SQRT2, SQRT2, 0.277)]:
        w = solve_wang_radius(c1, c2)
        value = w.r_g * c1
        out.append(CheckResult(
            "wang", f"R_G*C1 {label}", abs(value - target) <= 1e-3,
            f"{value:.6f} (expected {target} +- 0.001)",
        ))
    return out


def curvature_checks() -> list[CheckResult]:
    one = max_curvature_poly(1.0)
    root = math.sqrt(7.0 / 13.0)
    two = max_curvature_poly(SQRT2)
    return [
        CheckResult("curvature", "max P alpha=1", abs(one.poly_max - 49 / 13) <= 1e-9,
                    f"{one.poly_max:.12f} (expected 49/13)"),
        CheckResult("curvature", "argmax alpha=1",
                    max(abs(one.argmax[0] - root), abs(one.argmax[1] - root)) <= 1e-6,
                    f"({one.argmax[0]:.9f}, {one.argmax[1]:.9f}) (expected sqrt(7/13))"),
        CheckResult("curvature", "max P alpha=sqrt2", abs(two.poly_max - 4.69036) <= 1e-5,
                    f"{two.poly_max:.8f} (expected 4.69036 +- 1e-5)"),
    ]


def constants_checks(roots: dict[str, RestrictedRootSystem] | None = None,
                     catalog: Catalog = DEFAULT_CATALOG) -> list[CheckResult]:
    data = shipped_root_systems()
    if roots:
        data.update(roots)
    out = []
    for space_id, rrs in data.items():
        try:
            space = catalog.get(space_id)
            expected = classify_constants(space).c1
            got = c1_from_restricted_roots(rrs)
        except (KeyError, ValueError) as exc:
            out.append(CheckResult("constants", space_id, False, f"error: {exc}"))
            continue
        out.append(CheckResult(
            "constants", space_id, abs(got - expected) <= VERIFY_TOL,
            f"dual-norm C1 = {got:.12f}, classifier C1 = {expected:.12f}",
        ))
    return out


GROUPS: dict[str, Callable[..., list[CheckResult]]] = {
    "wang": wang_checks,
    "curvature": curvature_checks,
    "constants": constants_checks,
}


def run_checks(only: Iterable[str] | None = None,
               roots: dict[str, RestrictedRootSystem] | None = None,
               catalog: Catalog = DEFAULT_CATALOG) -> list[CheckResult]:
    groups = list(only) if only else list(GROUPS)
    results: list[CheckResult] = []
    for g in groups:
        if g == "constants":
            results += constants_checks(roots, catalog)
        else:
            results += GROUPS[g]()
    return results
