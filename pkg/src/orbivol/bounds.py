"""Lower bound for Vol(Gamma \\ G/K, g0) in the Ricci-normalized metric.

    Vol >= (alpha_G / 2(N-1))^(N/2) / Vol(K) * V(d, k, r)

where r is half the Zassenhaus radius, k the sectional-curvature bound of G and
V the comparison ball volume.  Two modes are offered:

* ``PRECISE``: r, k and the integration limit r*sqrt(k) come from the
  solver and the curvature maximization at full precision.
* ``PAPER``: the rounded constants behind the published figures, so that
  those figures are reproduced to their printed digits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .catalog import (
    DEFAULT_CATALOG,
    FIXED_SPACES,
    Catalog,
    SymmetricSpaceSpec,
    k_volume_value,
)
from .constants import ConstantsClass, ConstantsProfile, classify_constants
from .curvature import sectional_bound
from .geometry import ball_volume_at_limit
from .logreal import LogReal, log10_rational
from .wang import solve_wang_radius

__all__ = [
    "Mode",
    "Family",
    "RoundedConstants",
    "BoundResult",
    "BoundError",
    "BoundRefusedError",
    "ROUNDED_CONSTANTS",
    "rounded_constants_for",
    "normalization_factor",
    "compute_bound",
    "bound_table",
]


class Mode(enum.Enum):
    PAPER = "paper"
    PRECISE = "precise"


class Family(enum.Enum):
    H = "H"
    CH = "CH"
    ALL_FIXED = "ALL_FIXED"


class BoundRefusedError(ValueError):
    """The space is outside the families for which the bound is assembled."""


@dataclass(frozen=True)
class RoundedConstants:
    r: float
    k: float
    limit: float


# Rounded R_G * C1 for the (sqrt2, sqrt2) class.
_WANG_RC1_EQUAL = 0.277
_R_EQUAL = _WANG_RC1_EQUAL / (2.0 * math.sqrt(2.0))

ROUNDED_CONSTANTS: dict[ConstantsClass, RoundedConstants] = {
    ConstantsClass.ONE_SQRT2: RoundedConstants(r=0.114, k=1.17259, limit=0.12344),
    ConstantsClass.EQUAL_SQRT2: RoundedConstants(
        r=_R_EQUAL, k=1.88462, limit=_R_EQUAL * math.sqrt(1.88462)
    ),
}

# The G2(2) and F4(4) figures were evaluated with k = 1.885 and limit 0.134.
_ROUNDED_OVERRIDES: dict[str, RoundedConstants] = {
    "G2_2": RoundedConstants(r=0.098, k=1.885, limit=0.134),
    "F4_4": RoundedConstants(r=0.098, k=1.885, limit=0.134),
}


def rounded_constants_for(space: SymmetricSpaceSpec) -> RoundedConstants:
    if space.id in _ROUNDED_OVERRIDES:
        return _ROUNDED_OVERRIDES[space.id]
    try:
        return ROUNDED_CONSTANTS[space.constants_class]
    except KeyError:
        raise BoundRefusedError(
            f"no rounded constants for class {space.constants_class.value}"
        ) from None


@dataclass(frozen=True)
class BoundResult:
    space_id: str
    mode: Mode
    profile: ConstantsProfile
    N: int
    d: int
    alpha_G: int
    r_used: float
    k_used: float
    limit_used: float
    normalization: LogReal
    k_volume_reciprocal: LogReal
    ball_term: LogReal

    @property
    def bound(self) -> LogReal:
        return self.normalization * self.k_volume_reciprocal * self.ball_term

    @property
    def group_covolume(self) -> LogReal:
        """Lower bound for Vol(Gamma \\ G) = Vol(Gamma \\ G/K) * Vol(K)."""
        return self.bound / self.k_volume_reciprocal


@dataclass(frozen=True)
class BoundError:
    space_id: str
    message: str


def normalization_factor(space: SymmetricSpaceSpec) -> LogReal:
    """(alpha_G / 2(N-1))^(N/2); exactly one when alpha_G = 2(N-1)."""
    ratio = Fraction(space.alpha_G, 2 * (space.N - 1))
    if ratio == 1:
        return LogReal.one()
    return LogReal(1, 0.5 * space.N * log10_rational(ratio))


def _check_bound_applies(space: SymmetricSpaceSpec) -> None:
    if not space.worked or space.constants_class is ConstantsClass.H3_SPECIAL:
        raise BoundRefusedError(
            f"{space.id} is outside the worked families of the volume bound"
        )
    if space.k_volume is None:
        raise BoundRefusedError(f"{space.id} has no recorded K-volume")


def compute_bound(space: SymmetricSpaceSpec | str, mode: Mode | str = Mode.PAPER,
                  catalog: Catalog = DEFAULT_CATALOG) -> BoundResult:
    """Assemble the orbifold volume lower bound for one space."""
    if isinstance(space, str):
        space = catalog.get(space)
    mode = Mode(mode)
    _check_bound_applies(space)
    profile = classify_constants(space)

    if mode is Mode.PRECISE:
        r = solve_wang_radius(profile.c1, profile.c2).r_half
        k = sectional_bound(profile).k
        limit = r * math.sqrt(k)
    else:
        pc = rounded_constants_for(space)
        r, k, limit = pc.r, pc.k, pc.limit
    if limit > math.pi:
        raise BoundRefusedError(f"{space.id}: r*sqrt(k) exceeds pi")

    return BoundResult(
        space_id=space.id,
        mode=mode,
        profile=profile,
        N=space.N,
        d=space.d,
        alpha_G=space.alpha_G,
        r_used=r,
        k_used=k,
        limit_used=limit,
        normalization=normalization_factor(space),
        k_volume_reciprocal=k_volume_value(space).reciprocal(),
        ball_term=ball_volume_at_limit(space.d, k, limit),
    )


def _family_ids(family: Family, n_range: Sequence[int] | None, catalog: Catalog) -> list[str]:
    if family is Family.ALL_FIXED:
        return [s.id for s in sorted(FIXED_SPACES, key=lambda s: s.sort_key)]
    if n_range is None:
        raise ValueError(f"family {family.value} needs an n range")
    lo, hi = n_range
    if lo > hi:
        raise ValueError(f"empty n range {lo}..{hi}")
    return [f"{family.value}.{n}" for n in range(lo, hi + 1)]


def bound_table(family: Family | str, n_range: Sequence[int] | None = None,
                mode: Mode | str = Mode.PAPER,
                catalog: Catalog = DEFAULT_CATALOG) -> list[BoundResult | BoundError]:
    """One row per space; failures become :class:`BoundError` rows."""
    family = Family(family)
    rows: list[BoundResult | BoundError] = []
    for space_id in _family_ids(family, n_range, catalog):
        rows.append(_row(space_id, mode, catalog))
    return rows


def bound_rows(space_ids: Iterable[str], mode: Mode | str = Mode.PAPER,
               catalog: Catalog = DEFAULT_CATALOG) -> list[BoundResult | BoundError]:
    return [_row(s, mode, catalog) for s in space_ids]


def _row(space_id: str, mode, catalog: Catalog) -> BoundResult | BoundError:
    try:
        return compute_bound(catalog.get(space_id), mode, catalog)
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        return BoundError(space_id, str(msg))
