"""Irreducible non-compact symmetric spaces and the data the volume bound needs.

Each entry records dim(G/K) = N, dim(G) = d, alpha_G (twice the dual
Coxeter number, B = alpha_G B'), the constants class and, where known,
the volume of K in the metric induced by the renormalized Killing form B'.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .constants import ConstantsClass
from .logreal import LogReal, log10_int, log10_rational

__all__ = [
    "CartanLabel",
    "ExactVolumeExpression",
    "SymmetricSpaceSpec",
    "Catalog",
    "UnknownSpaceError",
    "DEFAULT_CATALOG",
    "FIXED_SPACES",
    "list_spaces",
    "get_space",
    "exceptional_spaces",
    "k_volume_value",
    "so_volume",
    "su_n_u1_volume",
    "hyperbolic_space",
    "complex_hyperbolic_space",
    "aii_space",
]


class CartanLabel(enum.Enum):
    AI = "AI"
    AII = "AII"
    AIII = "AIII"
    BI = "BI"
    CI = "CI"
    CII = "CII"
    DI = "DI"
    DIII = "DIII"
    EI = "EI"
    EII = "EII"
    EIII = "EIII"
    EIV = "EIV"
    EV = "EV"
    EVI = "EVI"
    EVII = "EVII"
    EVIII = "EVIII"
    EIX = "EIX"
    FI = "FI"
    FII = "FII"
    G = "G"
    TYPE_IV = "TYPE_IV"


class UnknownSpaceError(KeyError):
    pass


def _square_free_split(m: int) -> tuple[int, int]:
    """m = outer^2 * inner with inner square-free."""
    outer, inner = 1, m
    f = 2
    while f * f <= inner:
        while inner % (f * f) == 0:
            inner //= f * f
            outer *= f
        f += 1
    return outer, inner


@dataclass(frozen=True)
class ExactVolumeExpression:
    """``rational_scalar * 2^pow2 * pi^pow_pi * sqrt(sqrt_int) / prod(f!)``."""

    pow2: int = 0
    pow_pi: Fraction = Fraction(0)
    sqrt_int: int = 1
    factorial_denominators: tuple[int, ...] = ()
    rational_scalar: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "pow_pi", Fraction(self.pow_pi))
        object.__setattr__(self, "rational_scalar", Fraction(self.rational_scalar))
        object.__setattr__(
            self, "factorial_denominators", tuple(sorted(self.factorial_denominators, reverse=True))
        )
        if self.sqrt_int < 1:
            raise ValueError("radicand must be a positive integer")
        if self.rational_scalar <= 0:
            raise ValueError("rational scalar must be positive")
        if any(f < 0 for f in self.factorial_denominators):
            raise ValueError("factorial arguments must be non-negative")
        outer, inner = _square_free_split(self.sqrt_int)
        if outer != 1:
            object.__setattr__(self, "sqrt_int", inner)
            object.__setattr__(self, "rational_scalar", self.rational_scalar * outer)

    def rational_part(self) -> Fraction:
        """Everything except the pi power and the radical, exactly."""
        den = 1
        for f in self.factorial_denominators:
            den *= math.factorial(f)
        return self.rational_scalar * Fraction(2) ** self.pow2 / den

    def value(self) -> LogReal:
        lg = log10_rational(self.rational_part())
        lg += float(self.pow_pi) * math.log10(math.pi)
        lg += 0.5 * log10_int(self.sqrt_int)
        return LogReal(1, lg)

    def scaled(self, q) -> ExactVolumeExpression:
        return ExactVolumeExpression(
            self.pow2, self.pow_pi, self.sqrt_int, self.factorial_denominators,
            self.rational_scalar * Fraction(q),
        )

    def __str__(self) -> str:
        parts = []
        if self.rational_scalar != 1:
            parts.append(str(self.rational_scalar))
        if self.pow2:
            parts.append(f"2^{self.pow2}")
        if self.pow_pi:
            parts.append(f"pi^{self.pow_pi}")
        if self.sqrt_int != 1:
            parts.append(f"sqrt({self.sqrt_int})")
        num = " * ".join(parts) or "1"
        facts = [f"{f}!" for f in self.factorial_denominators if f > 1]
        return f"{num} / ({' '.join(facts)})" if facts else num


def so_volume(m: int) -> ExactVolumeExpression:
    """Vol(SO(m)) for the metric -tr(XY)/2.

    SO(2p):   2^(p-1) (2 pi)^(p^2) / ((2p-2)! ... 2!)
    SO(2p+1): 2^p (2 pi)^(p^2+p) / ((2p-1)! ... 3! 1!)
    """
    if m < 2:
        raise ValueError("SO(m) volume needs m >= 2")
    p, odd = divmod(m, 2)
    if odd:
        e = p * p + p
        return ExactVolumeExpression(p + e, e, 1, tuple(range(1, 2 * p, 2)))
    e = p * p
    return ExactVolumeExpression(p - 1 + e, e, 1, tuple(range(2, 2 * p - 1, 2)))


def su_n_u1_volume(n: int) -> ExactVolumeExpression:
    """Vol(S(U(n)U(1))) = sqrt(n+1) (2 pi)^((n^2+n)/2) / ((n-1)! ... 2!)."""
    e = (n * n + n) // 2
    return ExactVolumeExpression(e, e, n + 1, tuple(range(2, n)))


@dataclass(frozen=True)
class SymmetricSpaceSpec:
    id: str
    cartan_label: CartanLabel
    N: int
    d: int
    alpha_G: int
    constants_class: ConstantsClass
    k_volume: ExactVolumeExpression | None = None
    name: str = ""
    family: str | None = None
    n: int | None = None
    # False for spaces whose bound is not assembled (H^2, H^3)
    worked: bool = True
    notes: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not self.d > self.N >= 2:
            raise ValueError(f"{self.id}: need d > N >= 2, got N={self.N}, d={self.d}")
        if self.alpha_G < 2 or self.alpha_G % 2:
            raise ValueError(f"{self.id}: alpha_G must be even and >= 2, got {self.alpha_G}")

    @property
    def dim_k(self) -> int:
        return self.d - self.N

    @property
    def sort_key(self) -> tuple[str, int]:
        return (self.family or self.id, self.n or 0)


def k_volume_value(space: SymmetricSpaceSpec) -> LogReal:
    if space.k_volume is None:
        raise ValueError(f"no K-volume is known for {space.id}")
    return space.k_volume.value()


# --- families ---------------------------------------------------------------

def hyperbolic_space(n: int) -> SymmetricSpaceSpec:
    """H^n = SO_0(n,1)/SO(n)."""
    if n < 2:
        raise UnknownSpaceError(f"H.{n}: hyperbolic family starts at n = 2")
    if n == 2:
        cls = ConstantsClass.EQUAL_SQRT2
    elif n == 3:
        cls = ConstantsClass.H3_SPECIAL
    else:
        cls = ConstantsClass.ONE_SQRT2
    return SymmetricSpaceSpec(
        id=f"H.{n}",
        cartan_label=CartanLabel.BI if n % 2 == 0 else CartanLabel.DI,
        N=n,
        d=n * (n + 1) // 2,
        alpha_G=2 * n - 2,
        constants_class=cls,
        k_volume=so_volume(n),
        name=f"SO_0({n},1)/SO({n})",
        family="H",
        n=n,
        worked=n >= 4,
    )


def complex_hyperbolic_space(n: int) -> SymmetricSpaceSpec:
    """CH^n = SU(n,1)/S(U(n)U(1))."""
    if n < 2:
        raise UnknownSpaceError(f"CH.{n}: complex hyperbolic family starts at n = 2")
    return SymmetricSpaceSpec(
        id=f"CH.{n}",
        cartan_label=CartanLabel.AIII,
        N=2 * n,
        d=n * n + 2 * n,
        alpha_G=2 * n + 2,
        constants_class=ConstantsClass.EQUAL_SQRT2,
        k_volume=su_n_u1_volume(n),
        name=f"SU({n},1)/S(U({n})U(1))",
        family="CH",
        n=n,
    )


def aii_space(n: int) -> SymmetricSpaceSpec:
    """SU*(2n)/Sp(n); no K-volume is recorded, so only the constants apply."""
    if n < 2:
        raise UnknownSpaceError(f"AII.{n}: family starts at n = 2")
    return SymmetricSpaceSpec(
        id=f"AII.{n}",
        cartan_label=CartanLabel.AII,
        N=(n - 1) * (2 * n + 1),
        d=4 * n * n - 1,
        alpha_G=4 * n,
        constants_class=ConstantsClass.ONE_SQRT2,
        name=f"SU*({2 * n})/Sp({n})",
        family="AII",
        n=n,
    )


_FAMILIES = {"H": hyperbolic_space, "CH": complex_hyperbolic_space, "AII": aii_space}

_E, _O = ConstantsClass.EQUAL_SQRT2, ConstantsClass.ONE_SQRT2

FIXED_SPACES: tuple[SymmetricSpaceSpec, ...] = (
    SymmetricSpaceSpec(
        "OH.2", CartanLabel.FII, 16, 52, 18, _O,
        so_volume(9).scaled(2), name="F4(-20)/Spin(9)",
    ),
    SymmetricSpaceSpec(
        "G2_2", CartanLabel.G, 8, 14, 8, _E,
        ExactVolumeExpression(0, 4, 3, (), 48), name="G2(2)/SO(4)",
    ),
    SymmetricSpaceSpec(
        "F4_4", CartanLabel.FI, 28, 52, 18, _E,
        ExactVolumeExpression(21, 14, 1, (5, 3)), name="F4(4)/Sp(3)Sp(1)",
    ),
)

# Remaining exceptional spaces; K-volumes are not recorded for these.
_E_SPACES: tuple[SymmetricSpaceSpec, ...] = tuple(
    SymmetricSpaceSpec(label.value, label, N, d, alpha, cls, name=name)
    for label, N, d, alpha, cls, name in [
        (CartanLabel.EI, 42, 78, 24, _E, "E6(6)/Sp(4)"),
        (CartanLabel.EII, 40, 78, 24, _E, "E6(2)/SU(6)Sp(1)"),
        (CartanLabel.EIII, 32, 78, 24, _E, "E6(-14)/SO(10)U(1)"),
        (CartanLabel.EIV, 26, 78, 24, _O, "E6(-26)/F4"),
        (CartanLabel.EV, 70, 133, 36, _E, "E7(7)/SU(8)"),
        (CartanLabel.EVI, 64, 133, 36, _E, "E7(-5)/SO(12)Sp(1)"),
        (CartanLabel.EVII, 54, 133, 36, _E, "E7(-25)/E6U(1)"),
        (CartanLabel.EVIII, 128, 248, 60, _E, "E8(8)/SO(16)"),
        (CartanLabel.EIX, 112, 248, 60, _E, "E8(-24)/E7Sp(1)"),
    ]
)


class Catalog:
    """Lookup over built-in spaces plus user-registered ones."""

    def __init__(self, extra: Iterable[SymmetricSpaceSpec] = ()):
        self._fixed = {s.id: s for s in FIXED_SPACES + _E_SPACES}
        self._user: dict[str, SymmetricSpaceSpec] = {}
        for s in extra:
            if s.id in self._user:
                raise ValueError(f"duplicate user space {s.id!r}")
            self._user[s.id] = s

    @property
    def user_spaces(self) -> tuple[SymmetricSpaceSpec, ...]:
        return tuple(self._user.values())

    def get(self, space_id: str) -> SymmetricSpaceSpec:
        if space_id in self._user:
            return self._user[space_id]
        if space_id in self._fixed:
            return self._fixed[space_id]
        family, _, tail = space_id.partition(".")
        if family in _FAMILIES and tail.isdigit():
            return _FAMILIES[family](int(tail))
        raise UnknownSpaceError(f"unknown space id {space_id!r}")

    def list_spaces(self, max_n: int) -> list[SymmetricSpaceSpec]:
        """Fixed spaces with a K-volume, H.4..H.max_n, CH.2..CH.max_n and user spaces."""
        if max_n < 2:
            raise ValueError(f"max_n must be >= 2, got {max_n}")
        spaces = list(FIXED_SPACES)
        spaces += [hyperbolic_space(n) for n in range(4, max_n + 1)]
        spaces += [complex_hyperbolic_space(n) for n in range(2, max_n + 1)]
        spaces += list(self._user.values())
        return sorted(spaces, key=lambda s: s.sort_key)

    def exceptional_spaces(self) -> list[SymmetricSpaceSpec]:
        """One entry per exceptional Cartan label (EI..EIX, FI, FII, G)."""
        return list(_E_SPACES) + [self._fixed["F4_4"], self._fixed["OH.2"], self._fixed["G2_2"]]


DEFAULT_CATALOG = Catalog()


def list_spaces(max_n: int) -> list[SymmetricSpaceSpec]:
    return DEFAULT_CATALOG.list_spaces(max_n)


def get_space(space_id: str) -> SymmetricSpaceSpec:
    return DEFAULT_CATALOG.get(space_id)


def exceptional_spaces() -> list[SymmetricSpaceSpec]:
    return DEFAULT_CATALOG.exceptional_spaces()
