"""The constants C1 and C2 of a symmetric space G/K.

Measured with the renormalized Killing form (maximal root of length
sqrt 2), every irreducible space of non-compact type has either
C1 = C2 = sqrt 2 or C1 = 1 < sqrt 2 = C2, the only exception being
hyperbolic 3-space with C1 = C2 = 1.  The production path reads the class
off the catalog entry; :func:`c1_from_restricted_roots` recomputes C1 from
restricted-root data as an independent check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

import numpy as np

if TYPE_CHECKING:
    from .catalog import SymmetricSpaceSpec

__all__ = [
    "ConstantsClass",
    "ConstantsProfile",
    "RestrictedRootSystem",
    "MissingRootDataError",
    "classify_constants",
    "c1_from_restricted_roots",
    "verify_classification",
    "shipped_root_systems",
    "root_system_for",
    "hyperbolic_roots",
    "complex_hyperbolic_roots",
    "aii_roots",
    "VERIFY_TOL",
]

SQRT2 = math.sqrt(2.0)
VERIFY_TOL = 1e-9


class ConstantsClass(enum.Enum):
    EQUAL_SQRT2 = "EQUAL_SQRT2"
    ONE_SQRT2 = "ONE_SQRT2"
    H3_SPECIAL = "H3_SPECIAL"


@dataclass(frozen=True)
class ConstantsProfile:
    c1: float
    c2: float

    def __post_init__(self) -> None:
        if self.c1 <= 0 or self.c2 <= 0:
            raise ValueError(f"constants must be positive, got ({self.c1}, {self.c2})")

    @property
    def alpha_ratio(self) -> float:
        return self.c2 / self.c1


_PROFILES = {
    ConstantsClass.EQUAL_SQRT2: ConstantsProfile(SQRT2, SQRT2),
    ConstantsClass.ONE_SQRT2: ConstantsProfile(1.0, SQRT2),
    ConstantsClass.H3_SPECIAL: ConstantsProfile(1.0, 1.0),
}


def classify_constants(space: SymmetricSpaceSpec | ConstantsClass) -> ConstantsProfile:
    """(C1, C2) for a catalog entry, read from its constants class."""
    cls = space if isinstance(space, ConstantsClass) else space.constants_class
    return _PROFILES[ConstantsClass(cls)]


class MissingRootDataError(KeyError):
    """No restricted-root data is available for a space."""


@dataclass(frozen=True)
class RestrictedRootSystem:
    """Positive restricted roots on a maximal abelian subalgebra a of p.

    ``gram`` is the inner product on a (renormalized Killing form) in the
    chosen coordinates; each root is a linear form on a given by its
    coefficient vector in the dual coordinates.
    """

    ambient_dim: int
    gram: tuple[tuple[Fraction, ...], ...]
    roots: tuple[tuple[tuple[Fraction, ...], int], ...]
    label: str = ""

    @classmethod
    def build(
        cls,
        gram: Sequence[Sequence],
        roots: Sequence[tuple[Sequence, int]],
        label: str = "",
    ) -> RestrictedRootSystem:
        g = tuple(tuple(Fraction(x) for x in row) for row in gram)
        rs = tuple((tuple(Fraction(x) for x in vec), int(mult)) for vec, mult in roots)
        return cls(len(g), g, rs, label)

    def validate(self) -> None:
        n = self.ambient_dim
        if n < 1 or len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise ValueError(f"{self.label}: Gram matrix must be {n}x{n}")
        if any(self.gram[i][j] != self.gram[j][i] for i in range(n) for j in range(n)):
            raise ValueError(f"{self.label}: Gram matrix is not symmetric")
        for m in range(1, n + 1):
            if _det([row[:m] for row in self.gram[:m]]) <= 0:
                raise ValueError(f"{self.label}: Gram matrix is not positive definite")
        if not self.roots:
            raise ValueError(f"{self.label}: empty root list")
        for vec, mult in self.roots:
            if len(vec) != n:
                raise ValueError(f"{self.label}: root {vec} has wrong dimension")
            if mult < 1:
                raise ValueError(f"{self.label}: multiplicity must be positive")
            if all(x == 0 for x in vec):
                raise ValueError(f"{self.label}: zero root")

    def scaled(self, s) -> RestrictedRootSystem:
        """Same roots with the Gram matrix multiplied by s."""
        s = Fraction(s)
        gram = tuple(tuple(s * x for x in row) for row in self.gram)
        return RestrictedRootSystem(self.ambient_dim, gram, self.roots, self.label)

    def gram_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.gram])

    def root_array(self) -> np.ndarray:
        return np.array([[float(x) for x in vec] for vec, _ in self.roots])


def _det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    # exact Gaussian elimination; matrices here are tiny
    a = [list(r) for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
    return det


def c1_from_restricted_roots(rrs: RestrictedRootSystem) -> float:
    """max over restricted roots of the dual norm sqrt(alpha^T Q^-1 alpha).

    This is the sup over unit H in a of max |alpha(H)|, i.e. C1.
    """
    rrs.validate()
    q = rrs.gram_array()
    chol = np.linalg.cholesky(q)
    roots = rrs.root_array()
    # ||alpha||^2_{Q^-1} = |L^-1 alpha|^2 with Q = L L^T
    w = np.linalg.solve(chol, roots.T)
    return float(np.sqrt(np.max(np.sum(w * w, axis=0))))


def verify_classification(
    space: SymmetricSpaceSpec, rrs: RestrictedRootSystem | None = None
) -> bool:
    """Check the classifier's C1 against the restricted-root computation."""
    if rrs is None:
        rrs = root_system_for(space.id)
    return abs(c1_from_restricted_roots(rrs) - classify_constants(space).c1) <= VERIFY_TOL


# --- shipped restricted-root data -----------------------------------------

H = Fraction(1, 2)


def hyperbolic_roots(n: int) -> RestrictedRootSystem:
    """SO_0(n,1): rank one, a single restricted root with multiplicity n - 1.

    For n >= 3 the restricted root is x1 with |x1| = 1; for n = 2 the
    algebra is sl(2,R) and its only root is itself long (length sqrt 2).
    """
    if n < 2:
        raise ValueError("hyperbolic space needs n >= 2")
    gram = [[H]] if n == 2 else [[1]]
    return RestrictedRootSystem.build(gram, [([1], n - 1)], label=f"H.{n}")


def complex_hyperbolic_roots(n: int) -> RestrictedRootSystem:
    """SU(n,1): BC1 with H = s(e_1 - e_{n+1}) of squared norm 2 s^2."""
    if n < 1:
        raise ValueError("complex hyperbolic space needs n >= 1")
    roots = [([2], 1)]
    if n > 1:
        roots.append(([1], 2 * (n - 1)))
    return RestrictedRootSystem.build([[2]], roots, label=f"CH.{n}")


def aii_roots(n: int) -> RestrictedRootSystem:
    """SU*(2n)/Sp(n): roots t_i - t_j (mult 4) on {sum t = 0}, |H|^2 = 2 sum t_i^2.

    Coordinates s_1..s_{n-1} with t_i = s_i and t_n = -(s_1 + ... + s_{n-1}),
    so the Gram matrix is 2 (I + J).
    """
    if n < 2:
        raise ValueError("AII needs n >= 2")
    m = n - 1
    gram = [[2 * ((i == j) + 1) for j in range(m)] for i in range(m)]

    def t(i: int) -> list[int]:
        if i < m:
            return [int(j == i) for j in range(m)]
        return [-1] * m

    roots = [
        ([a - b for a, b in zip(t(i), t(j))], 4)
        for i in range(n)
        for j in range(i + 1, n)
    ]
    return RestrictedRootSystem.build(gram, roots, label=f"AII.{n}")


def _fii_roots() -> RestrictedRootSystem:
    # a spanned by the short root x1; BC1 with multiplicities 7 and 8
    return RestrictedRootSystem.build([[1]], [([1], 7), ([H], 8)], label="OH.2")


def _eiv_roots() -> RestrictedRootSystem:
    # a = {(t1, t2, t2, t2, t2, -2 t2)}, form (4/3)(t1^2 + t1 t2 + 7 t2^2)
    gram = [[Fraction(4, 3), Fraction(2, 3)], [Fraction(2, 3), Fraction(28, 3)]]
    roots = [([1, -1], 8), ([1, 2], 8), ([0, 3], 8)]
    return RestrictedRootSystem.build(gram, roots, label="EIV")


def shipped_root_systems() -> dict[str, RestrictedRootSystem]:
    """Restricted-root data keyed by catalog id."""
    data = {
        "OH.2": _fii_roots(),
        "EIV": _eiv_roots(),
        "AII.2": aii_roots(2),
        "AII.3": aii_roots(3),
    }
    for n in (2, 3, 4, 5, 6):
        data[f"H.{n}"] = hyperbolic_roots(n)
    for n in (2, 3, 4):
        data[f"CH.{n}"] = complex_hyperbolic_roots(n)
    return data


def root_system_for(space_id: str) -> RestrictedRootSystem:
    """Shipped data for ``space_id``; the rank-one families cover every n."""
    data = shipped_root_systems()
    if space_id in data:
        return data[space_id]
    family, _, tail = space_id.partition(".")
    if tail.isdigit():
        builders = {"H": hyperbolic_roots, "CH": complex_hyperbolic_roots, "AII": aii_roots}
        if family in builders:
            return builders[family](int(tail))
    raise MissingRootDataError(f"no restricted-root data for {space_id!r}")
