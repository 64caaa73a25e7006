"""Sign and log10-magnitude representation of reals.

Volume bounds for large groups sit far outside the double range once the
intermediate factors (factorials, powers of pi, tiny integrals) are formed
separately, so every pipeline stage multiplies in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = ["LogReal", "log10_int", "log10_rational"]


def log10_int(n: int) -> float:
    """log10 of a positive integer of any size, without float overflow."""
    if n <= 0:
        raise ValueError(f"log10 of non-positive integer {n}")
    return math.log10(n)


def log10_rational(q: Rational) -> float:
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"log10 of non-positive rational {q}")
    return log10_int(q.numerator) - log10_int(q.denominator)


@dataclass(frozen=True)
class LogReal:
    sign: int
    log10_mag: float = 0.0

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.sign != 0 and not math.isfinite(self.log10_mag):
            raise ValueError(f"non-finite magnitude {self.log10_mag}")

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls) -> LogReal:
        return cls(0, 0.0)

    @classmethod
    def one(cls) -> LogReal:
        return cls(1, 0.0)

    @classmethod
    def from_log10(cls, log10_mag: float, sign: int = 1) -> LogReal:
        return cls(sign, float(log10_mag))

    @classmethod
    def from_float(cls, x: float) -> LogReal:
        if x == 0:
            return cls.zero()
        if not math.isfinite(x):
            raise ValueError(f"cannot represent {x}")
        return cls(1 if x > 0 else -1, math.log10(abs(x)))

    @classmethod
    def from_rational(cls, q: Rational | int) -> LogReal:
        """Exact big-integer route: no precision is lost before the log."""
        q = Fraction(q)
        if q == 0:
            return cls.zero()
        return cls(1 if q > 0 else -1, log10_rational(abs(q)))

    # arithmetic -------------------------------------------------------

    def __mul__(self, other: LogReal | float | int) -> LogReal:
        other = _coerce(other)
        if self.sign == 0 or other.sign == 0:
            return LogReal.zero()
        return LogReal(self.sign * other.sign, self.log10_mag + other.log10_mag)

    __rmul__ = __mul__

    def __truediv__(self, other: LogReal | float | int) -> LogReal:
        other = _coerce(other)
        if other.sign == 0:
            raise ZeroDivisionError("LogReal division by zero")
        if self.sign == 0:
            return LogReal.zero()
        return LogReal(self.sign * other.sign, self.log10_mag - other.log10_mag)

    def __rtruediv__(self, other: float | int) -> LogReal:
        return _coerce(other) / self

    def __pow__(self, exponent: float | int | Fraction) -> LogReal:
        if self.sign == 0:
            if exponent <= 0:
                raise ZeroDivisionError("zero to a non-positive power")
            return LogReal.zero()
        if self.sign < 0:
            if not (isinstance(exponent, int) or Fraction(exponent).denominator == 1):
                raise ValueError("negative base with non-integer exponent")
            sign = -1 if int(exponent) % 2 else 1
        else:
            sign = 1
        return LogReal(sign, self.log10_mag * float(exponent))

    def reciprocal(self) -> LogReal:
        return LogReal.one() / self

    def __neg__(self) -> LogReal:
        return LogReal(-self.sign, self.log10_mag)

    def __abs__(self) -> LogReal:
        return LogReal(abs(self.sign), self.log10_mag)

    # conversion -------------------------------------------------------

    @property
    def log10(self) -> float:
        if self.sign <= 0:
            raise ValueError("log10 of a non-positive LogReal")
        return self.log10_mag

    @property
    def ln(self) -> float:
        return self.log10 * math.log(10.0)

    def __float__(self) -> float:
        """Plain float; underflows to 0.0 and overflows to +-inf."""
        if self.sign == 0:
            return 0.0
        if self.log10_mag > 308.5:
            return math.copysign(math.inf, self.sign)
        return self.sign * 10.0**self.log10_mag

    def mantissa_exponent(self, digits: int = 6) -> tuple[float, int]:
        """(m, e) with 1 <= |m| < 10 rounded to ``digits`` significant digits."""
        if self.sign == 0:
            return 0.0, 0
        e = math.floor(self.log10_mag)
        m = round(10.0 ** (self.log10_mag - e), digits - 1)
        if m >= 10.0:
            m, e = round(m / 10.0, digits - 1), e + 1
        return self.sign * m, e

    def scientific(self, digits: int = 6) -> str:
        """Format as ``m.mmmmme-XX`` with ``digits`` significant digits."""
        m, e = self.mantissa_exponent(digits)
        return f"{m:.{digits - 1}f}e{e:+03d}"

    def isclose(self, other: LogReal, rel_tol: float = 1e-9) -> bool:
        if self.sign != other.sign:
            return False
        if self.sign == 0:
            return True
        return abs(self.log10_mag - other.log10_mag) <= math.log10(1.0 + rel_tol)

    def __repr__(self) -> str:
        if self.sign == 0:
            return "LogReal(0)"
        return f"LogReal({self.scientific(10)})"


def _coerce(x: LogReal | float | int) -> LogReal:
    if isinstance(x, LogReal):
        return x
    if isinstance(x, (int, Fraction)):
        return LogReal.from_rational(x)
    return LogReal.from_float(float(x))
