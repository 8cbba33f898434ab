"""Extended-exponent complex arithmetic.

Values are carried as ``mantissa * exp(exponent)`` with the exponent on the
natural-log scale, so quantities like (log 2)^800 / 2^909 (about e^-922) stay
representable with full mantissa precision.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

_LN2 = math.log(2.0)

# exp() of anything below this underflows a float mantissa entirely; a smaller
# addend is dropped (it is below one ulp of the larger one anyway).
_ALIGN_LIMIT = 80.0


@dataclass(frozen=True)
class ScaledComplex:
    """Complex number mantissa * e^exponent with |mantissa| in [1, 2) or 0."""

    mantissa: complex
    exponent: float

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_complex(z: complex) -> "ScaledComplex":
        return _normalize(complex(z), 0.0)

    @staticmethod
    def from_parts(mantissa: complex, exponent: float) -> "ScaledComplex":
        return _normalize(complex(mantissa), float(exponent))

    @staticmethod
    def from_polar(log_mag: float, phase: float) -> "ScaledComplex":
        """Value with |value| = e^log_mag and argument ``phase``."""
        return _normalize(cmath.exp(1j * phase), log_mag)

    @staticmethod
    def zero() -> "ScaledComplex":
        return _ZERO

    @staticmethod
    def one() -> "ScaledComplex":
        return _ONE

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def log_abs(self) -> float:
        """Natural log of |value|; -inf for zero."""
        if self.mantissa == 0:
            return -math.inf
        return self.exponent + math.log(abs(self.mantissa))

    def arg(self) -> float:
        return cmath.phase(self.mantissa)

    def to_complex(self) -> complex:
        """Collapse to a plain complex; under/overflows saturate to 0/inf."""
        if self.mantissa == 0:
            return 0j
        if self.exponent < -745.0:
            return 0j
        if self.exponent > 709.0:
            return complex(math.inf * self.mantissa.real,
                           math.inf * self.mantissa.imag)
        return self.mantissa * math.exp(self.exponent)

    def abs(self) -> "ScaledComplex":
        """Magnitude as a scaled nonnegative real."""
        if self.mantissa == 0:
            return _ZERO
        return ScaledComplex(complex(abs(self.mantissa), 0.0), self.exponent)

    # -- arithmetic ---------------------------------------------------

    def __neg__(self) -> "ScaledComplex":
        return ScaledComplex(-self.mantissa, self.exponent)

    def __add__(self, other: "ScaledComplex") -> "ScaledComplex":
        if self.mantissa == 0:
            return other
        if other.mantissa == 0:
            return self
        if self.exponent >= other.exponent:
            big, small = self, other
        else:
            big, small = other, self
        d = big.exponent - small.exponent
        if d > _ALIGN_LIMIT:
            return big
        return _normalize(big.mantissa + small.mantissa * math.exp(-d),
                          big.exponent)

    def __sub__(self, other: "ScaledComplex") -> "ScaledComplex":
        return self + (-other)

    def __mul__(self, other) -> "ScaledComplex":
        if isinstance(other, ScaledComplex):
            if self.mantissa == 0 or other.mantissa == 0:
                return _ZERO
            return _normalize(self.mantissa * other.mantissa,
                              self.exponent + other.exponent)
        if self.mantissa == 0 or other == 0:
            return _ZERO
        return _normalize(self.mantissa * other, self.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScaledComplex":
        if isinstance(other, ScaledComplex):
            if other.mantissa == 0:
                raise ZeroDivisionError("scaled complex division by zero")
            if self.mantissa == 0:
                return _ZERO
            return _normalize(self.mantissa / other.mantissa,
                              self.exponent - other.exponent)
        return _normalize(self.mantissa / other, self.exponent)


def _normalize(m: complex, e: float) -> ScaledComplex:
    if m == 0:
        return _ZERO
    a = abs(m)
    if not math.isfinite(a):
        raise OverflowError("non-finite mantissa in scaled arithmetic")
    shift = math.floor(math.log2(a))
    if shift != 0:
        m = complex(math.ldexp(m.real, -shift), math.ldexp(m.imag, -shift))
        e = e + shift * _LN2
        # guard against a boundary slip from log2 rounding
        a = abs(m)
        if a >= 2.0:
            m = complex(m.real / 2.0, m.imag / 2.0)
            e += _LN2
        elif a < 1.0:
            m = complex(m.real * 2.0, m.imag * 2.0)
            e -= _LN2
    return ScaledComplex(m, e)


_ZERO = ScaledComplex(0j, 0.0)
_ONE = ScaledComplex(1 + 0j, 0.0)
