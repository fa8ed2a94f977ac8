"""Complex scalars carried either exactly (Gaussian integers) or as doubles.

The exact representation a+bi with integer a, b supports addition,
multiplication, conjugation and squared magnitude without rounding, which is
what lets the dimension-8 certificates run at zero tolerance.  Any arithmetic
mixing an exact scalar with a float one silently degrades to float.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass


@dataclass(frozen=True)
class Scalar:
    re: float
    im: float
    exact: bool = False

    @staticmethod
    def gauss(a: int, b: int = 0) -> "Scalar":
        """Exact Gaussian integer a + bi."""
        return Scalar(int(a), int(b), True)

    @staticmethod
    def from_complex(z: complex) -> "Scalar":
        return Scalar(float(z.real), float(z.imag), False)

    @staticmethod
    def coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, int):
            return Scalar.gauss(value, 0)
        if isinstance(value, complex):
            # integer-valued literals like 2+1j stay on the float path;
            # exactness must be requested explicitly via gauss()
            return Scalar.from_complex(value)
        if isinstance(value, float):
            return Scalar(value, 0.0, False)
        raise TypeError(f"cannot interpret {value!r} as a Scalar")

    def __add__(self, other: "Scalar") -> "Scalar":
        other = Scalar.coerce(other)
        if self.exact and other.exact:
            return Scalar.gauss(self.re + other.re, self.im + other.im)
        return Scalar(self.re + other.re, self.im + other.im, False)

    def __mul__(self, other: "Scalar") -> "Scalar":
        other = Scalar.coerce(other)
        re = self.re * other.re - self.im * other.im
        im = self.re * other.im + self.im * other.re
        if self.exact and other.exact:
            return Scalar.gauss(re, im)
        return Scalar(re, im, False)

    def __neg__(self) -> "Scalar":
        if self.exact:
            return Scalar.gauss(-self.re, -self.im)
        return Scalar(-self.re, -self.im, False)

    def conj(self) -> "Scalar":
        if self.exact:
            return Scalar.gauss(self.re, -self.im)
        return Scalar(self.re, -self.im, False)

    def abs2(self):
        """Squared magnitude; an int on the exact path."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return abs(complex(self.re, self.im))

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        return str(self.to_complex())


ONE = Scalar.gauss(1, 0)
ZERO = Scalar.gauss(0, 0)
I_UNIT = Scalar.gauss(0, 1)

#: the units of the Gaussian integers; the only phases that keep a line set
#: on the exact arithmetic path
GAUSSIAN_UNITS = (Scalar.gauss(1, 0), Scalar.gauss(0, 1),
                  Scalar.gauss(-1, 0), Scalar.gauss(0, -1))


def root_of_unity(numerator: int, denominator: int) -> Scalar:
    """e^(2*pi*i*numerator/denominator), exact when the order divides 4."""
    numerator %= denominator
    if 4 % denominator == 0:
        quarter = numerator * (4 // denominator) % 4
        return GAUSSIAN_UNITS[quarter]
    return Scalar.from_complex(cmath.exp(2j * cmath.pi * numerator / denominator))
