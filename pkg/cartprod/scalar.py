"""Scalars: exact Gaussian integers and approximate double-precision complexes."""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .defaults import EXACT_LIMIT
from .errors import ModeError, ScalarOverflowError

Number = Union[int, float]


class Mode(Enum):
    """Arithmetic mode of a scalar or matrix."""
    EXACT = "exact"        # Gaussian integers, overflow-checked
    APPROX = "approx"      # double-precision real/imaginary parts

    @staticmethod
    def join(a: "Mode", b: "Mode") -> "Mode":
        """Mode of a result combining operands of modes a and b."""
        if a is Mode.APPROX or b is Mode.APPROX:
            return Mode.APPROX
        return Mode.EXACT


def _checked(value: int) -> int:
    if value > EXACT_LIMIT or value < -EXACT_LIMIT - 1:
        raise ScalarOverflowError(f"exact component {value} exceeds the signed 64-bit range")
    return value


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True, eq=False, slots=True)
class Scalar:
    """A tagged complex value.

    Exact scalars hold integer components and every arithmetic result is
    range-checked; approximate scalars hold floats and compare with a
    caller-supplied tolerance.
    """
    re: Number
    im: Number = 0
    mode: Mode = Mode.EXACT

    def __post_init__(self) -> None:
        if self.mode is Mode.EXACT:
            if not (_is_int(self.re) and _is_int(self.im)):
                raise ModeError(f"exact scalar needs integer components, got ({self.re!r}, {self.im!r})")
            _checked(self.re)
            _checked(self.im)
        else:
            object.__setattr__(self, "re", float(self.re))
            object.__setattr__(self, "im", float(self.im))

    @classmethod
    def exact(cls, re: int, im: int = 0) -> "Scalar":
        return cls(re, im, Mode.EXACT)

    @classmethod
    def approx(cls, re: float, im: float = 0.0) -> "Scalar":
        return cls(float(re), float(im), Mode.APPROX)

    @classmethod
    def of(cls, value: Union["Scalar", int, float, complex]) -> "Scalar":
        """Coerce a Python number: ints are exact, floats and complexes approximate."""
        coerced = _coerce(value)
        if coerced is NotImplemented:
            raise ModeError(f"cannot interpret {value!r} as a scalar")
        return coerced

    # Arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if Mode.join(self.mode, other.mode) is Mode.EXACT:
            return Scalar(_checked(self.re + other.re), _checked(self.im + other.im))
        return Scalar(self.re + other.re, self.im + other.im, Mode.APPROX)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if Mode.join(self.mode, other.mode) is Mode.EXACT:
            return Scalar(_checked(self.re - other.re), _checked(self.im - other.im))
        return Scalar(self.re - other.re, self.im - other.im, Mode.APPROX)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if Mode.join(self.mode, other.mode) is Mode.EXACT:
            ac, bd = _checked(a * c), _checked(b * d)
            ad, bc = _checked(a * d), _checked(b * c)
            return Scalar(_checked(ac - bd), _checked(ad + bc))
        return Scalar(a * c - b * d, a * d + b * c, Mode.APPROX)

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        if self.mode is Mode.EXACT:
            return Scalar(_checked(-self.re), _checked(-self.im))
        return Scalar(-self.re, -self.im, Mode.APPROX)

    def conj(self) -> "Scalar":
        if self.mode is Mode.EXACT:
            return Scalar(self.re, _checked(-self.im))
        return Scalar(self.re, -self.im, Mode.APPROX)

    def exact_div(self, divisor: int) -> Optional["Scalar"]:
        """Divide by a positive integer.

        Exact scalars return None unless both components divide evenly;
        approximate scalars always divide.
        """
        if divisor == 0:
            raise ZeroDivisionError("scalar division by zero")
        if self.mode is Mode.APPROX:
            return Scalar(self.re / divisor, self.im / divisor, Mode.APPROX)
        if self.re % divisor or self.im % divisor:
            return None
        return Scalar(self.re // divisor, self.im // divisor)

    # Comparison

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def close_to(self, other, tol: float = 0.0) -> bool:
        """Equality within an absolute tolerance on the modulus of the difference."""
        other = Scalar.of(other)
        if tol == 0.0:
            return self == other
        return abs(self.to_complex() - other.to_complex()) <= tol

    def is_zero(self, tol: float = 0.0) -> bool:
        if tol == 0.0:
            return self.re == 0 and self.im == 0
        return self.magnitude() <= tol

    # Conversion

    def magnitude(self) -> float:
        return math.hypot(self.re, self.im)

    def is_real(self, tol: float = 0.0) -> bool:
        return abs(self.im) <= tol

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def to_approx(self) -> "Scalar":
        if self.mode is Mode.APPROX:
            return self
        return Scalar(float(self.re), float(self.im), Mode.APPROX)

    def to_pair(self) -> list:
        """JSON form: [re, im]."""
        return [self.re, self.im]

    def __float__(self) -> float:
        if self.im != 0:
            raise ModeError(f"{self} has a non-zero imaginary part")
        return float(self.re)

    def __int__(self) -> int:
        if self.mode is not Mode.EXACT or self.im != 0:
            raise ModeError(f"{self} is not an exact real integer")
        return self.re

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        mag = abs(self.im)
        if self.re == 0:
            return f"{'-' if sign == '-' else ''}{mag}i"
        return f"{self.re}{sign}{mag}i"


ZERO = Scalar.exact(0)
ONE = Scalar.exact(1)


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if _is_int(value):
        return Scalar(value, 0, Mode.EXACT)
    if isinstance(value, float):
        return Scalar(value, 0.0, Mode.APPROX)
    if isinstance(value, complex):
        return Scalar(value.real, value.imag, Mode.APPROX)
    return NotImplemented
