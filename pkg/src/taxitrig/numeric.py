"""Scalars, powers of i, taxicab constants and t-radian angle reduction.

A :class:`Scalar` wraps either a :class:`fractions.Fraction` (the *exact*
backend) or a Python ``float`` (the *float* backend).  Arithmetic between
the two backends is refused instead of silently coercing, so an exact
computation can never leak into floating point.  Plain ``int`` operands are
backend neutral and may be combined with either.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import BackendMismatch, DomainError


class Backend(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"

    @classmethod
    def parse(cls, name: str) -> "Backend":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise DomainError(f"unknown numeric mode {name!r}; expected 'exact' or 'float'") from None


Number = Union[int, Fraction, float]


class Scalar:
    """An immutable real number tagged with its numeric backend."""

    __slots__ = ("_v",)

    def __init__(self, value: Union[Number, "Scalar"]):
        if isinstance(value, Scalar):
            value = value._v
        if isinstance(value, float):
            self._v = value
        elif isinstance(value, Rational):
            self._v = Fraction(value)
        else:
            raise TypeError(f"cannot build a Scalar from {type(value).__name__}")

    # -- construction -----------------------------------------------------

    @classmethod
    def _wrap(cls, value: Union[Fraction, float]) -> "Scalar":
        # trusted fast path: value is already a Fraction or float
        obj = object.__new__(cls)
        obj._v = value
        return obj

    @classmethod
    def exact(cls, value: Union[int, Fraction, str]) -> "Scalar":
        if isinstance(value, float):
            raise BackendMismatch("use Scalar.from_float for float values")
        return cls(Fraction(value))

    @classmethod
    def from_float(cls, value: float) -> "Scalar":
        return cls(float(value))

    @classmethod
    def parse(cls, text: str, backend: Backend = Backend.EXACT) -> "Scalar":
        """Parse ``"p/q"``, integer or decimal text into a finite scalar.

        >>> str(Scalar.parse("9/2"))
        '9/2'
        >>> str(Scalar.parse("0.25", Backend.FLOAT))
        '0.25'
        """
        text = text.strip()
        try:
            exact = Fraction(text)
        except (ValueError, ZeroDivisionError):
            if backend is Backend.EXACT:
                raise DomainError(f"not a rational or terminating decimal: {text!r}") from None
            try:
                value = float(text)
            except ValueError:
                raise DomainError(f"not a number: {text!r}") from None
            if not math.isfinite(value):
                raise DomainError(f"non-finite value: {text!r}")
            return cls(value)
        if backend is Backend.EXACT:
            return cls(exact)
        try:
            value = float(exact)
        except OverflowError:
            value = math.inf
        if not math.isfinite(value):
            raise DomainError(f"value overflows float: {text!r}")
        return cls(value)

    def lift(self, value: Number) -> "Scalar":
        """Return ``value`` as a scalar on this scalar's backend."""
        if type(self._v) is float:
            return Scalar._wrap(float(value))
        if type(value) is Fraction:
            return Scalar._wrap(value)
        if isinstance(value, float):
            raise BackendMismatch("cannot lift a float onto the exact backend")
        return Scalar(value)

    # -- inspection -------------------------------------------------------

    @property
    def value(self) -> Union[Fraction, float]:
        return self._v

    @property
    def backend(self) -> Backend:
        return Backend.FLOAT if type(self._v) is float else Backend.EXACT

    @property
    def is_exact(self) -> bool:
        return type(self._v) is not float

    def is_finite(self) -> bool:
        return self.is_exact or math.isfinite(self._v)

    def floor(self) -> int:
        return math.floor(self._v)

    def __float__(self) -> float:
        return float(self._v)

    def __bool__(self) -> bool:
        return self._v != 0

    # -- arithmetic -------------------------------------------------------

    def _other(self, other):
        if isinstance(other, Scalar):
            if (type(self._v) is float) is not (type(other._v) is float):
                raise BackendMismatch(
                    f"mixed-backend arithmetic: {self.backend.value} with {other.backend.value}"
                )
            return other._v
        if isinstance(other, bool) or isinstance(other, int):
            return other
        if isinstance(other, (float, Fraction)):
            if (type(self._v) is float) is not isinstance(other, float):
                raise BackendMismatch(
                    f"mixed-backend arithmetic: {self.backend.value} with {type(other).__name__}"
                )
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar._wrap(self._v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar._wrap(self._v - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar._wrap(o - self._v)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar._wrap(self._v * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar._wrap(self._v / o)

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar._wrap(o / self._v)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        return Scalar._wrap(self._v**exponent)

    def __neg__(self):
        return Scalar._wrap(-self._v)

    def __pos__(self):
        return self

    def __abs__(self):
        return Scalar._wrap(abs(self._v))

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.is_exact is other.is_exact and self._v == other._v
        if isinstance(other, int):
            return self._v == other
        if isinstance(other, (float, Fraction)):
            return self.is_exact is not isinstance(other, float) and self._v == other
        return NotImplemented

    def __hash__(self):
        return hash((self.is_exact, self._v))

    def __lt__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._v < o

    def __le__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._v <= o

    def __gt__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._v > o

    def __ge__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._v >= o

    # -- formatting -------------------------------------------------------

    def __str__(self) -> str:
        if type(self._v) is float:
            return f"{self._v:.17g}"
        return str(self._v)

    def __repr__(self) -> str:
        return f"Scalar({self.backend.value}:{self})"


def as_scalar(value: Union[Number, Scalar]) -> Scalar:
    """Wrap a plain number; ints and fractions become exact, floats float."""
    return value if isinstance(value, Scalar) else Scalar(value)


@dataclass(frozen=True)
class TaxicabConstants:
    pi_t: Scalar
    period: Scalar
    quarter_period: Scalar


def constants(backend: Backend = Backend.EXACT) -> TaxicabConstants:
    """pi_t = 4, the half-circumference of the unit taxicab circle."""
    one = Scalar(1.0) if backend is Backend.FLOAT else Scalar(1)
    pi_t = one * 4
    return TaxicabConstants(pi_t=pi_t, period=2 * pi_t, quarter_period=pi_t / 2)


PI_T = 4
PERIOD = 8


@dataclass(frozen=True)
class UnitImaginaryPower:
    """``i**exponent`` held as an integer (real, imag) pair."""

    exponent: int
    real: int
    imag: int

    def __mul__(self, other: "UnitImaginaryPower") -> "UnitImaginaryPower":
        return i_pow(self.exponent + other.exponent)

    def times(self, x: Scalar) -> tuple[Scalar, Scalar]:
        """Complex product ``i**n * x`` for real ``x``, as a (re, im) pair."""
        return self.real * x, self.imag * x

    @property
    def sign(self) -> int:
        """The real value of an even power, +1 or -1."""
        if self.imag:
            raise DomainError(f"i**{self.exponent} is not real")
        return self.real


_I_CYCLE = ((1, 0), (0, 1), (-1, 0), (0, -1))


def i_pow(exponent: int) -> UnitImaginaryPower:
    re, im = _I_CYCLE[exponent % 4]  # Python's % is already the nonnegative modulus
    return UnitImaginaryPower(exponent, re, im)


@dataclass(frozen=True)
class Angle:
    """A t-radian angle together with its canonical reduction.

    ``reduced`` lies in [0, 8); ``branch_k`` (equal to ``quadrant``) picks the
    2-wide interval [2(k-1), 2k) containing it.
    """

    raw: Scalar
    reduced: Scalar
    branch_k: int
    quadrant: int

    @property
    def backend(self) -> Backend:
        return self.reduced.backend

    @property
    def at_breakpoint(self) -> bool:
        return self.reduced == 2 * (self.branch_k - 1)


def reduce_angle(theta: Union[Number, Scalar]) -> Angle:
    """Reduce ``theta`` modulo the period 8 into [0, 8).

    >>> a = reduce_angle(-1)
    >>> str(a.reduced), a.branch_k
    ('7', 4)
    """
    theta = as_scalar(theta)
    v = theta.value
    if type(v) is float:
        if not math.isfinite(v):
            raise DomainError(f"angle must be finite, got {v!r}")
        r = v - round(v / PERIOD) * PERIOD
        if r < 0:
            r += PERIOD
        if r >= PERIOD:
            # -tiny + 8 rounds up to 8.0
            r = 0.0
        reduced = Scalar(r)
    else:
        reduced = Scalar(v - PERIOD * math.floor(v / PERIOD))
    k = math.floor(reduced.value / 2) + 1
    return Angle(raw=theta, reduced=reduced, branch_k=k, quadrant=k)


def as_angle(theta: Union[Angle, Number, Scalar]) -> Angle:
    return theta if isinstance(theta, Angle) else reduce_angle(theta)
