"""The six taxicab trigonometric functions in t-radians.

Sine and cosine come in three interchangeable representations:

* ``*_piecewise``: the plain branch definitions on [0, 8),
* ``*_closed_literal``: a single formula over the branch index ``k`` that
  selects terms with parity factors ``1 + (-1)**k`` and signs them with
  powers of ``i``, evaluated with genuine complex pairs,
* ``*_pseudo``: the parity-split form, where the powers of ``i`` reduce to
  real signs.

Tangent, cotangent, secant and cosecant are built from the pseudo branches
and return :class:`Pole` where their denominator is exactly zero.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import InvariantViolation, UsageError
from .numeric import Angle, Number, Scalar, as_angle, i_pow
from .results import EvalResult, Finite, Pole

AngleLike = Union[Angle, Scalar, Number]

HALF = Fraction(1, 2)


class TrigFunction(enum.Enum):
    SIN = "sin"
    COS = "cos"
    TAN = "tan"
    COT = "cot"
    SEC = "sec"
    CSC = "csc"

    @classmethod
    def parse(cls, name: Union[str, "TrigFunction"]) -> "TrigFunction":
        if isinstance(name, cls):
            return name
        try:
            return cls(name.strip().lower())
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise UsageError(f"unknown function {name!r}; expected one of {names}") from None

    def __str__(self) -> str:
        return self.value


class Branch(NamedTuple):
    """An affine branch ``intercept + slope * theta``."""

    intercept: Fraction
    slope: Fraction

    def at(self, theta: Scalar) -> Scalar:
        return theta.lift(self.intercept) + theta.lift(self.slope) * theta


@lru_cache(maxsize=None)
def cos_branch(k: int) -> Branch:
    """Cosine on [2(k-1), 2k) in pseudo closed form."""
    if k % 2 == 0:
        s = i_pow(k - 2).sign
        return Branch(Fraction(s * (k - 1)), -s * HALF)
    s = i_pow(k - 1).sign
    return Branch(Fraction(s * k), -s * HALF)


@lru_cache(maxsize=None)
def sin_branch(k: int) -> Branch:
    """Sine on [2(k-1), 2k) in pseudo closed form."""
    if k % 2 == 0:
        s = i_pow(k - 2).sign
        return Branch(Fraction(s * k), -s * HALF)
    s = i_pow(k - 1).sign
    return Branch(Fraction(s * (1 - k)), s * HALF)


# -- sine and cosine ------------------------------------------------------


def cos_piecewise(a: AngleLike) -> Scalar:
    t = as_angle(a).reduced
    if t < 4:
        return 1 - t / 2
    return t / 2 - 3


def sin_piecewise(a: AngleLike) -> Scalar:
    # canonical re-indexing of the [-2, 10) definition onto [0, 8)
    t = as_angle(a).reduced
    if t < 2:
        return t / 2
    if t < 6:
        return 2 - t / 2
    return t / 2 - 4


def _literal(k: int, even_term: Scalar, odd_term: Scalar) -> Scalar:
    even_sel = 1 + (-1) ** k
    odd_sel = 1 + (-1) ** (k + 1)
    re_e, im_e = i_pow(k - 2).times(even_term)
    re_o, im_o = i_pow(k - 1).times(odd_term)
    re = (even_sel * re_e + odd_sel * re_o) / 2
    im = (even_sel * im_e + odd_sel * im_o) / 2
    if im != 0:
        raise InvariantViolation(f"closed form left an imaginary part {im} at k={k}")
    return re


def cos_closed_literal(a: AngleLike) -> Scalar:
    a = as_angle(a)
    k, t = a.branch_k, a.reduced
    return _literal(k, k - 1 - t / 2, k - t / 2)


def sin_closed_literal(a: AngleLike) -> Scalar:
    a = as_angle(a)
    k, t = a.branch_k, a.reduced
    return _literal(k, k - t / 2, 1 - k + t / 2)


def cos_pseudo(a: AngleLike) -> Scalar:
    a = as_angle(a)
    return cos_branch(a.branch_k).at(a.reduced)


def sin_pseudo(a: AngleLike) -> Scalar:
    a = as_angle(a)
    return sin_branch(a.branch_k).at(a.reduced)


# -- ratios and reciprocals ----------------------------------------------


def _ratio(num: Scalar, den: Scalar) -> EvalResult:
    if den == 0:
        return Pole()
    return Finite(num / den)


def tan(a: AngleLike) -> EvalResult:
    a = as_angle(a)
    k, t = a.branch_k, a.reduced
    return _ratio(sin_branch(k).at(t), cos_branch(k).at(t))


def cot(a: AngleLike) -> EvalResult:
    a = as_angle(a)
    k, t = a.branch_k, a.reduced
    return _ratio(cos_branch(k).at(t), sin_branch(k).at(t))


def sec(a: AngleLike) -> EvalResult:
    a = as_angle(a)
    return _ratio(a.reduced.lift(1), cos_branch(a.branch_k).at(a.reduced))


def csc(a: AngleLike) -> EvalResult:
    a = as_angle(a)
    return _ratio(a.reduced.lift(1), sin_branch(a.branch_k).at(a.reduced))


_EVALUATORS = {
    TrigFunction.SIN: lambda a: Finite(sin_piecewise(a)),
    TrigFunction.COS: lambda a: Finite(cos_piecewise(a)),
    TrigFunction.TAN: tan,
    TrigFunction.COT: cot,
    TrigFunction.SEC: sec,
    TrigFunction.CSC: csc,
}


def evaluate(fn: Union[TrigFunction, str], a: AngleLike) -> EvalResult:
    """Evaluate any of the six functions, e.g. ``evaluate("sec", 1)``."""
    return _EVALUATORS[TrigFunction.parse(fn)](as_angle(a))
