"""Analytic derivatives of the taxicab trig functions.

Every branch of sine and cosine is affine with slope +-1/2, so each
derivative is computed on a branch and then checked against the branch on
the other side of a breakpoint: equal one-sided values give a
:class:`Finite` result, unequal ones a :class:`Corner`.

The secant and cosecant derivatives come in several algebraically
equivalent forms, chosen with :class:`DerivForm`:

``DIRECT``
    differentiate the affine branch expression itself;
``PRODUCT``
    ``1/2 sec (tan -+ 1)`` and ``-1/2 csc (cot -+ 1)``, sign by branch parity;
``SQUARED``
    ``+-1/2 sec**2`` and ``-+1/2 csc**2``, sign by region
    (sec: + on (0, 4), - on (4, 8); csc: - on (6, 8) u (0, 2), + on (2, 6));
``QUOTIENT``
    quotient/reciprocal rule applied to sin, cos and their derivatives.

Tangent and cotangent accept ``DIRECT``, ``SQUARED`` (``1/2 sec**2``,
``-1/2 csc**2``) and ``QUOTIENT``; sine and cosine only ``DIRECT``.
"""

from __future__ import annotations

import enum
from typing import Callable, Union

from .errors import UsageError
from .functions import (
    AngleLike,
    Branch,
    TrigFunction,
    cos_branch,
    cos_piecewise,
    sin_branch,
    sin_piecewise,
)
from .numeric import Angle, Scalar, as_angle
from .results import DerivResult, Finite, Pole, from_sides, sides


class DerivForm(enum.Enum):
    DIRECT = "direct"
    PRODUCT = "product"
    SQUARED = "squared"
    QUOTIENT = "quotient"

    @classmethod
    def parse(cls, name: Union[str, "DerivForm"]) -> "DerivForm":
        if isinstance(name, cls):
            return name
        try:
            return cls(name.strip().lower())
        except (ValueError, AttributeError):
            forms = ", ".join(f.value for f in cls)
            raise UsageError(f"unknown derivative form {name!r}; expected one of {forms}") from None


class Differentiability(enum.Enum):
    SMOOTH = "smooth"
    CORNER = "corner"
    POLE = "pole"


# reduced angles (all in {0, 2, 4, 6}) where each function is not smooth
CORNERS = {
    TrigFunction.SIN: frozenset({2, 6}),
    TrigFunction.COS: frozenset({0, 4}),
    TrigFunction.TAN: frozenset(),
    TrigFunction.COT: frozenset(),
    TrigFunction.SEC: frozenset({0, 4}),
    TrigFunction.CSC: frozenset({2, 6}),
}
POLES = {
    TrigFunction.SIN: frozenset(),
    TrigFunction.COS: frozenset(),
    TrigFunction.TAN: frozenset({2, 6}),
    TrigFunction.COT: frozenset({0, 4}),
    TrigFunction.SEC: frozenset({2, 6}),
    TrigFunction.CSC: frozenset({0, 4}),
}

APPLICABLE_FORMS = {
    TrigFunction.SIN: (DerivForm.DIRECT,),
    TrigFunction.COS: (DerivForm.DIRECT,),
    TrigFunction.TAN: (DerivForm.DIRECT, DerivForm.SQUARED, DerivForm.QUOTIENT),
    TrigFunction.COT: (DerivForm.DIRECT, DerivForm.SQUARED, DerivForm.QUOTIENT),
    TrigFunction.SEC: tuple(DerivForm),
    TrigFunction.CSC: tuple(DerivForm),
}


def classify_differentiability(fn: Union[TrigFunction, str], a: AngleLike) -> Differentiability:
    fn = TrigFunction.parse(fn)
    t = as_angle(a).reduced
    if t.value in POLES[fn]:
        return Differentiability.POLE
    if t.value in CORNERS[fn]:
        return Differentiability.CORNER
    return Differentiability.SMOOTH


# -- branch-level machinery ----------------------------------------------

BranchDerivative = Callable[[int, Scalar], Scalar]


def _left_neighbour(a: Angle) -> tuple[int, Scalar]:
    """Branch index and angle that approach ``a`` from below."""
    if a.reduced == 0:
        return 4, a.reduced + 8
    return a.branch_k - 1, a.reduced


def _differentiate(a: Angle, branch_derivative: BranchDerivative) -> DerivResult:
    right = branch_derivative(a.branch_k, a.reduced)
    if not a.at_breakpoint:
        return Finite(right)
    k_left, t_left = _left_neighbour(a)
    return from_sides(branch_derivative(k_left, t_left), right)


def _affine_reciprocal_slope(b: Branch, t: Scalar) -> Scalar:
    # d/dt 1/(c0 + c1 t) = -c1 / (c0 + c1 t)**2
    return -t.lift(b.slope) / b.at(t) ** 2


def _affine_ratio_slope(num: Branch, den: Branch, t: Scalar) -> Scalar:
    # d/dt (a0 + a1 t)/(b0 + b1 t) = (a1 b0 - a0 b1) / (b0 + b1 t)**2
    cross = num.slope * den.intercept - num.intercept * den.slope
    return t.lift(cross) / den.at(t) ** 2


def _sec_value(k: int, t: Scalar) -> Scalar:
    return 1 / cos_branch(k).at(t)


def _csc_value(k: int, t: Scalar) -> Scalar:
    return 1 / sin_branch(k).at(t)


def _tan_value(k: int, t: Scalar) -> Scalar:
    return sin_branch(k).at(t) / cos_branch(k).at(t)


def _cot_value(k: int, t: Scalar) -> Scalar:
    return cos_branch(k).at(t) / sin_branch(k).at(t)


def _check_form(fn: TrigFunction, form) -> DerivForm:
    form = DerivForm.parse(form)
    if form not in APPLICABLE_FORMS[fn]:
        raise UsageError(f"the {form.value} form does not apply to {fn.value}")
    return form


# -- sine and cosine -----------------------------------------------------


def d_sin(a: AngleLike) -> DerivResult:
    """+1/2 on (0, 2) u (6, 8), -1/2 on (2, 6), corners at 2 and 6."""
    a = as_angle(a)
    return _differentiate(a, lambda k, t: t.lift(sin_branch(k).slope))


def d_cos(a: AngleLike) -> DerivResult:
    a = as_angle(a)
    return _differentiate(a, lambda k, t: t.lift(cos_branch(k).slope))


# -- tangent and cotangent -----------------------------------------------


def d_tan(a: AngleLike, form: Union[DerivForm, str] = DerivForm.DIRECT) -> DerivResult:
    """Derivative of tangent; equals ``1/2 sec**2`` wherever cos is nonzero."""
    a = as_angle(a)
    form = _check_form(TrigFunction.TAN, form)
    if form is DerivForm.QUOTIENT:
        return derivative_via_quotient_rule(TrigFunction.TAN, a)
    if cos_branch(a.branch_k).at(a.reduced) == 0:
        return Pole()
    if form is DerivForm.DIRECT:
        return _differentiate(
            a, lambda k, t: _affine_ratio_slope(sin_branch(k), cos_branch(k), t)
        )
    return _differentiate(a, lambda k, t: _sec_value(k, t) ** 2 / 2)


def d_cot(a: AngleLike, form: Union[DerivForm, str] = DerivForm.DIRECT) -> DerivResult:
    a = as_angle(a)
    form = _check_form(TrigFunction.COT, form)
    if form is DerivForm.QUOTIENT:
        return derivative_via_quotient_rule(TrigFunction.COT, a)
    if sin_branch(a.branch_k).at(a.reduced) == 0:
        return Pole()
    if form is DerivForm.DIRECT:
        return _differentiate(
            a, lambda k, t: _affine_ratio_slope(cos_branch(k), sin_branch(k), t)
        )
    return _differentiate(a, lambda k, t: -(_csc_value(k, t) ** 2) / 2)


# -- secant and cosecant -------------------------------------------------


def _sec_product(k: int, t: Scalar) -> Scalar:
    shift = -1 if k % 2 == 0 else 1
    return _sec_value(k, t) * (_tan_value(k, t) + shift) / 2


def _sec_squared(k: int, t: Scalar) -> Scalar:
    sign = 1 if k in (1, 2) else -1
    return sign * _sec_value(k, t) ** 2 / 2


def _csc_product(k: int, t: Scalar) -> Scalar:
    shift = -1 if k % 2 == 0 else 1
    return -_csc_value(k, t) * (_cot_value(k, t) + shift) / 2


def _csc_squared(k: int, t: Scalar) -> Scalar:
    sign = -1 if k in (1, 4) else 1
    return sign * _csc_value(k, t) ** 2 / 2


def d_sec(a: AngleLike, form: Union[DerivForm, str] = DerivForm.DIRECT) -> DerivResult:
    """Derivative of secant.

    Poles at 2 and 6, corners at the cosine extrema 0 and 4 (one-sided
    values -+1/2).  No single expression covers all branches, hence the
    family of forms.
    """
    a = as_angle(a)
    form = _check_form(TrigFunction.SEC, form)
    if form is DerivForm.QUOTIENT:
        return derivative_via_quotient_rule(TrigFunction.SEC, a)
    if cos_branch(a.branch_k).at(a.reduced) == 0:
        return Pole()
    if form is DerivForm.DIRECT:
        return _differentiate(a, lambda k, t: _affine_reciprocal_slope(cos_branch(k), t))
    if form is DerivForm.PRODUCT:
        return _differentiate(a, _sec_product)
    return _differentiate(a, _sec_squared)


def d_csc(a: AngleLike, form: Union[DerivForm, str] = DerivForm.DIRECT) -> DerivResult:
    """Derivative of cosecant; poles at 0 and 4, corners at 2 and 6."""
    a = as_angle(a)
    form = _check_form(TrigFunction.CSC, form)
    if form is DerivForm.QUOTIENT:
        return derivative_via_quotient_rule(TrigFunction.CSC, a)
    if sin_branch(a.branch_k).at(a.reduced) == 0:
        return Pole()
    if form is DerivForm.DIRECT:
        return _differentiate(a, lambda k, t: _affine_reciprocal_slope(sin_branch(k), t))
    if form is DerivForm.PRODUCT:
        return _differentiate(a, _csc_product)
    return _differentiate(a, _csc_squared)


# -- quotient-rule route -------------------------------------------------


def derivative_via_quotient_rule(fn: Union[TrigFunction, str], a: AngleLike) -> DerivResult:
    """Differentiate tan/cot/sec/csc from sin, cos, d_sin and d_cos alone.

    Each one-sided derivative of sin and cos is pushed through the quotient
    (or reciprocal) rule separately, so corners of sin/cos that cancel out
    (tangent at 0 and 4) come back as finite values.
    """
    fn = TrigFunction.parse(fn)
    if fn in (TrigFunction.SIN, TrigFunction.COS):
        raise UsageError(f"{fn.value} has no quotient structure")
    a = as_angle(a)
    s, c = sin_piecewise(a), cos_piecewise(a)
    denominator = c if fn in (TrigFunction.TAN, TrigFunction.SEC) else s
    if denominator == 0:
        return Pole()

    def rule(ds: Scalar, dc: Scalar) -> Scalar:
        if fn is TrigFunction.TAN:
            return (c * ds - s * dc) / (c * c)
        if fn is TrigFunction.COT:
            return (s * dc - c * ds) / (s * s)
        if fn is TrigFunction.SEC:
            return -dc / (c * c)
        return -ds / (s * s)

    ds_left, ds_right = sides(d_sin(a))
    dc_left, dc_right = sides(d_cos(a))
    return from_sides(rule(ds_left, dc_left), rule(ds_right, dc_right))


_DERIVATIVES = {
    TrigFunction.SIN: lambda a, form: d_sin(a),
    TrigFunction.COS: lambda a, form: d_cos(a),
    TrigFunction.TAN: d_tan,
    TrigFunction.COT: d_cot,
    TrigFunction.SEC: d_sec,
    TrigFunction.CSC: d_csc,
}


def derivative(
    fn: Union[TrigFunction, str], a: AngleLike, form: Union[DerivForm, str] = DerivForm.DIRECT
) -> DerivResult:
    """Derivative of any function in the requested form, e.g. ``derivative("sec", 5, "squared")``."""
    fn = TrigFunction.parse(fn)
    form = _check_form(fn, form)
    return _DERIVATIVES[fn](as_angle(a), form)

