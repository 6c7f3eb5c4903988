"""Taxicab trigonometry: the six trig functions in t-radians and their derivatives."""

from .derivatives import (
    DerivForm,
    Differentiability,
    classify_differentiability,
    d_cos,
    d_cot,
    d_csc,
    d_sec,
    d_sin,
    d_tan,
    derivative,
    derivative_via_quotient_rule,
)
from .functions import (
    TrigFunction,
    cos_closed_literal,
    cos_piecewise,
    cos_pseudo,
    cot,
    csc,
    evaluate,
    sec,
    sin_closed_literal,
    sin_piecewise,
    sin_pseudo,
    tan,
)
from .numeric import Angle, Backend, Scalar, constants, i_pow, reduce_angle
from .results import Corner, Finite, Pole

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "Backend",
    "Corner",
    "DerivForm",
    "Differentiability",
    "Finite",
    "Pole",
    "Scalar",
    "TrigFunction",
    "classify_differentiability",
    "constants",
    "cos_closed_literal",
    "cos_piecewise",
    "cos_pseudo",
    "cot",
    "csc",
    "d_cos",
    "d_cot",
    "d_csc",
    "d_sec",
    "d_sin",
    "d_tan",
    "derivative",
    "derivative_via_quotient_rule",
    "evaluate",
    "i_pow",
    "reduce_angle",
    "sec",
    "sin_closed_literal",
    "sin_piecewise",
    "sin_pseudo",
    "tan",
]
