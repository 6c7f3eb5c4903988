"""Outcomes of evaluating or differentiating a taxicab trig function."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvariantViolation
from .numeric import Scalar


@dataclass(frozen=True)
class Finite:
    value: Scalar

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Pole:
    def __str__(self) -> str:
        return "POLE"


@dataclass(frozen=True)
class Corner:
    """Continuous point with distinct one-sided derivatives."""

    left: Scalar
    right: Scalar

    def __post_init__(self):
        if self.left == self.right:
            raise InvariantViolation("a corner needs distinct one-sided values")

    def __str__(self) -> str:
        return f"CORNER {self.left} {self.right}"


EvalResult = Union[Finite, Pole]
DerivResult = Union[Finite, Corner, Pole]


def sides(result: DerivResult) -> tuple[Scalar, Scalar]:
    """(left, right) one-sided values of a non-pole result."""
    if isinstance(result, Finite):
        return result.value, result.value
    if isinstance(result, Corner):
        return result.left, result.right
    raise InvariantViolation("a pole has no one-sided values")


def from_sides(left: Scalar, right: Scalar) -> DerivResult:
    return Finite(right) if left == right else Corner(left, right)
