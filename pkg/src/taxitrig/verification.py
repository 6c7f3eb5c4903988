"""Verification harness: grids, a finite-difference oracle and sweeps.

Three sweeps cover the library:

* :func:`run_equivalence_sweep` checks that the piecewise, literal closed
  and pseudo closed forms of sin/cos agree exactly, and that tan, cot, sec
  and csc agree with the ratios/reciprocals of the piecewise sin and cos;
* :func:`run_derivative_sweep` cross-checks every derivative form exactly
  on a rational grid, then compares against central differences in float;
* :func:`run_identity_suite` checks the unit-circle, quadrant, periodicity
  and reciprocal identities exactly.

Rational sweeps compare with zero tolerance.  Only the float oracle
comparisons use a tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Union

from .derivatives import (
    APPLICABLE_FORMS,
    CORNERS,
    POLES,
    Differentiability,
    DerivForm,
    classify_differentiability,
    derivative,
)
from .errors import InvariantViolation, OracleInapplicable, UsageError
from .functions import (
    TrigFunction,
    cos_closed_literal,
    cos_piecewise,
    cos_pseudo,
    evaluate,
    sin_closed_literal,
    sin_piecewise,
    sin_pseudo,
)
from .numeric import Scalar, reduce_angle
from .results import Corner, Finite, Pole

DEFAULT_H = 1e-6
DEFAULT_TOLERANCE = 1e-6
DEFAULT_EXCLUSION = 1e-3

_GOLDEN = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class GridSpec:
    """Rational grid ``start, start + step, ...`` up to but excluding ``end``."""

    start: Fraction
    end: Fraction
    step: Fraction = Fraction(1, 128)
    exclusion_radius: float = DEFAULT_EXCLUSION

    def __post_init__(self):
        for name in ("start", "end", "step"):
            value = getattr(self, name)
            if isinstance(value, float):
                raise UsageError(f"grid {name} must be rational, got float {value!r}")
            object.__setattr__(self, name, Fraction(value))
        if self.step <= 0:
            raise UsageError("grid step must be positive")
        if self.start >= self.end:
            raise UsageError("grid start must be below its end")
        if self.exclusion_radius < 0:
            raise UsageError("exclusion radius must be nonnegative")

    def __len__(self) -> int:
        return math.ceil((self.end - self.start) / self.step)

    def points(self) -> Iterator[Fraction]:
        for i in range(len(self)):
            yield self.start + i * self.step


DEFAULT_GRID = GridSpec(0, 8)


class Failure(NamedTuple):
    function: str
    theta: str
    expected: str
    actual: str
    form: str


@dataclass
class DiffReport:
    """Outcome of one sweep.

    ``failures`` lists every disagreement; the max errors only track float
    comparisons (exact comparisons contribute zero when they agree).
    """

    suite: str
    functions: tuple[str, ...] = tuple(f.value for f in TrigFunction)
    points_checked: int = 0
    comparisons: int = 0
    max_abs_error: float = 0.0
    max_rel_error: float = 0.0
    tolerance: float = 0.0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, fn, theta, expected, actual, form="") -> None:
        self.failures.append(Failure(str(fn), str(theta), str(expected), str(actual), str(form)))

    def expect_equal(self, fn, theta, expected, actual, form="") -> bool:
        """Exact comparison of two results (scalars or Finite/Corner/Pole)."""
        self.comparisons += 1
        if expected == actual:
            return True
        self.fail(fn, theta, expected, actual, form)
        if isinstance(expected, Finite) and isinstance(actual, Finite):
            expected, actual = expected.value, actual.value
        if isinstance(expected, Scalar) and isinstance(actual, Scalar):
            self._observe(float(expected), float(actual))
        return False

    def expect_close(self, fn, theta, expected: float, actual: float, form="") -> bool:
        """Float comparison: ``|actual - expected| <= tol * max(1, |expected|)``."""
        self.comparisons += 1
        err = self._observe(expected, actual)
        if err <= self.tolerance * max(1.0, abs(expected)):
            return True
        self.fail(fn, theta, expected, actual, form)
        return False

    def _observe(self, expected: float, actual: float) -> float:
        err = abs(actual - expected)
        self.max_abs_error = max(self.max_abs_error, err)
        if expected != 0:
            self.max_rel_error = max(self.max_rel_error, err / abs(expected))
        return err

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.suite:<12} points={self.points_checked} comparisons={self.comparisons} "
            f"max_abs={self.max_abs_error:.3g} max_rel={self.max_rel_error:.3g} "
            f"failures={len(self.failures)} {status}"
        )


# -- the finite-difference oracle ----------------------------------------


def _nearest_singular(fn: TrigFunction, lo: float, hi: float) -> Optional[float]:
    for s in sorted(CORNERS[fn] | POLES[fn]):
        b = s + 8 * math.ceil((lo - s) / 8)
        if b <= hi:
            return b
    return None


def _float_value(fn: TrigFunction, x: float) -> float:
    result = evaluate(fn, Scalar.from_float(x))
    if isinstance(result, Pole):
        raise OracleInapplicable(f"{fn.value} has a pole at {x!r}")
    return float(result.value)


def finite_difference(
    fn: Union[TrigFunction, str], theta: Union[float, Scalar], h: float = DEFAULT_H
) -> Scalar:
    """Central difference ``(f(theta + h) - f(theta - h)) / 2h`` in float.

    Refuses points where the stencil touches a pole or straddles a corner,
    since the quotient then measures nothing useful.
    """
    fn = TrigFunction.parse(fn)
    x = float(theta)
    if h <= 0:
        raise UsageError("step h must be positive")
    bad = _nearest_singular(fn, x - h, x + h)
    if bad is not None:
        raise OracleInapplicable(f"stencil [{x - h!r}, {x + h!r}] straddles {fn.value} breakpoint {bad}")
    return Scalar.from_float((_float_value(fn, x + h) - _float_value(fn, x - h)) / (2 * h))


def one_sided_difference(
    fn: Union[TrigFunction, str], theta: Union[float, Scalar], h: float, side: int
) -> Scalar:
    """Forward (``side=+1``) or backward (``side=-1``) difference quotient."""
    fn = TrigFunction.parse(fn)
    x = float(theta)
    if side not in (1, -1):
        raise UsageError("side must be +1 or -1")
    lo, hi = (x, x + h) if side > 0 else (x - h, x)
    inner = _nearest_singular(fn, lo + h / 2, hi) if side > 0 else _nearest_singular(fn, lo, hi - h / 2)
    if inner is not None:
        raise OracleInapplicable(f"one-sided stencil at {x!r} crosses {fn.value} breakpoint {inner}")
    return Scalar.from_float((_float_value(fn, hi) - _float_value(fn, lo)) / h)


def distance_to_breakpoint(x: float) -> float:
    return abs(x - 2 * round(x / 2))


def oracle_sample_points(
    n: int, start: float = -16.0, end: float = 16.0, exclusion: float = DEFAULT_EXCLUSION
) -> list[float]:
    """``n`` deterministic float angles (golden-ratio Weyl sequence) that stay
    more than ``exclusion`` away from every multiple of 2."""
    points: list[float] = []
    j = 0
    width = end - start
    while len(points) < n:
        j += 1
        x = start + width * ((0.5 + j * _GOLDEN) % 1.0)
        if distance_to_breakpoint(x) > exclusion:
            points.append(x)
    return points


# -- sweeps ----------------------------------------------------------------


def run_equivalence_sweep(grid: GridSpec = DEFAULT_GRID) -> DiffReport:
    report = DiffReport("equivalence")
    sin_, cos_, tan_ = TrigFunction.SIN, TrigFunction.COS, TrigFunction.TAN
    for theta in grid.points():
        a = reduce_angle(theta)
        report.points_checked += 1

        for fn, piecewise, literal, pseudo in (
            (sin_, sin_piecewise, sin_closed_literal, sin_pseudo),
            (cos_, cos_piecewise, cos_closed_literal, cos_pseudo),
        ):
            expected = piecewise(a)
            try:
                report.expect_equal(fn, theta, expected, literal(a), "closed_literal")
            except InvariantViolation as exc:
                report.fail(fn, theta, expected, exc, "closed_literal")
            report.expect_equal(fn, theta, expected, pseudo(a), "pseudo")

        s, c = sin_piecewise(a), cos_piecewise(a)
        ratios = {
            tan_: (s, c),
            TrigFunction.COT: (c, s),
            TrigFunction.SEC: (1, c),
            TrigFunction.CSC: (1, s),
        }
        for fn, (num, den) in ratios.items():
            expected = Pole() if den == 0 else Finite(num / den)
            report.expect_equal(fn, theta, expected, evaluate(fn, a), "ratio")
    return report


def _check_exact_derivatives(report: DiffReport, theta: Fraction) -> None:
    a = reduce_angle(theta)
    for fn in TrigFunction:
        results = {form: derivative(fn, a, form) for form in APPLICABLE_FORMS[fn]}
        direct = results[DerivForm.DIRECT]
        for form, result in results.items():
            if form is not DerivForm.DIRECT:
                report.expect_equal(fn, theta, direct, result, form.value)

        kind = {Finite: Differentiability.SMOOTH, Corner: Differentiability.CORNER, Pole: Differentiability.POLE}
        report.expect_equal(fn, theta, classify_differentiability(fn, a), kind[type(direct)], "classification")

    # closed-form claims, built from plain function values
    sec_v, csc_v = evaluate(TrigFunction.SEC, a), evaluate(TrigFunction.CSC, a)
    if isinstance(sec_v, Finite):
        half_sec_sq = sec_v.value**2 / 2
        report.expect_equal("tan", theta, Finite(half_sec_sq), derivative("tan", a), "1/2 sec^2")
        d_sec = derivative("sec", a)
        if isinstance(d_sec, Finite):
            report.expect_equal("sec", theta, half_sec_sq, abs(d_sec.value), "|d_sec| = 1/2 sec^2")
    if isinstance(csc_v, Finite):
        half_csc_sq = csc_v.value**2 / 2
        report.expect_equal("cot", theta, Finite(-half_csc_sq), derivative("cot", a), "-1/2 csc^2")
        d_csc = derivative("csc", a)
        if isinstance(d_csc, Finite):
            report.expect_equal("csc", theta, half_csc_sq, abs(d_csc.value), "|d_csc| = 1/2 csc^2")


def _check_oracle(report: DiffReport, x: float, h: float) -> None:
    for fn in TrigFunction:
        analytic = derivative(fn, Scalar.from_float(x))
        if not isinstance(analytic, Finite):
            report.fail(fn, x, "finite derivative", analytic, "oracle")
            continue
        try:
            fd = finite_difference(fn, x, h)
        except OracleInapplicable as exc:
            report.fail(fn, x, analytic, exc, "oracle")
            continue
        report.expect_close(fn, x, float(analytic.value), float(fd), "central difference")


def _check_corners(report: DiffReport, theta: Fraction, h: float) -> None:
    x = float(theta)
    for fn in TrigFunction:
        if classify_differentiability(fn, reduce_angle(theta)) is not Differentiability.CORNER:
            continue
        for backend_theta in (Scalar(theta), Scalar.from_float(x)):
            result = derivative(fn, backend_theta)
            if not isinstance(result, Corner):
                report.fail(fn, theta, "corner", result, "corner")
                break
        else:
            left = one_sided_difference(fn, x, h, -1)
            right = one_sided_difference(fn, x, h, +1)
            report.expect_close(fn, theta, float(result.left), float(left), "left quotient")
            report.expect_close(fn, theta, float(result.right), float(right), "right quotient")


def run_derivative_sweep(
    grid: GridSpec = DEFAULT_GRID,
    *,
    h: float = DEFAULT_H,
    tolerance: float = DEFAULT_TOLERANCE,
    samples: int = 0,
) -> DiffReport:
    """Exact all-forms agreement on the grid, plus float oracle checks.

    Oracle comparisons run at grid points further than
    ``grid.exclusion_radius`` from a breakpoint and at ``samples`` extra
    Weyl-sequence points spread over the grid's range; corner one-sided
    checks run at grid points that are breakpoints.
    """
    report = DiffReport("derivative", tolerance=tolerance)
    for theta in grid.points():
        report.points_checked += 1
        _check_exact_derivatives(report, theta)
        x = float(theta)
        if theta % 2 == 0:
            _check_corners(report, theta, h)
        elif distance_to_breakpoint(x) > grid.exclusion_radius:
            _check_oracle(report, x, h)
    if samples:
        for x in oracle_sample_points(samples, float(grid.start), float(grid.end), grid.exclusion_radius):
            report.points_checked += 1
            _check_oracle(report, x, h)
    return report


def run_identity_suite(grid: GridSpec = DEFAULT_GRID) -> DiffReport:
    report = DiffReport("identity")
    for theta in grid.points():
        a = reduce_angle(theta)
        report.points_checked += 1
        s, c = sin_piecewise(a), cos_piecewise(a)
        values = {fn: evaluate(fn, a) for fn in TrigFunction}
        tan_v, cot_v, sec_v, csc_v = (values[f] for f in (TrigFunction.TAN, TrigFunction.COT, TrigFunction.SEC, TrigFunction.CSC))

        report.expect_equal("sin,cos", theta, 1, abs(s) + abs(c), "|sin|+|cos|=1")
        if not (abs(s) <= 1 and abs(c) <= 1):
            report.fail("sin,cos", theta, "|value| <= 1", f"{s}, {c}", "range")
        for fn, v in ((TrigFunction.SEC, sec_v), (TrigFunction.CSC, csc_v)):
            if isinstance(v, Finite) and abs(v.value) < 1:
                report.fail(fn, theta, "|value| >= 1", v, "range")

        if isinstance(tan_v, Finite):
            t, sc = tan_v.value, sec_v.value
            quadrant = a.quadrant
            if quadrant == 1:
                report.expect_equal("tan,sec", theta, sc, t + 1, "QI tan+1=sec")
            elif quadrant == 2:
                report.expect_equal("tan,sec", theta, -sc, -t + 1, "QII -tan+1=-sec")
            elif quadrant == 3:
                report.expect_equal("tan,sec", theta, -sc, t + 1, "QIII tan+1=-sec")
            else:
                report.expect_equal("tan,sec", theta, sc, -t + 1, "QIV -tan+1=sec")

        if isinstance(tan_v, Finite) and isinstance(cot_v, Finite) and tan_v.value != 0:
            report.expect_equal("tan,cot", theta, 1, tan_v.value * cot_v.value, "tan*cot=1")

        shifted = reduce_angle(Scalar(theta + 8))
        for fn, v in values.items():
            report.expect_equal(fn, theta, v, evaluate(fn, shifted), "period 8")
        report.expect_equal("tan", theta, tan_v, evaluate("tan", Scalar(theta + 4)), "period 4")
    return report


def run_all(
    grid: GridSpec = DEFAULT_GRID,
    *,
    h: float = DEFAULT_H,
    tolerance: float = DEFAULT_TOLERANCE,
    samples: int = 0,
) -> list[DiffReport]:
    return [
        run_equivalence_sweep(grid),
        run_derivative_sweep(grid, h=h, tolerance=tolerance, samples=samples),
        run_identity_suite(grid),
    ]
