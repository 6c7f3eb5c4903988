"""Sampled (theta, value) data for tables and figures."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .derivatives import POLES, Differentiability, classify_differentiability
from .errors import UsageError
from .functions import TrigFunction, evaluate
from .numeric import Backend, Scalar, reduce_angle
from .results import Finite


@dataclass(frozen=True)
class Series:
    """Samples of one function.

    ``value`` is ``None`` at poles.  ``segment_breaks`` are the multiples of
    2 in range (where the pseudo branch changes); ``asymptotes`` are the
    poles in range, whether or not a sample lands on them.
    """

    function: TrigFunction
    points: tuple[tuple[Scalar, Optional[Scalar]], ...]
    segment_breaks: tuple[Scalar, ...]
    asymptotes: tuple[Scalar, ...]

    def flags(self) -> list[str]:
        out = []
        for theta, value in self.points:
            if value is None:
                out.append("pole")
            elif classify_differentiability(self.function, theta) is Differentiability.CORNER:
                out.append("corner-adjacent")
            else:
                out.append("ok")
        return out

    def smooth_segments(self) -> list[list[tuple[Scalar, Scalar]]]:
        """Split into runs that contain no pole and no interior corner.

        A corner point ends one run and starts the next, so each run can be
        drawn as one polyline.
        """
        runs: list[list[tuple[Scalar, Scalar]]] = []
        current: list[tuple[Scalar, Scalar]] = []
        for theta, value in self.points:
            if value is None:
                if len(current) > 1:
                    runs.append(current)
                current = []
                continue
            current.append((theta, value))
            if classify_differentiability(self.function, theta) is Differentiability.CORNER:
                if len(current) > 1:
                    runs.append(current)
                current = [(theta, value)]
        if len(current) > 1:
            runs.append(current)
        return runs


def even_points(start: Fraction, end: Fraction, *, include_end: bool = True) -> list[Fraction]:
    first = 2 * math.ceil(start / 2)
    out = []
    b = Fraction(first)
    while b < end or (include_end and b == end):
        out.append(b)
        b += 2
    return out


def build_series(
    fn: TrigFunction,
    thetas: Iterable[Fraction],
    backend: Backend,
    range_: tuple[Fraction, Fraction],
    include_end: bool = True,
) -> Series:
    fn = TrigFunction.parse(fn)
    points = []
    last = None
    for theta in thetas:
        if last is not None and theta <= last:
            raise UsageError("series thetas must be strictly increasing")
        last = theta
        x = Scalar(theta) if backend is Backend.EXACT else Scalar.from_float(float(theta))
        result = evaluate(fn, x)
        points.append((x, result.value if isinstance(result, Finite) else None))

    def lift(b: Fraction) -> Scalar:
        return Scalar(b) if backend is Backend.EXACT else Scalar.from_float(float(b))

    breaks = even_points(*range_, include_end=include_end)
    poles = [b for b in breaks if reduce_angle(b).reduced.value in POLES[fn]]
    return Series(
        function=fn,
        points=tuple(points),
        segment_breaks=tuple(lift(b) for b in breaks),
        asymptotes=tuple(lift(b) for b in poles),
    )


def table_series(
    fn: TrigFunction, start: Fraction, end: Fraction, step: Fraction, backend: Backend
) -> Series:
    """Rows at ``start + i*step`` strictly below ``end``."""
    if step <= 0:
        raise UsageError("step must be positive")
    if start >= end:
        raise UsageError("'from' must be below 'to'")
    n = math.ceil((end - start) / step)
    thetas = [start + i * step for i in range(n)]
    return build_series(fn, thetas, backend, (start, end), include_end=False)


def plot_series(fn: TrigFunction, start: Fraction, end: Fraction, samples: int) -> Series:
    """Exact samples on ``[start, end]``, always including every even theta
    so that breakpoint vertices land exactly."""
    if samples < 1:
        raise UsageError("samples must be at least 1")
    if start >= end:
        raise UsageError("'from' must be below 'to'")
    step = (end - start) / samples
    grid = {start + i * step for i in range(samples + 1)}
    grid.update(even_points(start, end))
    return build_series(fn, sorted(grid), Backend.EXACT, (start, end))


def figure_series(
    functions: Sequence[TrigFunction], start: Fraction, end: Fraction, samples: int
) -> list[Series]:
    return [plot_series(TrigFunction.parse(f), start, end, samples) for f in functions]
