"""Independent reference values for the taxicab trig functions.

Built from geometry alone: walk the unit taxicab circle |x| + |y| = 1
counterclockwise from (1, 0), where the taxicab arc length equals the angle.
cos and sin are the coordinates of the point reached.  Each edge has
taxicab length 2, so the walk is linear on every edge and the one-sided
derivatives are the edge directions divided by 2.

Nothing here imports taxitrig.  Run this file to regenerate
``data/derived.json``; the tests compare the package against that file
and check that the oracle still reproduces it.
"""

import json
import math
from fractions import Fraction
from pathlib import Path

VERTICES = [(1, 0), (0, 1), (-1, 0), (0, -1)]
FUNCTIONS = ("sin", "cos", "tan", "cot", "sec", "csc")
FROZEN = Path(__file__).with_name("data") / "derived.json"


def _edge(theta):
    t = Fraction(theta) % 8
    j = math.floor(t / 2)
    return j, t - 2 * j


def _point_on_edge(j, u):
    (x0, y0), (x1, y1) = VERTICES[j % 4], VERTICES[(j + 1) % 4]
    return x0 + (x1 - x0) * u / 2, y0 + (y1 - y0) * u / 2


def _direction(j):
    (x0, y0), (x1, y1) = VERTICES[j % 4], VERTICES[(j + 1) % 4]
    return Fraction(x1 - x0, 2), Fraction(y1 - y0, 2)


def point(theta):
    """(cos, sin) of ``theta``."""
    j, u = _edge(theta)
    return _point_on_edge(j, u)


def value(fn, theta):
    """Exact value, or None at a pole."""
    c, s = point(theta)
    num, den = {
        "sin": (s, 1),
        "cos": (c, 1),
        "tan": (s, c),
        "cot": (c, s),
        "sec": (1, c),
        "csc": (1, s),
    }[fn]
    if den == 0:
        return None
    return Fraction(num) / den


def _slope(fn, c, s, dc, ds):
    # quotient rule with p/q, p' and q' from the coordinate velocities
    num, den, dnum, dden = {
        "sin": (s, 1, ds, 0),
        "cos": (c, 1, dc, 0),
        "tan": (s, c, ds, dc),
        "cot": (c, s, dc, ds),
        "sec": (1, c, 0, dc),
        "csc": (1, s, 0, ds),
    }[fn]
    return Fraction(dnum * den - num * dden) / Fraction(den) ** 2


def derivative(fn, theta):
    """("finite", v), ("corner", left, right) or ("pole",)."""
    c, s = point(theta)
    den = {"tan": c, "sec": c, "cot": s, "csc": s}.get(fn, 1)
    if den == 0:
        return ("pole",)
    j, u = _edge(theta)
    right = _slope(fn, c, s, *_direction(j))
    if u != 0:
        return ("finite", right)
    left = _slope(fn, c, s, *_direction(j - 1))
    if left == right:
        return ("finite", right)
    return ("corner", left, right)


def grid(start=-8, end=8, step=Fraction(1, 4)):
    n = math.ceil((end - start) / step)
    return [Fraction(start) + i * step for i in range(n + 1)]


def _encode_value(v):
    return None if v is None else str(v)


def _encode_derivative(d):
    return [d[0]] + [str(x) for x in d[1:]]


def table():
    rows = []
    for theta in grid():
        rows.append(
            {
                "theta": str(theta),
                "value": {fn: _encode_value(value(fn, theta)) for fn in FUNCTIONS},
                "derivative": {fn: _encode_derivative(derivative(fn, theta)) for fn in FUNCTIONS},
            }
        )
    return rows


def freeze():
    FROZEN.parent.mkdir(exist_ok=True)
    FROZEN.write_text(json.dumps(table(), indent=1) + "\n", encoding="utf-8")


if __name__ == "__main__":
    freeze()
    print(f"wrote {FROZEN}")
