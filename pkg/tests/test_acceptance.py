"""Acceptance criteria 1-8, each at its stated tolerance.

Every test prints one ``AC<n> PASS|FAIL`` line; the lines are repeated in
the pytest terminal summary (see conftest.py), so ``pytest
tests/test_acceptance.py`` shows them without ``-s``.
"""

import io
from fractions import Fraction

import pytest

import oracle
from taxitrig import (
    Corner,
    Finite,
    Pole,
    Scalar,
    TrigFunction,
    classify_differentiability,
    cos_piecewise,
    d_cot,
    d_csc,
    d_sec,
    d_sin,
    d_tan,
    derivative,
    evaluate,
    reduce_angle,
    sin_piecewise,
)
from taxitrig.cli import main
from taxitrig.derivatives import CORNERS, POLES, Differentiability
from taxitrig.functions import cos_closed_literal, cos_pseudo, sin_closed_literal, sin_pseudo
from taxitrig.numeric import i_pow
from taxitrig.plotting import read_asymptotes, read_curves
from taxitrig.verification import (
    GridSpec,
    finite_difference,
    one_sided_difference,
    oracle_sample_points,
    run_identity_suite,
)

F = Fraction
GRID = GridSpec(-16, 16, F(1, 128))
RESULTS: dict[int, str] = {}


def record(n, ok, detail):
    line = f"AC{n} {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def _imaginary_parts(k, even_term, odd_term):
    # recompute the discarded imaginary component of the literal closed form
    even_sel, odd_sel = 1 + (-1) ** k, 1 + (-1) ** (k + 1)
    return (even_sel * i_pow(k - 2).times(even_term)[1] + odd_sel * i_pow(k - 1).times(odd_term)[1]) / 2


def test_ac1_representation_equivalence():
    points = list(GRID.points())
    bad = []
    for theta in points:
        a = reduce_angle(theta)
        c_ref, s_ref = oracle.point(theta)
        if not (sin_piecewise(a) == sin_closed_literal(a) == sin_pseudo(a) == s_ref):
            bad.append(("sin", theta))
        if not (cos_piecewise(a) == cos_closed_literal(a) == cos_pseudo(a) == c_ref):
            bad.append(("cos", theta))
        k, t = a.branch_k, a.reduced
        if _imaginary_parts(k, k - 1 - t / 2, k - t / 2) != 0 or _imaginary_parts(k, k - t / 2, 1 - k + t / 2) != 0:
            bad.append(("imag", theta))
    record(1, len(points) == 4096 and not bad, f"{len(points)} grid points, 3 representations + oracle, {len(bad)} mismatches")


def test_ac2_anchor_values():
    cos_ok = [cos_piecewise(t) for t in (0, 2, 4, 6)] == [1, 0, -1, 0]
    sin_ok = [sin_piecewise(t) for t in (0, 2, 4, 6)] == [0, 1, 0, -1]
    branch = [F(i, 64) for i in range(128)]
    k1_ok = all(cos_piecewise(t) == 1 - t / 2 and sin_piecewise(t) == t / 2 for t in branch)
    k1_ok = k1_ok and all(cos_pseudo(t) == 1 - t / 2 and sin_pseudo(t) == t / 2 for t in branch)
    record(2, cos_ok and sin_ok and k1_ok, "cos{0,2,4,6}={1,0,-1,0}, sin{0,2,4,6}={0,1,0,-1}, k=1 branch exact")


def test_ac3_exact_derivative_identities():
    bad = []
    checked = 0
    for theta in GRID.points():
        a = reduce_angle(theta)
        sec_v, csc_v = evaluate("sec", a), evaluate("csc", a)
        if isinstance(sec_v, Finite) and classify_differentiability("sec", a) is Differentiability.SMOOTH:
            checked += 1
            half = sec_v.value**2 / 2
            if d_tan(a) != Finite(half):
                bad.append(("tan", theta))
            forms = {d_sec(a, f) for f in ("direct", "product", "squared", "quotient")}
            if forms != {Finite(half)} and forms != {Finite(-half)}:
                bad.append(("sec", theta))
        if isinstance(csc_v, Finite) and classify_differentiability("csc", a) is Differentiability.SMOOTH:
            half = csc_v.value**2 / 2
            if d_cot(a) != Finite(-half):
                bad.append(("cot", theta))
            forms = {d_csc(a, f) for f in ("direct", "product", "squared", "quotient")}
            if forms != {Finite(half)} and forms != {Finite(-half)}:
                bad.append(("csc", theta))
    record(3, checked > 3000 and not bad, f"{checked} smooth sec points, zero tolerance, {len(bad)} mismatches")


def test_ac4_finite_difference_oracle():
    worst = 0.0
    bad = []
    points = oracle_sample_points(1000, -16.0, 16.0, 1e-3)
    for x in points:
        for fn in TrigFunction:
            analytic = derivative(fn, Scalar.from_float(x))
            if not isinstance(analytic, Finite):
                bad.append((fn.value, x))
                continue
            a, fd = float(analytic.value), float(finite_difference(fn, x, 1e-6))
            err = abs(a - fd) / max(1.0, abs(a))
            worst = max(worst, err)
            if err > 1e-6:
                bad.append((fn.value, x))
    record(4, len(points) == 1000 and not bad, f"1000 points x 6 functions, h=1e-6, worst scaled error {worst:.2e} <= 1e-6")


def test_ac5_corner_classification():
    bad = []
    for theta in range(-16, 17, 2):
        r = theta % 8
        expected = {
            "sin": "corner" if r in (2, 6) else "finite",
            "cos": "corner" if r in (0, 4) else "finite",
            "sec": "corner" if r in (0, 4) else "pole",
            "csc": "corner" if r in (2, 6) else "pole",
        }
        for name, want in expected.items():
            fn = TrigFunction.parse(name)
            result = derivative(fn, theta)
            got = {Finite: "finite", Corner: "corner", Pole: "pole"}[type(result)]
            if got != want:
                bad.append((name, theta, got))
            if isinstance(result, Corner):
                left = float(one_sided_difference(fn, float(theta), 1e-6, -1))
                right = float(one_sided_difference(fn, float(theta), 1e-6, +1))
                if abs(left - float(result.left)) > 1e-6 or abs(right - float(result.right)) > 1e-6:
                    bad.append((name, theta, "one-sided"))
    sets_ok = CORNERS[TrigFunction.SEC] == POLES[TrigFunction.CSC] == {0, 4}
    sets_ok = sets_ok and CORNERS[TrigFunction.CSC] == POLES[TrigFunction.SEC] == {2, 6}
    record(5, sets_ok and not bad, f"sin/cos/sec/csc at even theta in [-16,16], one-sided quotients within 1e-6, {len(bad)} mismatches")


def test_ac6_identity_suite():
    report = run_identity_suite(GRID)
    qii = -evaluate("tan", 3).value + 1 == 2 == -evaluate("sec", 3).value
    qiv = -evaluate("tan", 7).value + 1 == 2 == evaluate("sec", 7).value
    record(6, report.passed and qii and qiv, f"{report.comparisons} exact comparisons, {len(report.failures)} failures, QII/QIV examples hold")


def test_ac7_lost_relationships():
    differ = [t for t in GRID.points() if isinstance(d_sin(t), Finite) and d_sin(t).value != cos_piecewise(t)]
    witness_ok = F(1, 2) in differ and d_sin(F(1, 2)).value == F(1, 2) and cos_piecewise(F(1, 2)) == F(3, 4)
    bad = 0
    smooth = 0
    for theta in GRID.points():
        result = d_sec(theta)
        if isinstance(result, Finite):
            smooth += 1
            if abs(result.value) != evaluate("sec", theta).value ** 2 / 2:
                bad += 1
    record(
        7,
        witness_ok and smooth > 3000 and bad == 0,
        f"d_sin != cos at {len(differ)} grid points (theta=1/2: 1/2 vs 3/4); |d_sec| = sec^2/2 at all {smooth} smooth points",
    )


def _slopes(run):
    return [(b[1] - a[1]) / (b[0] - a[0]) for a, b in zip(run, run[1:])]


def _kinks(run, tol=1e-3):
    out = []
    slopes = _slopes(run)
    for i in range(1, len(slopes)):
        if abs(slopes[i] - slopes[i - 1]) > tol:
            out.append(run[i][0])
    return out


def _plot(tmp_path, name, *argv):
    path = tmp_path / name
    code = main(["plot", *argv, "-o", str(path)], out=io.StringIO())
    assert code == 0
    return path.read_text(encoding="utf-8")


def test_ac8_cli_contract(tmp_path):
    problems = []

    fig1 = read_curves(_plot(tmp_path, "fig1.svg", "sin", "cos", "--from", "0", "--to", "16"))
    for fn in ("sin", "cos"):
        ends = {round(run[0][0], 3) for run in fig1[fn]} | {round(run[-1][0], 3) for run in fig1[fn]}
        if any(abs(e - 2 * round(e / 2)) > 1e-3 for e in ends):
            problems.append(f"{fn} vertex off even theta")
        for run in fig1[fn]:
            if _kinks(run) or any(abs(abs(s) - 0.5) > 1e-3 for s in _slopes(run)):
                problems.append(f"{fn} slope not +-1/2")

    fig2_svg = _plot(tmp_path, "fig2.svg", "tan", "--from", "0", "--to", "8")
    if read_asymptotes(fig2_svg)["tan"] != pytest.approx([2, 6], abs=1e-3):
        problems.append("tan asymptotes")
    for run in read_curves(fig2_svg)["tan"]:
        if any(run[0][0] < p < run[-1][0] for p in (2, 6)):
            problems.append("tan curve crosses an asymptote")

    fig3 = read_curves(_plot(tmp_path, "fig3.svg", "sec", "cos", "--from", "0", "--to", "8"))
    sec_vertices = {}
    for run in fig3["sec"]:
        for theta, value in (run[0], run[-1]):
            sec_vertices.setdefault(round(theta, 3), set()).add(round(value, 2))
    for theta, cos_value in ((0.0, 1.0), (4.0, -1.0), (8.0, 1.0)):
        if sec_vertices.get(theta) != {cos_value}:
            problems.append(f"sec corner at {theta}")
    runs_at_4 = [run for run in fig3["sec"] if abs(run[0][0] - 4) < 1e-3 or abs(run[-1][0] - 4) < 1e-3]
    if len(runs_at_4) != 2:
        problems.append("sec not split at its corner 4")

    code = main(["verify"], out=io.StringIO())
    if code != 0:
        problems.append(f"verify exited {code}")
    record(8, not problems, "three figures parsed from SVG, `verify` exits 0" if not problems else "; ".join(problems))
