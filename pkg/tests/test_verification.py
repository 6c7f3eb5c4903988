from fractions import Fraction

import pytest

from taxitrig.errors import OracleInapplicable, UsageError
from taxitrig.verification import (
    DEFAULT_GRID,
    GridSpec,
    distance_to_breakpoint,
    finite_difference,
    one_sided_difference,
    oracle_sample_points,
    run_all,
    run_derivative_sweep,
    run_equivalence_sweep,
    run_identity_suite,
)


class TestOracle:
    def test_linear_branch_is_exact(self):
        assert float(finite_difference("sin", 1, 1e-6)) == pytest.approx(0.5, abs=1e-9)

    def test_tan(self):
        assert float(finite_difference("tan", 1, 1e-6)) == pytest.approx(2, abs=1e-6)

    @pytest.mark.parametrize("fn, theta", [("sec", 2), ("sin", 2), ("sin", 2 + 5e-7), ("cot", 8), ("cos", -4)])
    def test_refuses_breakpoints(self, fn, theta):
        with pytest.raises(OracleInapplicable):
            finite_difference(fn, theta, 1e-6)

    def test_one_sided_at_corner(self):
        assert float(one_sided_difference("cos", 0, 1e-6, -1)) == pytest.approx(0.5, abs=1e-6)
        assert float(one_sided_difference("cos", 0, 1e-6, +1)) == pytest.approx(-0.5, abs=1e-6)
        with pytest.raises(OracleInapplicable):
            one_sided_difference("sec", 2, 1e-6, -1)

    def test_bad_step(self):
        with pytest.raises(UsageError):
            finite_difference("sin", 1, 0)
        with pytest.raises(UsageError):
            one_sided_difference("sin", 1, 1e-6, 0)

    def test_sample_points(self):
        pts = oracle_sample_points(1000)
        assert len(set(pts)) == 1000
        assert all(-16 <= x < 16 and distance_to_breakpoint(x) > 1e-3 for x in pts)
        assert pts == oracle_sample_points(1000)


class TestGrid:
    def test_default(self):
        assert len(DEFAULT_GRID) == 1024
        pts = list(DEFAULT_GRID.points())
        assert pts[0] == 0 and pts[-1] == 8 - Fraction(1, 128)

    def test_validation(self):
        with pytest.raises(UsageError):
            GridSpec(0, 8, 0.5)
        with pytest.raises(UsageError):
            GridSpec(0, 8, 0)
        with pytest.raises(UsageError):
            GridSpec(8, 0)


class TestSweeps:
    def test_equivalence_default(self):
        report = run_equivalence_sweep()
        assert report.passed, report.failures[:3]
        assert report.points_checked == 1024

    def test_adversarial_grid_on_breakpoints(self):
        grid = GridSpec(-8, 16, 2)
        for report in run_all(grid):
            assert report.passed, report.failures[:3]

    def test_derivative_default(self):
        report = run_derivative_sweep(samples=200)
        assert report.passed, report.failures[:3]
        assert report.max_rel_error < 1e-6

    def test_identity_default(self):
        report = run_identity_suite()
        assert report.passed, report.failures[:3]

    def test_tight_tolerance_fails(self):
        report = run_derivative_sweep(GridSpec(0, 8, Fraction(1, 8)), tolerance=1e-15)
        assert not report.passed
        assert all(f.form in ("central difference", "left quotient", "right quotient") for f in report.failures)

    def test_deterministic(self):
        grid = GridSpec(-2, 2, Fraction(1, 16))
        first = [r.summary() for r in run_all(grid, samples=50)]
        assert first == [r.summary() for r in run_all(grid, samples=50)]

    def test_summary_format(self):
        line = run_identity_suite(GridSpec(0, 1)).summary()
        assert line.startswith("identity") and line.endswith("PASS")
