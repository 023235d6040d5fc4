import pytest
from hypothesis import given
from hypothesis import strategies as st

from smncubic import (
    BracketError,
    Case,
    DomainError,
    MonicCubic,
    bisect,
    closed_form_b_boundary,
    critical_points,
    envelope,
    evaluate,
    extreme_roots,
    newton_refine,
    solve,
)
from smncubic.refiner import DEFAULT_TOL, max_iterations
from smncubic.suite import random_cubics

PRINTED = 5e-4

coeff = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def counted_evaluate(monkeypatch):
    import smncubic.refiner as refiner

    calls = []

    def spy(p, x):
        calls.append(x)
        return evaluate(p, x)

    monkeypatch.setattr(refiner, "evaluate", spy)
    return calls


class TestBisect:
    def test_examples(self):
        assert bisect(MonicCubic(3, 2, -0.25), 0, 0.155) == pytest.approx(0.107, abs=PRINTED)
        assert bisect(MonicCubic(-4, 2, 3), 2.387, 3.158) == pytest.approx(3.0, abs=1e-13)
        assert bisect(MonicCubic(0, 0, -8), 0, 8) == pytest.approx(2.0, abs=1e-13)

    def test_bracket_error(self):
        with pytest.raises(BracketError):
            bisect(MonicCubic(0, 0, -8), 3, 5)
        with pytest.raises(BracketError):
            bisect(MonicCubic(0, 0, -8), 5, 3)

    def test_tangent_endpoint_accepted(self):
        # (x - 1)^2 (x + 2): no sign change on [1, 1.5], but 1 is the double root
        assert bisect(MonicCubic(0, -3, 2), 1, 1.5) == 1

    def test_iteration_bound(self, monkeypatch):
        calls = counted_evaluate(monkeypatch)
        bisect(MonicCubic(0, 0, -8), 0, 8, tol=1e-14)
        assert len(calls) <= 2 + max_iterations(0, 8, 1e-14)


class TestNewton:
    def test_examples(self):
        assert newton_refine(MonicCubic(1, 2, -3), 0.75, 0, 1.5) == pytest.approx(0.844, abs=PRINTED)
        assert newton_refine(MonicCubic(-3, 21, 7), -0.2, -1 / 3, 0) == pytest.approx(-0.317, abs=PRINTED)
        assert newton_refine(MonicCubic(0, 0, -8), 8, 0, 8) == pytest.approx(2.0, abs=1e-13)

    def test_seed_outside_bracket_is_clipped(self):
        assert newton_refine(MonicCubic(0, 0, -8), 100, 0, 8) == pytest.approx(2.0, abs=1e-13)

    def test_flat_derivative_falls_back_to_bisection(self):
        # x^3 - 1e-30: derivative vanishes at the seed 0
        x = newton_refine(MonicCubic(0, 0, -1e-30), 0.0, -1, 1)
        assert abs(evaluate(MonicCubic(0, 0, -1e-30), x)) <= 1e-10

    def test_bracket_error(self):
        with pytest.raises(BracketError):
            newton_refine(MonicCubic(0, 0, -8), 4, 3, 5)

    def test_iteration_bound(self, monkeypatch):
        calls = counted_evaluate(monkeypatch)
        newton_refine(MonicCubic(0, 0, -8), 8, 0, 8, tol=1e-14)
        assert len(calls) <= 2 + max_iterations(0, 8, 1e-14)

    def test_agrees_with_bisection_on_random_intervals(self):
        for p in random_cubics(2000, seed=11):
            report = solve(p)
            for iv in report.isolation:
                if iv.multiplicity > 1 or iv.lo == iv.hi:
                    continue
                n = newton_refine(p, 0.5 * (iv.lo + iv.hi), iv.lo, iv.hi)
                b = bisect(p, iv.lo, iv.hi)
                assert abs(n - b) <= 2 * DEFAULT_TOL * max(1.0, abs(b))


class TestClosedForm:
    def test_examples(self):
        assert closed_form_b_boundary(MonicCubic(5, 25 / 3, 125 / 27)) == pytest.approx(-5 / 3, rel=1e-15)
        assert closed_form_b_boundary(MonicCubic(-6, 12, 5)) == pytest.approx(-0.351, abs=PRINTED)

    def test_printed_inflected_root(self):
        # printed as 1.862; the exact root is 2/3 + cbrt(46/27) = 1.86102
        x = closed_form_b_boundary(MonicCubic(-2, 4 / 3, -2))
        assert x == pytest.approx(2 / 3 + (46 / 27) ** (1 / 3), rel=1e-14)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            closed_form_b_boundary(MonicCubic(1, 2, 3))

    @given(coeff, coeff)
    def test_is_a_root(self, a, c):
        p = MonicCubic(a, a * a / 3, c)
        x = closed_form_b_boundary(p)
        assert abs(evaluate(p, x)) <= 1e-10 * p.scale * max(1.0, abs(x)) ** 3


class TestSolve:
    def test_lower_arc_example(self):
        report = solve(MonicCubic(3, 2, -0.25))
        assert [r.multiplicity for r in report.roots] == [1, 1, 1]
        x1, x2, x3 = report.real_roots_expanded()
        assert x1 == pytest.approx(0.107, abs=PRINTED)
        assert x2 == pytest.approx(-1.270, abs=PRINTED)
        # printed -1.840; the oracle and the closed form both give -1.83757
        assert x3 == pytest.approx(-1.83757, abs=1e-5)
        assert not report.complex_pair_present

    def test_no_critical_example(self):
        report = solve(MonicCubic(-1, 10, 7))
        assert report.classification.case is Case.ONE_REAL_NO_CRITICAL
        (root,) = report.roots
        assert root.value == pytest.approx(-0.634, abs=PRINTED)
        assert report.complex_pair_present

    def test_extreme_example(self):
        env = envelope(3, 2)
        report = solve(MonicCubic(3, 2, env.c1))
        cp = critical_points(MonicCubic(3, 2, 0))
        (mu1, xi1), _ = extreme_roots(3, 2)
        (double, simple) = report.roots
        assert (double.value, double.multiplicity) == (cp.mu1, 2)
        assert (simple.value, simple.multiplicity) == (xi1, 1)
        assert double.value == pytest.approx(-0.423, abs=PRINTED)
        assert simple.value == pytest.approx(-2.155, abs=PRINTED)

    def test_printed_extreme_with_wide_band(self):
        report = solve(MonicCubic(3, 2, 0.385), boundary_tol=1e-3)
        assert [r.multiplicity for r in report.roots] == [2, 1]
        assert report.roots[0].value == pytest.approx(-0.423, abs=PRINTED)
        assert report.roots[1].value == pytest.approx(-2.155, abs=PRINTED)

    def test_triple(self):
        report = solve(MonicCubic(5, 25 / 3, 125 / 27))
        (root,) = report.roots
        assert root.multiplicity == 3
        assert root.value == pytest.approx(-5 / 3, abs=1e-12)

    @given(coeff, st.floats(0.01, 20), st.sampled_from(["c1", "c2"]))
    def test_double_root_consistency(self, a, gap, which):
        b = a * a / 3 - gap
        env = envelope(a, b)
        report = solve(MonicCubic(a, b, getattr(env, which)))
        cp = critical_points(MonicCubic(a, b, 0))
        double = next(r for r in report.roots if r.multiplicity == 2)
        simple = next(r for r in report.roots if r.multiplicity == 1)
        mu = cp.mu1 if which == "c1" else cp.mu2
        assert double.value == pytest.approx(mu, rel=1e-12, abs=1e-12)
        scale = max(1.0, abs(double.value), abs(simple.value), abs(a))
        assert abs(2 * double.value + simple.value + a) <= 1e-12 * scale

    @given(coeff, coeff, coeff)
    def test_report_invariants(self, a, b, c):
        p = MonicCubic(a, b, c)
        report = solve(p)
        total = sum(r.multiplicity for r in report.roots) + 2 * report.complex_pair_present
        assert total == 3
        assert max(report.vieta_residuals) < 1e-9 * p.scale
        for root, iv in zip(report.roots, report.isolation):
            assert iv.lo <= root.value <= iv.hi
            if root.multiplicity == 1:
                assert root.residual <= 1e-10 * p.scale * max(1.0, abs(root.value)) ** 3

    @given(coeff, coeff, coeff)
    def test_idempotent(self, a, b, c):
        first = solve(MonicCubic(a, b, c))
        again = solve(MonicCubic(first.cubic.a, first.cubic.b, first.cubic.c))
        assert first == again

    def test_vieta_residual_bound_on_random_suite(self):
        worst = 0.0
        for p in random_cubics(5000, seed=3):
            report = solve(p)
            worst = max(worst, max(report.vieta_residuals) / (1e-9 * p.scale))
        assert worst < 1.0
