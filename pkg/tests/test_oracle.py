import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from smncubic import MonicCubic, cardano_roots, cross_check, oracle_roots
from smncubic.oracle import stationary_margin
from smncubic.suite import random_cubics

PRINTED = 5e-4

coeff = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def vieta_errors(p, result):
    if result.complex_pair is None:
        xs = result.expanded()
    else:
        re, im = result.complex_pair
        xs = [result.real_roots[0][0], complex(re, im), complex(re, -im)]
    x1, x2, x3 = xs
    return (
        abs(x1 + x2 + x3 + p.a),
        abs(x1 * x2 + x1 * x3 + x2 * x3 - p.b),
        abs(x1 * x2 * x3 + p.c),
    )


class TestOracleRoots:
    def test_constructed(self):
        result = oracle_roots(MonicCubic(-6, 11, -6))
        assert [m for _, m in result.real_roots] == [1, 1, 1]
        assert [x for x, _ in result.real_roots] == pytest.approx([1, 2, 3], abs=1e-12)
        assert result.complex_pair is None

    def test_lower_arc_example(self):
        xs = [x for x, _ in oracle_roots(MonicCubic(3, 2, -0.25)).real_roots]
        assert xs[1:] == pytest.approx([-1.270, 0.107], abs=PRINTED)
        # printed -1.840
        assert xs[0] == pytest.approx(-1.83757, abs=1e-5)

    def test_triple(self):
        result = oracle_roots(MonicCubic(5, 25 / 3, 125 / 27))
        ((x, m),) = result.real_roots
        assert m == 3
        assert x == pytest.approx(-5 / 3, abs=1e-12)

    def test_double(self):
        result = oracle_roots(MonicCubic(0, -3, 2))
        assert result.real_roots == [(pytest.approx(-2, abs=1e-12), 1), (pytest.approx(1, abs=1e-12), 2)]

    def test_complex_pair(self):
        result = oracle_roots(MonicCubic(1, 2, -3))
        assert result.real_count == 1
        re, im = result.complex_pair
        assert re == pytest.approx(-0.922, abs=PRINTED)
        assert im == pytest.approx(1.645, abs=PRINTED)

    def test_stationary_margin(self):
        assert stationary_margin(MonicCubic(1, 2, 3)) == math.inf
        assert stationary_margin(MonicCubic(0, -3, 2)) == 0
        assert stationary_margin(MonicCubic(3, 2, -0.25)) > 1e-3

    @given(coeff, coeff, coeff)
    def test_vieta(self, a, b, c):
        p = MonicCubic(a, b, c)
        assume(stationary_margin(p) > 1e-6)
        result = oracle_roots(p)
        assert sum(m for _, m in result.real_roots) + 2 * (result.complex_pair is not None) == 3
        for err, coef in zip(vieta_errors(p, result), (p.a, p.b, p.c)):
            assert err <= 1e-8 * max(1.0, abs(coef), p.scale)


class TestCardano:
    def test_double(self):
        result = cardano_roots(MonicCubic(0, -3, 2))
        assert [m for _, m in result.real_roots] == [1, 2]
        assert [x for x, _ in result.real_roots] == pytest.approx([-2, 1], abs=1e-12)

    def test_pair_examples(self):
        result = cardano_roots(MonicCubic(-2, 13, -11))
        ((x, _),) = result.real_roots
        assert x == pytest.approx(0.916, abs=PRINTED)
        assert result.complex_pair == pytest.approx((0.542, 3.422), abs=PRINTED)

        result = cardano_roots(MonicCubic(-4, 3, -1))
        re, im = result.complex_pair
        assert (re, im) == pytest.approx((0.426, 0.369), abs=PRINTED)
        # printed 3.150
        assert result.real_roots[0][0] == pytest.approx(3.14790, abs=1e-5)

    def test_triple(self):
        ((x, m),) = cardano_roots(MonicCubic(5, 25 / 3, 125 / 27)).real_roots
        assert (x, m) == (pytest.approx(-5 / 3, abs=1e-12), 3)

    def test_trigonometric_branch(self):
        xs = cardano_roots(MonicCubic(-6, 11, -6)).expanded()
        assert xs == pytest.approx([3, 2, 1], abs=1e-12)

    def test_agrees_with_scan_on_random_suite(self):
        worst = 0.0
        for p in random_cubics(3000, seed=5):
            scan, closed = oracle_roots(p), cardano_roots(p)
            assert scan.real_count == closed.real_count
            worst = max(worst, max(abs(x - y) for x, y in zip(scan.expanded(), closed.expanded())))
        assert worst < 1e-8


class TestCrossCheck:
    def test_three_real(self):
        chk = cross_check(MonicCubic(3, 2, -0.25))
        assert chk.agrees
        assert chk.max_discrepancy < 1e-8

    def test_single_real(self):
        chk = cross_check(MonicCubic(1, 2, -3))
        assert chk.agrees
        assert len(chk.solver) == 1
        assert chk.max_discrepancy < 1e-8

    def test_triple(self):
        chk = cross_check(MonicCubic(5, 25 / 3, 125 / 27))
        assert chk.agrees
        assert chk.solver == [chk.solver[0]] * 3
        assert chk.max_discrepancy < 1e-8
