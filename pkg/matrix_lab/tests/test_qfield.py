"""
Tests for exact rational / quadratic-field arithmetic
"""
import math
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies as st
from hypothesis.extra.django import TestCase as HypothesisTestCase

from matrix_lab.exceptions import RadicandMismatchError
from matrix_lab.services.algebra import (
    QuadNum, format_quadnum, parse_quadnum, qnum_arith, qnum_cmp,
    qnum_to_float, squarefree_decompose,
)

SQRT2 = QuadNum(0, 1, 2)

rationals = st.fractions(min_value=-40, max_value=40, max_denominator=25)
quadnums = st.builds(QuadNum, rationals, rationals, st.just(2))


class QuadNumArithmeticTest(SimpleTestCase):
    """Test field operations"""

    def test_conjugates_cancel(self):
        self.assertEqual(qnum_arith('add', 1 + SQRT2, 2 - SQRT2), 3)

    def test_square(self):
        y = QuadNum(-2, 1, 2)
        self.assertEqual(qnum_arith('mul', y, y), QuadNum(6, -4, 2))

    def test_rationalized_division(self):
        self.assertEqual(qnum_arith('div', 1, SQRT2), QuadNum(0, Fraction(1, 2), 2))

    def test_negation(self):
        self.assertEqual(qnum_arith('neg', QuadNum(1, 1, 2)), QuadNum(-1, -1, 2))

    def test_radicand_is_made_squarefree(self):
        self.assertEqual(QuadNum(0, 1, 8), QuadNum(0, 2, 2))
        self.assertEqual(QuadNum(1, 1, 4), 3)
        self.assertEqual(QuadNum(1, 1, 4).d, 1)

    def test_rational_values_use_radicand_one(self):
        value = SQRT2 * SQRT2
        self.assertTrue(value.is_rational)
        self.assertEqual(value.d, 1)
        self.assertEqual(value, 2)

    def test_mixing_radicands_fails(self):
        with self.assertRaises(RadicandMismatchError):
            SQRT2 + QuadNum(0, 1, 3)

    def test_rational_mixes_with_any_radicand(self):
        self.assertEqual((QuadNum(Fraction(1, 3)) + QuadNum(0, 1, 3)).d, 3)

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            qnum_arith('div', SQRT2, 0)
        with self.assertRaises(ZeroDivisionError):
            QuadNum(0).inverse()

    def test_unknown_operation(self):
        with self.assertRaises(ValueError):
            qnum_arith('pow', 1, 2)

    def test_sqrt_of_rational(self):
        self.assertEqual(QuadNum.sqrt(8), QuadNum(0, 2, 2))
        self.assertEqual(QuadNum.sqrt(Fraction(1, 2)), QuadNum(0, Fraction(1, 2), 2))
        self.assertEqual(QuadNum.sqrt(9), 3)

    def test_negative_power(self):
        self.assertEqual(SQRT2 ** -2, Fraction(1, 2))


class QuadNumComparisonTest(SimpleTestCase):
    """Test exact ordering"""

    def test_examples(self):
        y = QuadNum(-2, 1, 2)
        self.assertEqual(qnum_cmp(y, 0), -1)
        self.assertEqual(qnum_cmp(abs(y), 1), -1)
        self.assertEqual(qnum_cmp(3, 3), 0)

    def test_sign_with_opposite_parts(self):
        self.assertEqual(QuadNum(3, -2, 2).sign(), 1)
        self.assertEqual(QuadNum(2, -2, 2).sign(), -1)
        self.assertEqual(QuadNum(0).sign(), 0)

    def test_ordering_operators(self):
        self.assertLess(QuadNum(-2, 1, 2), QuadNum(Fraction(-1, 2)))
        self.assertGreater(SQRT2, Fraction(7, 5))


class SquarefreeDecomposeTest(SimpleTestCase):
    """Test n = s**2 * m"""

    def test_examples(self):
        self.assertEqual(squarefree_decompose(8), (2, 2))
        self.assertEqual(squarefree_decompose(4), (2, 1))
        self.assertEqual(squarefree_decompose(7), (1, 7))
        self.assertEqual(squarefree_decompose(1), (1, 1))

    def test_all_small_integers(self):
        for n in range(1, 10001):
            s, m = squarefree_decompose(n)
            self.assertEqual(s * s * m, n)
            for p in range(2, math.isqrt(m) + 1):
                self.assertNotEqual(m % (p * p), 0, f"{p}^2 divides m for n = {n}")

    def test_rejects_zero(self):
        with self.assertRaises(ValueError):
            squarefree_decompose(0)


class QuadNumRenderingTest(SimpleTestCase):
    """Test float and text rendering"""

    def test_float_examples(self):
        self.assertAlmostEqual(qnum_to_float(QuadNum(22, -12, 2)), 5.02943725152, places=10)
        self.assertAlmostEqual(qnum_to_float(Fraction(10, 3)), 3.3333333333, places=9)
        self.assertEqual(qnum_to_float(0), 0.0)

    def test_float_survives_cancellation(self):
        # 1393**2 - 2 * 985**2 == -1
        value = QuadNum(1393, -985, 2)
        expected = -1 / (1393 + 985 * math.sqrt(2))
        self.assertAlmostEqual(qnum_to_float(value) / expected, 1.0, places=12)

    def test_canonical_text(self):
        self.assertEqual(format_quadnum(QuadNum(-2, 1, 2)), '-2/1 + 1/1*sqrt(2)')
        self.assertEqual(format_quadnum(Fraction(10, 3)), '10/3')
        self.assertEqual(str(QuadNum(Fraction(-3, 2), Fraction(1, 2), 3)), '-3/2 + 1/2*sqrt(3)')

    def test_parse_canonical_text(self):
        self.assertEqual(parse_quadnum('22/1 + -12/1*sqrt(2)'), QuadNum(22, -12, 2))
        self.assertEqual(parse_quadnum('-2/3'), Fraction(-2, 3))
        with self.assertRaises(ValueError):
            parse_quadnum('one half')


class QuadNumPropertyTest(HypothesisTestCase):
    """Field axioms and ordering on random elements of Q(sqrt(2))"""

    @given(quadnums, quadnums, quadnums)
    def test_associativity(self, u, v, w):
        self.assertEqual((u + v) + w, u + (v + w))
        self.assertEqual((u * v) * w, u * (v * w))

    @given(quadnums, quadnums, quadnums)
    def test_distributivity(self, u, v, w):
        self.assertEqual(u * (v + w), u * v + u * w)

    @given(quadnums)
    def test_inverse(self, u):
        assume(u)
        self.assertEqual(u * u.inverse(), 1)

    @settings(max_examples=200)
    @given(quadnums, quadnums)
    def test_cmp_agrees_with_floats(self, u, v):
        gap = float(u) - float(v)
        assume(abs(gap) > 1e-9)
        self.assertEqual(qnum_cmp(u, v), 1 if gap > 0 else -1)

    @given(quadnums)
    def test_text_round_trip(self, u):
        self.assertEqual(parse_quadnum(format_quadnum(u)), u)
