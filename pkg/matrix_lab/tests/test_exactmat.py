"""
Tests for exact matrices: Gram matrices, Bareiss determinants, pattern detectors
"""
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from hypothesis.extra.django import TestCase as HypothesisTestCase

from matrix_lab.exceptions import RadicandMismatchError
from matrix_lab.services.algebra import (
    ExactMatrix, QuadNum, det, gram, is_aI_plus_bJ, is_scalar_identity, qnum_to_float,
)
from matrix_lab.services.algebra.exactmat import first_off_pattern
from matrix_lab.services.design_service import circulant_incidence
from matrix_lab.services.hadamard_service import sylvester


def two_level(mask, x, y):
    return ExactMatrix([[x if cell else y for cell in row] for row in mask])


def identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


small = st.fractions(min_value=-4, max_value=4, max_denominator=4)
entries = st.builds(QuadNum, small, small, st.just(3))
matrices = st.lists(st.lists(entries, min_size=3, max_size=3), min_size=3, max_size=3).map(ExactMatrix)


class ExactMatrixTest(SimpleTestCase):
    """Test construction and basic algebra"""

    def test_common_radicand(self):
        m = ExactMatrix([[1, QuadNum(0, 1, 2)], [Fraction(1, 2), 0]])
        self.assertEqual(m.order, 2)
        self.assertEqual(m.disc, 2)
        self.assertEqual(ExactMatrix.identity(3).disc, 1)

    def test_mixed_radicands_rejected(self):
        with self.assertRaises(RadicandMismatchError):
            ExactMatrix([[QuadNum(0, 1, 2), QuadNum(0, 1, 3)], [0, 1]])

    def test_must_be_square(self):
        with self.assertRaises(ValueError):
            ExactMatrix([[1, 2]])
        with self.assertRaises(ValueError):
            ExactMatrix([])

    def test_product_matches_gram(self):
        m = two_level(circulant_incidence((1, 1, 1, 0, 1, 0, 0)).rows, 1, QuadNum(-2, 1, 2))
        self.assertEqual(m @ m.transpose(), gram(m))

    def test_sum_and_scale(self):
        ones = ExactMatrix.ones(2)
        self.assertEqual(ones + ones, ones.scale(2))
        self.assertEqual(ones - ones, ExactMatrix.identity(2, 0))


class GramTest(SimpleTestCase):
    """Test M @ M.T"""

    def test_identity_mask_levels(self):
        m = two_level(identity_rows(5), 1, Fraction(-2, 3))
        self.assertEqual(gram(m), ExactMatrix.identity(5, Fraction(25, 9)))

    def test_identity(self):
        self.assertEqual(gram(ExactMatrix.identity(3)), ExactMatrix.identity(3))

    def test_sylvester(self):
        self.assertEqual(gram(sylvester(2).to_exact()), ExactMatrix.identity(4, 4))


class DeterminantTest(SimpleTestCase):
    """Test Bareiss elimination"""

    def test_small_examples(self):
        self.assertEqual(det(ExactMatrix([[1, 1], [1, -1]])), -2)
        self.assertEqual(det(ExactMatrix.ones(3)), 0)
        self.assertEqual(det(ExactMatrix([[Fraction(5, 2)]])), Fraction(5, 2))

    def test_zero_pivot_swaps_rows(self):
        self.assertEqual(det(ExactMatrix([[0, 1], [1, 0]])), -1)
        self.assertEqual(det(ExactMatrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])), -1)
        self.assertEqual(det(ExactMatrix([[0, 2, 0], [0, 0, 3], [5, 0, 0]])), 30)

    def test_two_level_order_seven(self):
        y = QuadNum(-2, 1, 2)
        omega = QuadNum(22, -12, 2)
        m = two_level(circulant_incidence((1, 1, 1, 0, 1, 0, 0)).rows, 1, y)
        value = det(m)
        self.assertEqual(value * value, omega ** 7)
        self.assertAlmostEqual(abs(qnum_to_float(value)), 285.31, delta=0.01)

    def test_hadamard_equality(self):
        value = det(sylvester(3).to_exact())
        self.assertEqual(value * value, 8 ** 8)


class PatternDetectorTest(SimpleTestCase):
    """Test is_scalar_identity and is_aI_plus_bJ"""

    def test_scalar_identity(self):
        self.assertEqual(is_scalar_identity(ExactMatrix.identity(5, Fraction(10, 3))), Fraction(10, 3))
        e12 = identity_rows(3)
        e12[0][1] = 1
        self.assertIsNone(is_scalar_identity(ExactMatrix(e12)))
        self.assertEqual(is_scalar_identity(ExactMatrix.identity(3, 0)), 0)

    def test_design_gram(self):
        design = circulant_incidence((1, 1, 1, 0, 1, 0, 0))
        self.assertEqual(is_aI_plus_bJ(gram(design.to_exact())), (2, 2))
        self.assertEqual(is_aI_plus_bJ(gram(design.pm_matrix())), (8, -1))
        self.assertEqual(is_aI_plus_bJ(ExactMatrix.identity(5)), (1, 0))

    def test_not_a_pattern(self):
        m = ExactMatrix([[2, 1, 1], [1, 2, 0], [1, 1, 2]])
        self.assertIsNone(is_aI_plus_bJ(m))
        self.assertEqual(first_off_pattern(m, 1, 1), (1, 2))


class ExactMatrixPropertyTest(HypothesisTestCase):
    """Determinant and Gram invariants on random matrices over Q(sqrt(3))"""

    @settings(deadline=None, max_examples=40)
    @given(matrices, matrices)
    def test_det_is_multiplicative(self, m, n):
        self.assertEqual(det(m @ n), det(m) * det(n))

    @settings(deadline=None, max_examples=40)
    @given(matrices)
    def test_gram_is_symmetric(self, m):
        g = gram(m)
        self.assertEqual(g, g.transpose())

    @settings(deadline=None, max_examples=40)
    @given(matrices)
    def test_det_of_transpose(self, m):
        self.assertEqual(det(m), det(m.transpose()))
