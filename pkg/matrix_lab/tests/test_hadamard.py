"""
Tests for Hadamard constructions and the core <-> SBIBD correspondence
"""
import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from hypothesis.extra.django import TestCase as HypothesisTestCase

from matrix_lab.exceptions import CertificateError, InfeasibleError
from matrix_lab.services.algebra import ExactMatrix, det, gram
from matrix_lab.services.design_service import circulant_incidence, residue_indicator
from matrix_lab.services.hadamard_service import (
    HadamardMatrix, core_to_sbibd, from_grid, hadamard_for_order, normalize, paley_hadamard,
    sbibd_to_hadamard, sylvester, verify_hadamard,
)

signs = st.lists(st.sampled_from([1, -1]), min_size=8, max_size=8)


def signed(matrix, row_signs, column_signs):
    return from_grid([
        [r * c * x for c, x in zip(column_signs, row)]
        for r, row in zip(row_signs, matrix.rows)
    ])


class SylvesterTest(SimpleTestCase):
    """Test the doubling construction"""

    def test_small_orders(self):
        self.assertEqual(sylvester(0).rows, ((1,),))
        self.assertEqual(sylvester(1).rows, ((1, 1), (1, -1)))
        h = sylvester(2)
        self.assertEqual(h.order, 4)
        self.assertEqual(gram(h.to_exact()), ExactMatrix.identity(4, 4))

    def test_doubling_is_a_kronecker_product(self):
        h2 = np.array([[1, 1], [1, -1]])
        for k in (2, 3, 4):
            self.assertTrue(np.array_equal(sylvester(k).entries, np.kron(h2, sylvester(k - 1).entries)))

    def test_normalized_by_construction(self):
        self.assertTrue(sylvester(4).normalized)

    def test_negative_k(self):
        with self.assertRaises(InfeasibleError):
            sylvester(-1)


class PaleyTest(SimpleTestCase):
    """Test Paley I matrices of order q + 1"""

    def test_orders(self):
        for q in (3, 7, 11, 19):
            h = paley_hadamard(q)
            self.assertEqual(h.order, q + 1)
            self.assertEqual(verify_hadamard(h.entries), q + 1)
            self.assertTrue(h.normalized)

    def test_core_is_the_residue_design(self):
        h = paley_hadamard(7)
        core = [row[1:] for row in h.rows[1:]]
        residues = circulant_incidence(residue_indicator(7))
        self.assertEqual([[(1 + x) // 2 for x in row] for row in core], [list(r) for r in residues.rows])

    def test_bad_q(self):
        with self.assertRaises(InfeasibleError):
            paley_hadamard(5)
        with self.assertRaises(InfeasibleError):
            paley_hadamard(15)


class VerifyHadamardTest(SimpleTestCase):
    """Test verify_hadamard certificates"""

    def test_valid(self):
        self.assertEqual(verify_hadamard(sylvester(2).entries), 4)
        self.assertEqual(verify_hadamard(paley_hadamard(11).entries), 12)

    def test_not_orthogonal(self):
        with self.assertRaisesMessage(CertificateError, 'rows (0,1) have inner product 2'):
            verify_hadamard([[1, 1], [1, 1]])

    def test_bad_entry(self):
        with self.assertRaisesMessage(CertificateError, 'entry at (1,1)'):
            verify_hadamard([[1, 1], [1, 0]])

    def test_bad_order(self):
        with self.assertRaisesMessage(CertificateError, 'order 6'):
            verify_hadamard([[1] * 6 for _ in range(6)])

    def test_determinant_meets_hadamard_bound(self):
        value = det(paley_hadamard(7).to_exact())
        self.assertEqual(value * value, 8 ** 8)


class NormalizeTest(SimpleTestCase):
    """Test normalize"""

    def test_idempotent(self):
        h = paley_hadamard(11)
        self.assertEqual(normalize(h), h)
        self.assertEqual(normalize(normalize(h)), normalize(h))

    def test_negated_row(self):
        h = from_grid([[-1, -1], [1, -1]])
        self.assertEqual(normalize(h), sylvester(1))


class CoreCorrespondenceTest(SimpleTestCase):
    """Test core_to_sbibd and sbibd_to_hadamard"""

    def test_core_designs(self):
        self.assertEqual(core_to_sbibd(paley_hadamard(7)).parameters, (7, 3, 1))
        self.assertEqual(core_to_sbibd(sylvester(2)).parameters, (3, 1, 0))
        self.assertEqual(core_to_sbibd(paley_hadamard(11)).parameters, (11, 5, 2))
        self.assertEqual(core_to_sbibd(sylvester(3)).parameters, (7, 3, 1))

    def test_core_certificate_names_the_cell(self):
        unchecked = HadamardMatrix(order=4, entries=np.ones((4, 4), dtype=np.int64))
        with self.assertRaisesMessage(CertificateError, 'core entry (0,1) of B B^T is 3, expected -1'):
            core_to_sbibd(unchecked)

    def test_core_needs_order_4t(self):
        with self.assertRaises(InfeasibleError):
            core_to_sbibd(sylvester(1))

    def test_bordering(self):
        self.assertEqual(sbibd_to_hadamard(circulant_incidence(residue_indicator(7))).order, 8)
        self.assertEqual(sbibd_to_hadamard(core_to_sbibd(sylvester(2))).order, 4)

    def test_wrong_family(self):
        with self.assertRaises(InfeasibleError):
            sbibd_to_hadamard(circulant_incidence((1, 1, 1, 0, 1, 0, 0)))

    def test_round_trips(self):
        for h in (sylvester(2), sylvester(3), sylvester(4), paley_hadamard(11), paley_hadamard(19)):
            with self.subTest(order=h.order):
                design = core_to_sbibd(h)
                self.assertEqual(sbibd_to_hadamard(design), normalize(h))
                self.assertEqual(core_to_sbibd(sbibd_to_hadamard(design)), design)


class GeneratorSelectionTest(SimpleTestCase):
    """Test hadamard_for_order"""

    def test_selection(self):
        self.assertEqual(hadamard_for_order(8), sylvester(3))
        self.assertEqual(hadamard_for_order(12), paley_hadamard(11))
        self.assertEqual(hadamard_for_order(1).order, 1)

    def test_no_generator(self):
        with self.assertRaisesMessage(InfeasibleError, 'no generator for order 36'):
            hadamard_for_order(36)


class NormalizePropertyTest(HypothesisTestCase):
    """Normalization under random row and column signings"""

    @settings(deadline=None, max_examples=30)
    @given(signs, signs)
    def test_signed_paley_matrix(self, row_signs, column_signs):
        h = signed(paley_hadamard(7), row_signs, column_signs)
        normal = normalize(h)
        self.assertTrue(normal.normalized)
        self.assertEqual(verify_hadamard(normal.entries), 8)
        self.assertEqual(core_to_sbibd(h).parameters, (7, 3, 1))

    @settings(deadline=None, max_examples=15)
    @given(signs, signs)
    def test_determinant_magnitude_preserved(self, row_signs, column_signs):
        h = signed(sylvester(3), row_signs, column_signs)
        before, after = det(h.to_exact()), det(normalize(h).to_exact())
        self.assertEqual(before * before, after * after)
