"""
Tests for PGM portraits
"""
import tempfile
from fractions import Fraction
from pathlib import Path

from django.test import SimpleTestCase

from matrix_lab.repositories import PortraitRepository, gray_level
from matrix_lab.services.algebra import ExactMatrix, QuadNum
from matrix_lab.services.cretan_service import Convention, cretan_from_sbibd
from matrix_lab.services.design_service import circulant_incidence


class GrayLevelTest(SimpleTestCase):
    """Test gray = round(255 * (value + 1) / 2)"""

    def test_levels(self):
        self.assertEqual(gray_level(QuadNum(1)), 255)
        self.assertEqual(gray_level(QuadNum(-1)), 0)
        self.assertEqual(gray_level(QuadNum(0)), 128)
        self.assertEqual(gray_level(QuadNum(-2, 1, 2)), 53)
        self.assertEqual(gray_level(QuadNum(Fraction(-2, 3))), 43)

    def test_clamped(self):
        self.assertEqual(gray_level(QuadNum(2)), 255)
        self.assertEqual(gray_level(QuadNum(-3)), 0)


class PortraitTest(SimpleTestCase):
    """Test rendering and reading P2 files"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = str(Path(self.tmp.name) / 'portrait.pgm')
        design = circulant_incidence((1, 1, 1, 0, 1, 0, 0))
        self.cretan = cretan_from_sbibd(design, Convention.X_ON_ONES)

    def tearDown(self):
        self.tmp.cleanup()

    def test_plain_ascii_header(self):
        text = PortraitRepository.render(self.cretan.matrix, self.path)
        self.assertEqual(text.splitlines()[:3], ['P2', '7 7', '255'])
        self.assertEqual(Path(self.path).read_text(encoding='ascii'), text)

    def test_read_back(self):
        PortraitRepository.render(self.cretan.matrix, self.path)
        pixels = PortraitRepository.read(self.path)
        self.assertEqual(len(pixels), 7)
        self.assertEqual({p for row in pixels for p in row}, {255, 53})
        self.assertEqual(pixels[0], [255, 255, 255, 53, 255, 53, 53])

    def test_levels_invert_within_one_step(self):
        PortraitRepository.render(self.cretan.matrix, self.path)
        pixels = PortraitRepository.read(self.path)
        for i, row in enumerate(pixels):
            for j, gray in enumerate(row):
                exact = float(self.cretan.matrix[i, j])
                self.assertLessEqual(abs(PortraitRepository.level_of(gray) - exact), 2 / 255)

    def test_scale(self):
        PortraitRepository.render(self.cretan.matrix, self.path, scale=3)
        pixels = PortraitRepository.read(self.path)
        self.assertEqual(len(pixels), 21)
        self.assertEqual(len(pixels[0]), 21)
        self.assertEqual(pixels[0][:4], [255, 255, 255, 255])
        self.assertEqual(pixels[2][9:12], [53, 53, 53])

    def test_bad_scale(self):
        with self.assertRaises(ValueError):
            PortraitRepository.to_image(ExactMatrix.identity(2), scale=0)
