"""
Matrix portraits as plain-ASCII PGM (P2) images
"""
from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path
from typing import List

from PIL import Image

from ..exceptions import MatrixFormatError
from ..services.algebra import ExactMatrix, QuadNum, qnum_cmp, qnum_to_float

MAX_GRAY = 255


def gray_level(entry: QuadNum) -> int:
    """round(255 * (entry + 1) / 2), halves away from zero, clamped to 0..255"""
    target = (QuadNum.coerce(entry) + 1) * MAX_GRAY / 2 + Fraction(1, 2)
    level = math.floor(qnum_to_float(target))
    # settle the float guess exactly: level <= target < level + 1
    while qnum_cmp(target, level) < 0:
        level -= 1
    while qnum_cmp(target, level + 1) >= 0:
        level += 1
    return min(MAX_GRAY, max(0, level))


class PortraitRepository:
    """Render exact matrices to P2 and read P2 files back"""

    @staticmethod
    def to_image(matrix: ExactMatrix, scale: int = 1) -> Image.Image:
        if scale < 1:
            raise ValueError(f"scale must be >= 1, got {scale}")
        n = matrix.order
        image = Image.new('L', (n, n))
        image.putdata([gray_level(entry) for row in matrix.rows for entry in row])
        if scale > 1:
            image = image.resize((n * scale, n * scale), Image.Resampling.NEAREST)
        return image

    @staticmethod
    def to_p2(image: Image.Image) -> str:
        width, height = image.size
        pixels = list(image.getdata())
        lines = ['P2', f'{width} {height}', str(MAX_GRAY)]
        for y in range(height):
            lines.append(' '.join(str(p) for p in pixels[y * width:(y + 1) * width]))
        return '\n'.join(lines) + '\n'

    @classmethod
    def render(cls, matrix: ExactMatrix, path: str, scale: int = 1) -> str:
        text = cls.to_p2(cls.to_image(matrix, scale))
        try:
            Path(path).write_text(text, encoding='ascii')
        except OSError as e:
            raise MatrixFormatError(f"cannot write {path}: {e.strerror}") from e
        return text

    @staticmethod
    def read(path: str) -> List[List[int]]:
        """Gray rows of a PGM file"""
        try:
            with Image.open(path) as image:
                image = image.convert('L')
                width, height = image.size
                pixels = list(image.getdata())
        except OSError as e:
            raise MatrixFormatError(f"cannot read portrait {path}: {e}") from e
        return [pixels[y * width:(y + 1) * width] for y in range(height)]

    @staticmethod
    def level_of(gray: int) -> float:
        """Inverse of gray_level, exact to within one gray step"""
        return 2 * gray / MAX_GRAY - 1
