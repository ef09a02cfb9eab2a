"""
Dense square matrices over QuadNum: products, Gram matrices, determinants
"""
from __future__ import annotations

import math
from fractions import Fraction
from operator import mul
from typing import Iterable, List, Optional, Sequence, Tuple

from ...exceptions import RadicandMismatchError
from .qfield import QuadNum, Scalar


class ExactMatrix:
    """Immutable n x n matrix of QuadNum entries sharing one radicand"""

    __slots__ = ('_rows', '_order', '_disc')

    def __init__(self, rows: Iterable[Iterable[Scalar]]) -> None:
        converted = tuple(tuple(QuadNum.coerce(x) for x in row) for row in rows)
        n = len(converted)
        if n == 0:
            raise ValueError("ExactMatrix needs order >= 1")
        if any(len(row) != n for row in converted):
            raise ValueError("ExactMatrix must be square")

        disc = 1
        for row in converted:
            for x in row:
                if x.d == 1:
                    continue
                if disc == 1:
                    disc = x.d
                elif x.d != disc:
                    raise RadicandMismatchError(disc, x.d)

        self._rows = converted
        self._order = n
        self._disc = disc

    @classmethod
    def identity(cls, n: int, scale: Scalar = 1) -> ExactMatrix:
        return cls([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int) -> ExactMatrix:
        return cls([[1] * n for _ in range(n)])

    @property
    def order(self) -> int:
        return self._order

    @property
    def disc(self) -> int:
        """Common radicand of the entries (1 when all are rational)"""
        return self._disc

    @property
    def rows(self) -> Tuple[Tuple[QuadNum, ...], ...]:
        return self._rows

    def __getitem__(self, index: Tuple[int, int]) -> QuadNum:
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"ExactMatrix(order={self._order}, disc={self._disc})"

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(zip(*self._rows))

    def map(self, fn) -> ExactMatrix:
        return ExactMatrix([[fn(x) for x in row] for row in self._rows])

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def scale(self, factor: Scalar) -> ExactMatrix:
        return self.map(lambda x: x * factor)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return _integer_product(self, other.transpose())


def _integer_rows(m: ExactMatrix) -> Tuple[int, List[List[int]], List[List[int]]]:
    """Scale every entry by the lcm of all denominators

    Returns (L, A, B) with entry(i, j) == (A[i][j] + B[i][j]*sqrt(d)) / L.
    """
    denominator = 1
    for row in m.rows:
        for x in row:
            denominator = math.lcm(denominator, x.a.denominator, x.b.denominator)
    rational = [[int(x.a * denominator) for x in row] for row in m.rows]
    radical = [[int(x.b * denominator) for x in row] for row in m.rows]
    return denominator, rational, radical


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(map(mul, u, v))


def _integer_product(left: ExactMatrix, right_transposed: ExactMatrix) -> ExactMatrix:
    """left @ right, with the right factor given by its rows (= columns of right)"""
    if left.order != right_transposed.order:
        raise ValueError("matrix orders differ")
    d = left.disc if left.disc != 1 else right_transposed.disc
    if 1 not in (left.disc, right_transposed.disc) and left.disc != right_transposed.disc:
        raise RadicandMismatchError(left.disc, right_transposed.disc)

    l_scale, la, lb = _integer_rows(left)
    r_scale, ra, rb = _integer_rows(right_transposed)
    scale = l_scale * r_scale
    n = left.order
    product = []
    for i in range(n):
        row = []
        for j in range(n):
            rational = _dot(la[i], ra[j]) + d * _dot(lb[i], rb[j])
            radical = _dot(la[i], rb[j]) + _dot(lb[i], ra[j])
            row.append(QuadNum(Fraction(rational, scale), Fraction(radical, scale), d))
        product.append(row)
    return ExactMatrix(product)


def gram(m: ExactMatrix) -> ExactMatrix:
    """M @ M.T, computed on integer-scaled rows"""
    scale, ra, rb = _integer_rows(m)
    d = m.disc
    n = m.order
    square = scale * scale
    cells: List[List[Optional[QuadNum]]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rational = _dot(ra[i], ra[j]) + d * _dot(rb[i], rb[j])
            radical = _dot(ra[i], rb[j]) + _dot(rb[i], ra[j])
            value = QuadNum(Fraction(rational, square), Fraction(radical, square), d)
            cells[i][j] = value
            cells[j][i] = value
    return ExactMatrix(cells)


def det(m: ExactMatrix) -> QuadNum:
    """
    Exact determinant by Bareiss fraction-free elimination

    Pivots are the first nonzero entry of the column, scanning rows top-down;
    each swap flips the sign.
    """
    n = m.order
    work = [list(row) for row in m.rows]
    if n == 1:
        return work[0][0]

    sign = 1
    previous = QuadNum(1)
    for k in range(n - 1):
        if not work[k][k]:
            for i in range(k + 1, n):
                if work[i][k]:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return QuadNum(0)

        pivot = work[k][k]
        for i in range(k + 1, n):
            lead = work[i][k]
            row_i, row_k = work[i], work[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) / previous
        previous = pivot

    return work[n - 1][n - 1] if sign > 0 else -work[n - 1][n - 1]


def is_scalar_identity(m: ExactMatrix) -> Optional[QuadNum]:
    """omega when m == omega*I exactly, else None"""
    omega = m[0, 0]
    for i, row in enumerate(m.rows):
        for j, x in enumerate(row):
            if i == j:
                if x != omega:
                    return None
            elif x:
                return None
    return omega


def is_aI_plus_bJ(m: ExactMatrix) -> Optional[Tuple[QuadNum, QuadNum]]:
    """(a, b) when m == a*I + b*J exactly, else None"""
    if m.order == 1:
        return m[0, 0], QuadNum(0)
    b = m[0, 1]
    a = m[0, 0] - b
    for i, row in enumerate(m.rows):
        for j, x in enumerate(row):
            expected = a + b if i == j else b
            if x != expected:
                return None
    return a, b


def first_off_pattern(target: ExactMatrix, a: Scalar, b: Scalar) -> Optional[Tuple[int, int]]:
    """First (i, j) where target differs from a*I + b*J, scanning row-major"""
    diagonal = QuadNum.coerce(a) + b
    off = QuadNum.coerce(b)
    for i, row in enumerate(target.rows):
        for j, x in enumerate(row):
            if x != (diagonal if i == j else off):
                return i, j
    return None
