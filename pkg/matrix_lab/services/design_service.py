"""
Symmetric block designs: quadratic-residue difference sets, circulant
incidence matrices, verification, complementation and the aI + bJ
determinant formula
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, FrozenSet, Sequence, Tuple

import numpy as np

from ..exceptions import CertificateError, InfeasibleError
from .algebra import ExactMatrix, QuadNum
from .algebra.qfield import Scalar

logger = logging.getLogger(__name__)

Rows = Tuple[Tuple[int, ...], ...]


def as_square_array(matrix: Any, label: str = 'matrix') -> np.ndarray:
    """Read-only int64 copy of a square matrix given as rows or an array"""
    rows = [list(row) for row in matrix]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise CertificateError(f"{label} is not square")
    array = np.array(rows, dtype=np.int64)
    array.setflags(write=False)
    return array


def rows_of(array: np.ndarray) -> Rows:
    return tuple(tuple(row) for row in array.tolist())


@dataclass(frozen=True, eq=False)
class Design:
    """Verified SBIBD(v, k, lambda) and its 0/1 incidence matrix"""
    v: int
    k: int
    lam: int
    incidence: np.ndarray = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Design):
            return NotImplemented
        return self.parameters == other.parameters and np.array_equal(self.incidence, other.incidence)

    def __hash__(self) -> int:
        return hash((self.parameters, self.incidence.tobytes()))

    @property
    def parameters(self) -> Tuple[int, int, int]:
        return self.v, self.k, self.lam

    @property
    def rows(self) -> Rows:
        return rows_of(self.incidence)

    @property
    def meets_convention(self) -> bool:
        """The usual v > 2k and k > 2*lambda orientation"""
        return self.v > 2 * self.k and self.k > 2 * self.lam

    def to_exact(self) -> ExactMatrix:
        return ExactMatrix(self.incidence.tolist())

    def pm_matrix(self) -> ExactMatrix:
        """B = 2A - J"""
        return ExactMatrix((2 * self.incidence - 1).tolist())


def is_prime(n: int) -> bool:
    """Deterministic trial division"""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


def legendre_symbol(a: int, q: int) -> int:
    """(a/q) for an odd prime q, by Euler's criterion"""
    residue = pow(a % q, (q - 1) // 2, q)
    return -1 if residue == q - 1 else residue


def _require_paley_prime(q: int) -> None:
    if not is_prime(q):
        raise InfeasibleError(f"{q} is not prime")
    if q % 4 != 3:
        raise InfeasibleError(f"{q} is not congruent to 3 mod 4")


def qr_difference_set(q: int) -> FrozenSet[int]:
    """
    Nonzero quadratic residues mod q

    Args:
        q: prime with q = 3 (mod 4)

    Returns:
        the (q, (q-1)/2, (q-3)/4) difference set
    """
    _require_paley_prime(q)
    return frozenset(i * i % q for i in range(1, (q - 1) // 2 + 1))


def residue_indicator(q: int) -> Tuple[int, ...]:
    """0/1 first row with a 1 wherever the Legendre symbol (i/q) is 1"""
    _require_paley_prime(q)
    return tuple(1 if legendre_symbol(i, q) == 1 else 0 for i in range(q))


def circulant_incidence(first_row: Sequence[int]) -> Design:
    """Circulant whose row i is first_row rotated right by i, verified as an SBIBD"""
    base = np.asarray(first_row, dtype=np.int64)
    v = base.size
    if v < 3:
        raise InfeasibleError(f"circulant designs need v >= 3, got {v}")
    design = verify_design(np.stack([np.roll(base, i) for i in range(v)]))
    logger.debug("circulant SBIBD%s built", design.parameters)
    return design


def verify_design(matrix: Any, allow_degenerate: bool = False) -> Design:
    """
    Read off (v, k, lambda) and check every SBIBD property exactly

    Args:
        matrix: square 0/1 matrix, as rows or an array
        allow_degenerate: accept k = 0 or k = v (used for level masks)

    Returns:
        Design
    """
    a = as_square_array(matrix, 'incidence matrix')
    v = a.shape[0]
    bad = np.argwhere((a != 0) & (a != 1))
    if bad.size:
        i, j = bad[0]
        raise CertificateError(f"entry at ({i},{j}) is not 0 or 1")

    row_sums, column_sums = a.sum(axis=1), a.sum(axis=0)
    k = int(row_sums[0])
    bad = np.flatnonzero(row_sums != k)
    if bad.size:
        raise CertificateError(f"row {bad[0]} has {row_sums[bad[0]]} ones, expected {k}")
    bad = np.flatnonzero(column_sums != k)
    if bad.size:
        raise CertificateError(f"column {bad[0]} has {column_sums[bad[0]]} ones, expected {k}")
    if not allow_degenerate and k in (0, v):
        raise CertificateError(f"degenerate design: k = {k} with v = {v}")

    meets = a @ a.T
    lam = int(meets[0, 1]) if v > 1 else 0
    bad = np.argwhere(np.triu(meets != lam, 1))
    if bad.size:
        i, j = bad[0]
        raise CertificateError(f"rows ({i},{j}) meet in {meets[i, j]} cells, expected {lam}")

    if lam * (v - 1) != k * (k - 1):
        raise CertificateError(f"lambda(v-1) = k(k-1) fails for ({v},{k},{lam})")

    return Design(v=v, k=k, lam=lam, incidence=a)


def complement(design: Design) -> Design:
    """0 <-> 1 swap: SBIBD(v, v-k, v-2k+lambda)"""
    result = verify_design(1 - design.incidence, allow_degenerate=True)
    expected = (design.v, design.v - design.k, design.v - 2 * design.k + design.lam)
    if design.v > 1 and result.parameters != expected:
        raise CertificateError(f"complement has parameters {result.parameters}, expected {expected}")
    return result


def gram_det_formula(a: Scalar, b: Scalar, n: int) -> QuadNum:
    """det(M)**2 for any order-n M with M @ M.T == a*I + b*J: (a + n*b) * a**(n-1)"""
    a = QuadNum.coerce(a)
    return (a + n * QuadNum.coerce(b)) * a ** (n - 1)


def pm_gram_coefficients(design: Design) -> Tuple[int, int]:
    """
    (a, b) with B @ B.T == a*I + b*J for B = 2A - J

    Expanding 4AA^T - 2AJ - 2JA^T + vJ gives 4(k - lambda) on the identity
    and v - 4(k - lambda) on J; at (4t-1, 2t-1, t-1) this is 4tI - J.
    """
    a = 4 * (design.k - design.lam)
    return a, design.v - a


def incidence_det_squared(design: Design) -> QuadNum:
    """det(A)**2 = k**2 (k - lambda)**(v-1)"""
    return gram_det_formula(design.k - design.lam, design.lam, design.v)


def pm_det_squared(design: Design) -> QuadNum:
    a, b = pm_gram_coefficients(design)
    return gram_det_formula(a, b, design.v)
