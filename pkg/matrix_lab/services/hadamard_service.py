"""
Hadamard matrices: Sylvester and Paley I constructions, normalization,
verification, and the core <-> SBIBD(4t-1, 2t-1, t-1) correspondence
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..exceptions import CertificateError, InfeasibleError
from .algebra import ExactMatrix
from .design_service import (
    Design, Rows, as_square_array, circulant_incidence, is_prime, residue_indicator, rows_of,
    verify_design,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    """Verified +-1 matrix with H @ H.T == n*I"""
    order: int
    entries: np.ndarray = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HadamardMatrix):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.order, self.entries.tobytes()))

    @property
    def normalized(self) -> bool:
        return bool((self.entries[0] == 1).all() and (self.entries[:, 0] == 1).all())

    @property
    def rows(self) -> Rows:
        return rows_of(self.entries)

    def to_exact(self) -> ExactMatrix:
        return ExactMatrix(self.entries.tolist())


def verify_hadamard(matrix: Any) -> int:
    """
    Check a +-1 matrix is Hadamard

    Returns:
        the order n
    """
    h = as_square_array(matrix)
    n = h.shape[0]
    bad = np.argwhere(np.abs(h) != 1)
    if bad.size:
        i, j = bad[0]
        raise CertificateError(f"entry at ({i},{j}) is not +1 or -1")
    if n > 2 and n % 4:
        raise CertificateError(f"order {n} is not 1, 2 or a multiple of 4")
    products = h @ h.T
    bad = np.argwhere(products != n * np.eye(n, dtype=np.int64))
    if bad.size:
        i, j = bad[0]
        raise CertificateError(f"rows ({i},{j}) have inner product {products[i, j]}, expected 0")
    return n


def _build(matrix: Any) -> HadamardMatrix:
    grid = as_square_array(matrix)
    return HadamardMatrix(order=verify_hadamard(grid), entries=grid)


def from_grid(rows: Any) -> HadamardMatrix:
    """Verify an externally supplied +-1 matrix"""
    return _build(rows)


def sylvester(k: int) -> HadamardMatrix:
    """Order 2**k by H -> [[H, H], [H, -H]] starting from [1]"""
    if k < 0:
        raise InfeasibleError(f"sylvester needs k >= 0, got {k}")
    h = np.ones((1, 1), dtype=np.int64)
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    return _build(h)


def paley_hadamard(q: int) -> HadamardMatrix:
    """Order q + 1 by bordering the +-1 form of the quadratic-residue design"""
    design = circulant_incidence(residue_indicator(q))
    matrix = sbibd_to_hadamard(design)
    logger.debug("Paley I matrix of order %d built from q=%d", matrix.order, q)
    return matrix


def normalize(matrix: HadamardMatrix) -> HadamardMatrix:
    """Negate columns with a -1 in row 0, then rows with a -1 in column 0"""
    h = matrix.entries * matrix.entries[0]
    h = h * h[:, :1]
    h.setflags(write=False)
    return HadamardMatrix(order=matrix.order, entries=h)


def _mersenne_t(v: int) -> int:
    if v < 3 or (v + 1) % 4:
        raise InfeasibleError(f"order {v} is not of the form 4t-1")
    return (v + 1) // 4


def core_to_sbibd(matrix: HadamardMatrix) -> Design:
    """
    Normalize, strip the border, and read the core as an SBIBD(4t-1, 2t-1, t-1)

    The core B must satisfy B @ B.T == 4tI - J; A = (J + B) / 2 is the incidence.
    """
    n = matrix.order
    if n < 4 or n % 4:
        raise InfeasibleError(f"core extraction needs order 4t, got {n}")
    t = n // 4
    core = normalize(matrix).entries[1:, 1:]

    v = n - 1
    expected = 4 * t * np.eye(v, dtype=np.int64) - np.ones((v, v), dtype=np.int64)
    products = core @ core.T
    bad = np.argwhere(products != expected)
    if bad.size:
        i, j = bad[0]
        raise CertificateError(
            f"core entry ({i},{j}) of B B^T is {products[i, j]}, expected {expected[i, j]}"
        )

    design = verify_design((1 + core) // 2)
    if design.parameters != (4 * t - 1, 2 * t - 1, t - 1):
        raise CertificateError(f"core design has parameters {design.parameters}")
    return design


def sbibd_to_hadamard(design: Design) -> HadamardMatrix:
    """Border B = 2A - J with a row and column of ones"""
    t = _mersenne_t(design.v)
    if (design.k, design.lam) != (2 * t - 1, t - 1):
        raise InfeasibleError(
            f"SBIBD{design.parameters} is not in the (4t-1, 2t-1, t-1) family"
        )
    h = np.ones((design.v + 1, design.v + 1), dtype=np.int64)
    h[1:, 1:] = 2 * design.incidence - 1
    return _build(h)


def hadamard_for_order(n: int) -> HadamardMatrix:
    """Sylvester for powers of two, Paley I when n - 1 is a prime = 3 mod 4"""
    if n >= 1 and n & (n - 1) == 0:
        return sylvester(n.bit_length() - 1)
    if n >= 4 and is_prime(n - 1) and (n - 1) % 4 == 3:
        return paley_hadamard(n - 1)
    raise InfeasibleError(f"no generator for order {n}")
