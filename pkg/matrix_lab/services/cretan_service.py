"""
Two-level Cretan matrices from SBIBD masks

Levels: x = 1 on the mask's 1-cells, y on its 0-cells, with y chosen as a
root of the characteristic equation. Also exact orthogonality checks,
weight / determinant reporting and the Barba, Wojtas and Hadamard bounds.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..exceptions import CertificateError, InfeasibleError
from .algebra import (
    ExactMatrix, QuadNum, first_off_pattern, gram, qnum_cmp, qnum_to_float, squarefree_decompose,
)
from .design_service import Design, Rows, complement, verify_design

logger = logging.getLogger(__name__)


class Convention(str, Enum):
    """Which cells of the design receive the level x = 1"""
    X_ON_ONES = 'x_on_ones'
    X_ON_ZEROS = 'x_on_zeros'

    @classmethod
    def parse(cls, text: str) -> Convention:
        return cls(text.replace('-', '_'))


@dataclass(frozen=True)
class TwoLevelPattern:
    """0/1 mask: 1-cells hold x, 0-cells hold y"""
    v: int
    k: int
    lam: int
    mask: Rows = field(repr=False)

    @classmethod
    def from_mask(cls, mask: Sequence[Sequence[int]]) -> TwoLevelPattern:
        design = verify_design(mask, allow_degenerate=True)
        return cls(v=design.v, k=design.k, lam=design.lam, mask=design.rows)

    @classmethod
    def from_design(cls, design: Design, convention: Convention) -> TwoLevelPattern:
        source = design if convention is Convention.X_ON_ONES else complement(design)
        return cls(v=source.v, k=source.k, lam=source.lam, mask=source.rows)


@dataclass(frozen=True)
class LevelSolution:
    """Root y of c_yy*y**2 + c_xy*x*y + c_xx*x**2 = 0 at x = 1"""
    coefficients: Tuple[int, int, int]
    discriminant: int
    y: QuadNum
    feasible: bool


@dataclass(frozen=True)
class CretanMatrix:
    """Verified two-level matrix S with S @ S.T == omega*I"""
    v: int
    pattern: TwoLevelPattern
    x: QuadNum
    y: QuadNum
    omega: QuadNum
    matrix: ExactMatrix = field(repr=False)
    convention: Optional[Convention] = None


@dataclass(frozen=True)
class DeterminantBounds:
    """Float bounds are None when they do not apply or overflow; log10 forms always fit"""
    hadamard: Optional[float]
    barba: Optional[float]
    wojtas: Optional[float]
    hadamard_log10: float
    barba_log10: Optional[float] = None
    wojtas_log10: Optional[float] = None


def characteristic_coeffs(pattern: TwoLevelPattern) -> Tuple[int, int, int]:
    """
    (c_yy, c_xy, c_xx) of the distinct-row inner product

    Two rows share lambda x-cells, 2(k - lambda) mixed cells and
    v - 2k + lambda y-cells.
    """
    v, k, lam = pattern.v, pattern.k, pattern.lam
    return v - 2 * k + lam, 2 * (k - lam), lam


def _evaluate(coefficients: Tuple[int, int, int], y: QuadNum) -> QuadNum:
    c_yy, c_xy, c_xx = coefficients
    return c_yy * y * y + c_xy * y + c_xx


def solve_levels(pattern: TwoLevelPattern) -> LevelSolution:
    """
    Fix x = 1 and solve the characteristic equation for y exactly

    Among real roots with |y| <= 1 the smallest |y| wins, ties going to
    the +sqrt branch. y = 0 only survives when it is the sole feasible root.
    """
    coefficients = characteristic_coeffs(pattern)
    c_yy, c_xy, c_xx = coefficients

    if c_yy == 0:
        if c_xy == 0:
            raise InfeasibleError("characteristic equation does not involve y")
        discriminant = c_xy * c_xy
        roots = [QuadNum(-c_xx) / c_xy]
    else:
        discriminant = c_xy * c_xy - 4 * c_yy * c_xx
        if discriminant < 0:
            raise InfeasibleError(f"negative discriminant {discriminant}: no real level y")
        root = QuadNum.sqrt(discriminant)
        roots = [(-c_xy + root) / (2 * c_yy), (-c_xy - root) / (2 * c_yy)]
        if discriminant == 0:
            roots = roots[:1]

    feasible = [y for y in roots if qnum_cmp(abs(y), 1) <= 0]
    if not feasible:
        raise InfeasibleError(
            "every root has |y| > 1: " + ", ".join(str(y) for y in roots)
        )
    nonzero = [y for y in feasible if y]
    if nonzero:
        feasible = nonzero
    # stable min keeps the +sqrt root on ties
    best = feasible[0]
    for y in feasible[1:]:
        if qnum_cmp(abs(y), abs(best)) < 0:
            best = y

    if _evaluate(coefficients, best):
        raise CertificateError(f"characteristic polynomial does not vanish at y = {best}")
    return LevelSolution(coefficients=coefficients, discriminant=discriminant, y=best, feasible=True)


def mersenne_level(t: int) -> QuadNum:
    """y = (-t + sqrt(t)) / (t - 1); -1/2 at t = 1 where the equation is linear"""
    if t < 1:
        raise ValueError(f"mersenne_level needs t >= 1, got {t}")
    if t == 1:
        return QuadNum(-1) / 2
    s, m = squarefree_decompose(t)
    return (QuadNum(-t) + QuadNum(0, s, m)) / (t - 1)


def _fill(mask: Rows, x: QuadNum, y: QuadNum) -> ExactMatrix:
    return ExactMatrix([[x if cell else y for cell in row] for row in mask])


def verify_orthogonal(matrix: ExactMatrix) -> QuadNum:
    """
    Cretan property of any number of levels: |s_ij| <= 1, a 1 in every row
    and column, S @ S.T == omega*I

    Returns:
        omega
    """
    n = matrix.order
    for i, row in enumerate(matrix.rows):
        for j, entry in enumerate(row):
            if qnum_cmp(abs(entry), 1) > 0:
                raise CertificateError(f"entry modulus exceeds 1 at ({i},{j})")
    for i, row in enumerate(matrix.rows):
        if not any(entry == 1 for entry in row):
            raise CertificateError(f"row {i} has no entry equal to 1")
    for j in range(n):
        if not any(matrix[i, j] == 1 for i in range(n)):
            raise CertificateError(f"column {j} has no entry equal to 1")

    g = gram(matrix)
    omega = g[0, 0]
    # g is symmetric, so the first bad off-diagonal cell has i < j
    cell = first_off_pattern(g, omega, 0)
    if cell is not None:
        i, j = cell
        if i != j:
            raise CertificateError(f"characteristic equation violated at rows ({i},{j})")
        raise CertificateError(f"radius equation violated at row {i}")
    return omega


def _certify(pattern: TwoLevelPattern, x: QuadNum, y: QuadNum,
             convention: Optional[Convention]) -> CretanMatrix:
    if x != 1:
        raise CertificateError(f"level x must be exactly 1, got {x}")
    if qnum_cmp(abs(y), 1) > 0:
        raise CertificateError(f"level y = {y} has modulus above 1")
    matrix = _fill(pattern.mask, x, y)
    omega = verify_orthogonal(matrix)
    radius = pattern.k * x * x + (pattern.v - pattern.k) * y * y
    if omega != radius:
        raise CertificateError(f"weight {omega} differs from radius form {radius}")
    return CretanMatrix(v=pattern.v, pattern=pattern, x=x, y=y, omega=omega,
                        matrix=matrix, convention=convention)


def cretan_from_sbibd(design: Design, convention: Convention = Convention.X_ON_ZEROS) -> CretanMatrix:
    """
    Two-level Cretan matrix of order v from an SBIBD(v, k, lambda)

    Args:
        design: verified design
        convention: x on the design's ones, or on its zeros

    Returns:
        CretanMatrix with omega = k'x**2 + (v - k')y**2, k' the x-cells per row
    """
    pattern = TwoLevelPattern.from_design(design, convention)
    solution = solve_levels(pattern)
    cretan = _certify(pattern, QuadNum(1), solution.y, convention)
    logger.debug("Cretan(%d) from SBIBD%s, %s: y = %s, omega = %s",
                 design.v, design.parameters, convention.value, cretan.y, cretan.omega)
    return cretan


def verify_cretan(matrix: ExactMatrix) -> CretanMatrix:
    """Rebuild a two-level Cretan matrix from its entries alone"""
    verify_orthogonal(matrix)
    levels = {entry for row in matrix.rows for entry in row}
    if len(levels) > 2:
        raise CertificateError(f"more than two levels ({len(levels)} distinct entries)")
    others = [level for level in levels if level != 1]
    y = others[0] if others else QuadNum(0)
    mask = [[1 if entry == 1 else 0 for entry in row] for row in matrix.rows]
    try:
        pattern = TwoLevelPattern.from_mask(mask)
    except CertificateError as e:
        raise CertificateError(f"level mask is not a design: {e.certificate}") from e
    return _certify(pattern, QuadNum(1), y, None)


def weight_and_det(cretan: CretanMatrix) -> Tuple[QuadNum, QuadNum, Optional[float]]:
    """(omega, det**2 = omega**v, |det| as float or None past the float range)"""
    omega = cretan.omega
    return omega, omega ** cretan.v, _scaled_power(1.0, qnum_to_float(omega), cretan.v / 2)


def det_log10(cretan: CretanMatrix) -> float:
    """log10 |det| = (v/2) log10(omega)"""
    return _log10_power(qnum_to_float(cretan.omega), cretan.v / 2)


def _scaled_power(scale: float, base: float, exponent: float) -> Optional[float]:
    try:
        value = scale * float(base) ** exponent
    except OverflowError:
        return None
    return value if math.isfinite(value) else None


def _log10_power(base: float, exponent: float) -> float:
    return exponent * math.log10(base) if exponent else 0.0


def det_bounds(n: int) -> DeterminantBounds:
    """
    Hadamard n**(n/2); Barba sqrt(2n-1)(n-1)**((n-1)/2) for odd n;
    Wojtas 2(n-1)(n-2)**((n-2)/2) for n = 2 mod 4
    """
    if n < 1:
        raise ValueError(f"bounds need n >= 1, got {n}")
    barba = barba_log10 = wojtas = wojtas_log10 = None
    if n % 2:
        barba = _scaled_power(math.sqrt(2 * n - 1), n - 1, (n - 1) / 2)
        barba_log10 = math.log10(2 * n - 1) / 2 + _log10_power(n - 1, (n - 1) / 2)
    if n % 4 == 2:
        wojtas = _scaled_power(2 * (n - 1), n - 2, (n - 2) / 2)
        wojtas_log10 = math.log10(2 * (n - 1)) + _log10_power(n - 2, (n - 2) / 2)
    return DeterminantBounds(
        hadamard=_scaled_power(1.0, n, n / 2),
        barba=barba,
        wojtas=wojtas,
        hadamard_log10=_log10_power(n, n / 2),
        barba_log10=barba_log10,
        wojtas_log10=wojtas_log10,
    )


def asymptotic_bounds(n: int) -> Dict[str, Optional[float]]:
    """Large-n forms: Barba ~ 0.858 n**(n/2), Wojtas ~ 0.736 n**(n/2)"""
    return {'barba': _scaled_power(0.858, n, n / 2), 'wojtas': _scaled_power(0.736, n, n / 2)}


def cretan_to_incidence(cretan: CretanMatrix) -> Design:
    """Keep the entries equal to 1, zero the rest"""
    if cretan.y == 1:
        raise CertificateError("level y equals 1; x-cells are not recoverable")
    mask = [[1 if entry == 1 else 0 for entry in row] for row in cretan.matrix.rows]
    return verify_design(mask)


def cretan_to_sbibd(cretan: CretanMatrix) -> Design:
    """The design the matrix was built from, in its original orientation"""
    incidence = cretan_to_incidence(cretan)
    if cretan.convention is Convention.X_ON_ZEROS:
        return complement(incidence)
    return incidence


def compare_conventions(design: Design) -> Dict[str, object]:
    """Both Cretan matrices of one design, and which has the larger determinant"""
    results: Dict[str, object] = {}
    omegas: List[Tuple[Convention, QuadNum]] = []
    for convention in Convention:
        try:
            cretan = cretan_from_sbibd(design, convention)
        except (InfeasibleError, CertificateError) as e:
            logger.warning("SBIBD%s has no %s solution: %s", design.parameters, convention.value, e)
            results[convention.value] = None
            continue
        omega, det_sq, det_float = weight_and_det(cretan)
        results[convention.value] = {
            'y': cretan.y,
            'omega': omega,
            'det_sq': det_sq,
            'det': det_float,
        }
        omegas.append((convention, omega))

    larger = None
    if len(omegas) == 2:
        ordering = qnum_cmp(omegas[0][1], omegas[1][1])
        larger = 'equal' if ordering == 0 else (omegas[0] if ordering > 0 else omegas[1])[0].value
    elif omegas:
        larger = omegas[0][0].value
    results['larger_det'] = larger
    return results
