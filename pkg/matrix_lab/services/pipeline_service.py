"""
Hadamard -> SBIBD -> Cretan-Mersenne -> SBIBD -> Hadamard round trip,
and the scan over t that runs it for every order with a generator
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, TypeVar

from ..exceptions import CertificateError, ForgeError, InfeasibleError
from .algebra import QuadNum
from .cretan_service import (
    Convention, compare_conventions, cretan_from_sbibd, cretan_to_sbibd,
    det_bounds, det_log10, mersenne_level, weight_and_det,
)
from .hadamard_service import (
    HadamardMatrix, core_to_sbibd, hadamard_for_order, normalize,
    sbibd_to_hadamard, verify_hadamard,
)

logger = logging.getLogger(__name__)

T = TypeVar('T')


@dataclass
class RoundtripReport:
    """Outcome of one Hadamard -> Cretan -> Hadamard pass"""
    order: int
    t: int
    design: tuple
    y: QuadNum
    omega: QuadNum
    det_sq: QuadNum
    det: Optional[float]
    barba: Optional[float]
    hadamard_bound: Optional[float]
    det_log10: float
    barba_log10: float
    hadamard_log10: float
    final_equals_initial: bool
    generator: str = 'input'
    stages: List[str] = field(default_factory=list)
    conventions: Dict[str, object] = field(default_factory=dict)

    @property
    def barba_ratio(self) -> float:
        return 10.0 ** (self.det_log10 - self.barba_log10)

    @property
    def hadamard_ratio(self) -> float:
        return 10.0 ** (self.det_log10 - self.hadamard_log10)


def _stage(name: str, stages: List[str], action: Callable[[], T]) -> T:
    try:
        result = action()
    except ForgeError as e:
        logger.warning("roundtrip stage %s failed: %s", name, e)
        raise CertificateError(f"{name}: {e}") from e
    stages.append(name)
    logger.info("roundtrip stage %s passed", name)
    return result


def roundtrip(matrix: HadamardMatrix, generator: str = 'input') -> RoundtripReport:
    """
    Run the full equivalence pipeline on a Hadamard matrix of order 4t

    Every stage is an exact certificate; the first failure aborts with a
    CertificateError naming the stage.
    """
    n = matrix.order
    if n < 4 or n % 4:
        raise InfeasibleError(f"roundtrip needs order 4t, got {n}")
    t = n // 4
    stages: List[str] = []

    normal = _stage('normalize', stages, lambda: normalize(matrix))
    design = _stage('core_to_sbibd', stages, lambda: core_to_sbibd(normal))
    cretan = _stage('cretan_from_sbibd', stages,
                    lambda: cretan_from_sbibd(design, Convention.X_ON_ZEROS))

    def check_level():
        expected = mersenne_level(t)
        if cretan.y != expected:
            raise CertificateError(f"level y = {cretan.y} differs from the Mersenne level {expected}")
        return expected

    _stage('mersenne_level', stages, check_level)

    def recover_design():
        recovered = cretan_to_sbibd(cretan)
        if recovered != design:
            raise CertificateError("recovered incidence differs from the core design")
        return recovered

    recovered = _stage('cretan_to_incidence', stages, recover_design)
    rebuilt = _stage('sbibd_to_hadamard', stages, lambda: sbibd_to_hadamard(recovered))
    _stage('verify_hadamard', stages, lambda: verify_hadamard(rebuilt.entries))

    final_equals_initial = rebuilt == normal
    if not final_equals_initial:
        raise CertificateError("final matrix differs from the normalized input")

    omega, det_sq, det_float = weight_and_det(cretan)
    bounds = det_bounds(cretan.v)
    return RoundtripReport(
        order=n,
        t=t,
        design=design.parameters,
        y=cretan.y,
        omega=omega,
        det_sq=det_sq,
        det=det_float,
        barba=bounds.barba,
        hadamard_bound=bounds.hadamard,
        det_log10=det_log10(cretan),
        barba_log10=bounds.barba_log10,
        hadamard_log10=bounds.hadamard_log10,
        final_equals_initial=final_equals_initial,
        generator=generator,
        stages=stages,
        conventions=compare_conventions(design),
    )


def generator_name(order: int) -> str:
    return 'sylvester' if order & (order - 1) == 0 else 'paley'


def roundtrip_for_t(t: int) -> RoundtripReport:
    """Build a Hadamard matrix of order 4t with whichever generator applies, then roundtrip it"""
    if t < 1:
        raise InfeasibleError(f"t must be >= 1, got {t}")
    order = 4 * t
    matrix = hadamard_for_order(order)
    return roundtrip(matrix, generator=generator_name(order))


def scan_row(t: int) -> Dict[str, object]:
    """One scan table row; failures are recorded, not raised"""
    row: Dict[str, object] = {'t': t, 'order': 4 * t, 'cretan_order': 4 * t - 1}
    try:
        report = roundtrip_for_t(t)
    except InfeasibleError as e:
        if 'no generator' not in str(e):
            raise
        row.update({'generator': '-', 'status': 'no generator', 'y': '', 'omega': '',
                    'omega_float': None, 'det': None, 'barba_ratio': None})
        return row
    except CertificateError as e:
        row.update({'generator': generator_name(4 * t), 'status': f'fail: {e.certificate}',
                    'y': '', 'omega': '', 'omega_float': None, 'det': None, 'barba_ratio': None})
        return row

    row.update({
        'generator': report.generator,
        'status': 'pass',
        'y': str(report.y),
        'omega': str(report.omega),
        'omega_float': float(report.omega),
        'det': report.det,
        'barba_ratio': report.barba_ratio,
    })
    return row


def scan(t_max: int, workers: Optional[int] = 1) -> List[Dict[str, object]]:
    """
    Round trip every t in 1..t_max that has a generator

    Rows come back in t order regardless of worker count.
    """
    if t_max < 1:
        raise InfeasibleError(f"t_max must be >= 1, got {t_max}")
    values = range(1, t_max + 1)
    logger.info("scanning t = 1..%d with %s worker(s)", t_max, workers or 1)
    if not workers or workers <= 1:
        return [scan_row(t) for t in values]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(scan_row, values))
