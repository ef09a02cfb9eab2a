"""
Services layer - exact algebra, designs, Hadamard and Cretan constructions
"""
from .design_service import Design, verify_design, complement, qr_difference_set, circulant_incidence
from .hadamard_service import HadamardMatrix, sylvester, paley_hadamard, normalize, verify_hadamard
from .cretan_service import Convention, CretanMatrix, cretan_from_sbibd, verify_cretan, det_bounds
from .pipeline_service import RoundtripReport, roundtrip, roundtrip_for_t, scan

__all__ = [
    'Design',
    'verify_design',
    'complement',
    'qr_difference_set',
    'circulant_incidence',
    'HadamardMatrix',
    'sylvester',
    'paley_hadamard',
    'normalize',
    'verify_hadamard',
    'Convention',
    'CretanMatrix',
    'cretan_from_sbibd',
    'verify_cretan',
    'det_bounds',
    'RoundtripReport',
    'roundtrip',
    'roundtrip_for_t',
    'scan',
]
