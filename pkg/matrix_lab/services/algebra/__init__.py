"""
Exact algebra - quadratic-field scalars and matrices over them
"""
from .qfield import (
    QuadNum, Rational, squarefree_decompose, qnum_arith, qnum_cmp,
    qnum_to_float, format_quadnum, parse_quadnum,
)
from .exactmat import ExactMatrix, gram, det, is_scalar_identity, is_aI_plus_bJ, first_off_pattern

__all__ = [
    'QuadNum',
    'Rational',
    'squarefree_decompose',
    'qnum_arith',
    'qnum_cmp',
    'qnum_to_float',
    'format_quadnum',
    'parse_quadnum',
    'ExactMatrix',
    'gram',
    'det',
    'is_scalar_identity',
    'is_aI_plus_bJ',
    'first_off_pattern',
]
