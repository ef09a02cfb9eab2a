"""
Structured command reports, rendered as text or JSON
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd
from django.conf import settings

from ..services.algebra import QuadNum, format_quadnum
from ..services.cretan_service import CretanMatrix, DeterminantBounds, asymptotic_bounds, weight_and_det
from ..services.design_service import Design, incidence_det_squared, pm_gram_coefficients
from ..services.hadamard_service import HadamardMatrix
from ..services.pipeline_service import RoundtripReport

SCAN_COLUMNS = ['t', 'order', 'cretan_order', 'generator', 'status', 'y', 'omega',
                'omega_float', 'det', 'barba_ratio']


def _plain(value: Any) -> Any:
    """JSON-ready copy: QuadNum -> canonical text, tuples -> lists"""
    if isinstance(value, QuadNum):
        return format_quadnum(value)
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


@dataclass
class Report:
    """Result of one forge command; every pass/fail comes from an exact check"""
    verb: str
    passed: bool = True
    values: Dict[str, Any] = field(default_factory=dict)
    certificates: List[str] = field(default_factory=list)

    def as_dict(self) -> Dict[str, Any]:
        return {
            'schema': settings.FORGE_REPORT_SCHEMA,
            'verb': self.verb,
            'status': 'pass' if self.passed else 'fail',
            'values': _plain(self.values),
            'certificates': list(self.certificates),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, allow_nan=False) + '\n'

    def to_text(self) -> str:
        lines = [f"{self.verb}: {'pass' if self.passed else 'fail'}"]
        for key, value in _plain(self.values).items():
            lines.append(f"  {key}: {_text_value(value)}")
        for certificate in self.certificates:
            lines.append(f"  [pass] {certificate}")
        return '\n'.join(lines) + '\n'

    def render(self, as_json: bool) -> str:
        return self.to_json() if as_json else self.to_text()


def _text_value(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.10g}"
    if isinstance(value, dict):
        return ', '.join(f"{key}={_text_value(item)}" for key, item in value.items())
    if isinstance(value, list):
        return '(' + ', '.join(_text_value(item) for item in value) + ')'
    if value is None:
        return '-'
    return str(value)


def hadamard_values(matrix: HadamardMatrix) -> Dict[str, Any]:
    n = matrix.order
    return {
        'order': n,
        'normalized': matrix.normalized,
        'det_sq': n ** n,
    }


def design_values(design: Design) -> Dict[str, Any]:
    a, b = pm_gram_coefficients(design)
    return {
        'v': design.v,
        'k': design.k,
        'lambda': design.lam,
        'meets_convention': design.meets_convention,
        'incidence_det_sq': incidence_det_squared(design),
        'pm_gram': {'a': a, 'b': b},
    }


def cretan_values(cretan: CretanMatrix) -> Dict[str, Any]:
    omega, det_sq, det_float = weight_and_det(cretan)
    return {
        'v': cretan.v,
        'k': cretan.pattern.k,
        'lambda': cretan.pattern.lam,
        'convention': cretan.convention.value if cretan.convention else None,
        'x': cretan.x,
        'y': cretan.y,
        'y_float': float(cretan.y),
        'omega': omega,
        'omega_float': float(omega),
        'det_sq': det_sq,
        'det': det_float,
    }


def bounds_values(n: int, bounds: DeterminantBounds) -> Dict[str, Any]:
    asymptotic = asymptotic_bounds(n)
    return {
        'order': n,
        'hadamard': bounds.hadamard,
        'barba': bounds.barba,
        'wojtas': bounds.wojtas,
        'hadamard_log10': bounds.hadamard_log10,
        'barba_log10': bounds.barba_log10,
        'wojtas_log10': bounds.wojtas_log10,
        'barba_asymptotic': asymptotic['barba'] if bounds.barba_log10 is not None else None,
        'wojtas_asymptotic': asymptotic['wojtas'] if bounds.wojtas_log10 is not None else None,
    }


def roundtrip_values(report: RoundtripReport) -> Dict[str, Any]:
    return {
        'order': report.order,
        't': report.t,
        'generator': report.generator,
        'design': report.design,
        'y': report.y,
        'omega': report.omega,
        'omega_float': float(report.omega),
        'det_sq': report.det_sq,
        'det': report.det,
        'barba_ratio': report.barba_ratio,
        'hadamard_ratio': report.hadamard_ratio,
        'final_equals_initial': 'pass' if report.final_equals_initial else 'fail',
        'conventions': _convention_summary(report.conventions),
    }


def _convention_summary(conventions: Dict[str, Any]) -> Dict[str, Any]:
    summary: Dict[str, Any] = {}
    for name, entry in conventions.items():
        if isinstance(entry, dict):
            summary[f'{name}_omega'] = float(entry['omega'])
            summary[f'{name}_det'] = entry['det']
        else:
            summary[name] = entry
    return summary


def scan_frame(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=SCAN_COLUMNS)


def scan_table(rows: List[Dict[str, Any]]) -> str:
    frame = scan_frame(rows)
    return frame.to_string(index=False, na_rep='-', float_format=lambda x: f"{x:.6g}") + '\n'


def export_scan(rows: List[Dict[str, Any]], path: str) -> None:
    scan_frame(rows).to_excel(path, index=False, engine='openpyxl')


def json_mode(flag: Optional[bool]) -> bool:
    return bool(flag) or settings.CRETAN_FORGE_JSON
