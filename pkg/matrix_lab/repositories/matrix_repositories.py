"""
Matrix file formats: +/- grids, SBIBD incidence text, and the exact JSON
interchange format. The format is detected from the first line, not the
file extension, so every reader also works on stdin.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ..exceptions import CertificateError, MatrixFormatError
from ..services.algebra import ExactMatrix, QuadNum, format_quadnum, parse_quadnum
from ..services.cretan_service import CretanMatrix
from ..services.design_service import Design, verify_design
from ..services.hadamard_service import HadamardMatrix, from_grid

GRID = 'grid'
INCIDENCE = 'incidence'
JSON = 'json'
PORTRAIT = 'portrait'


@dataclass
class LoadedMatrix:
    """A parsed input file; `kind` says which of the payload fields is set"""
    kind: str
    hadamard: Optional[HadamardMatrix] = None
    design: Optional[Design] = None
    exact: Optional[ExactMatrix] = None
    metadata: Optional[Dict[str, Any]] = None

    def as_exact(self) -> ExactMatrix:
        if self.kind == GRID:
            return self.hadamard.to_exact()
        if self.kind == INCIDENCE:
            return self.design.to_exact()
        return self.exact


class MatrixFileRepository:
    """Read, detect, parse and serialise matrix files"""

    @staticmethod
    def read_text(path: Optional[str]) -> str:
        """Contents of path, or of stdin for None / '-'"""
        from_stdin = not path or path == '-'
        try:
            return sys.stdin.read() if from_stdin else Path(path).read_text(encoding='utf-8')
        except UnicodeDecodeError as e:
            source = 'stdin' if from_stdin else path
            raise MatrixFormatError(f"{source} is not UTF-8 text: {e.reason} at byte {e.start}") from e
        except OSError as e:
            raise MatrixFormatError(f"cannot read {path}: {e.strerror}") from e

    @staticmethod
    def write_text(path: str, text: str) -> None:
        try:
            Path(path).write_text(text, encoding='utf-8')
        except OSError as e:
            raise MatrixFormatError(f"cannot write {path}: {e.strerror}") from e

    @staticmethod
    def detect_format(text: str) -> str:
        first = next((line.strip() for line in text.splitlines() if line.strip()), '')
        if not first:
            raise MatrixFormatError("input is empty")
        if first.startswith('sbibd'):
            return INCIDENCE
        if first.startswith('P2'):
            return PORTRAIT
        if first.startswith('{'):
            return JSON
        if set(first) <= set('+-'):
            return GRID
        if set(first) <= set('01'):
            return INCIDENCE
        raise MatrixFormatError(f"unrecognised first line: {first[:40]!r}")

    # -- +/- grids ---------------------------------------------------------

    @staticmethod
    def parse_grid(text: str) -> List[List[int]]:
        rows = []
        for number, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            if not set(line) <= set('+-'):
                raise MatrixFormatError(f"line {number}: grid rows use only '+' and '-'")
            rows.append([1 if ch == '+' else -1 for ch in line])
        return rows

    @staticmethod
    def format_grid(matrix: HadamardMatrix) -> str:
        return ''.join(''.join('+' if x == 1 else '-' for x in row) + '\n' for row in matrix.rows)

    # -- incidence text ----------------------------------------------------

    @staticmethod
    def parse_incidence(text: str) -> Tuple[Optional[Tuple[int, int, int]], List[List[int]]]:
        header = None
        rows = []
        for number, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith('sbibd'):
                parts = line.split()
                try:
                    _, v, k, lam = parts
                    header = (int(v), int(k), int(lam))
                except ValueError as e:
                    raise MatrixFormatError(f"line {number}: header must be 'sbibd v k lambda'") from e
                continue
            if not set(line) <= set('01'):
                raise MatrixFormatError(f"line {number}: incidence rows use only '0' and '1'")
            rows.append([int(ch) for ch in line])
        return header, rows

    @staticmethod
    def format_incidence(design: Design) -> str:
        lines = [f"sbibd {design.v} {design.k} {design.lam}"]
        lines += [''.join(str(x) for x in row) for row in design.rows]
        return '\n'.join(lines) + '\n'

    # -- exact JSON --------------------------------------------------------

    @staticmethod
    def _fraction_pair(value: Fraction) -> List[int]:
        return [value.numerator, value.denominator]

    @classmethod
    def matrix_to_dict(cls, matrix: ExactMatrix) -> Dict[str, Any]:
        return {
            'order': matrix.order,
            'disc': matrix.disc,
            'entries': [
                [{'a': cls._fraction_pair(x.a), 'b': cls._fraction_pair(x.b)} for x in row]
                for row in matrix.rows
            ],
        }

    @staticmethod
    def matrix_from_dict(payload: Dict[str, Any]) -> ExactMatrix:
        try:
            order = int(payload['order'])
            disc = int(payload['disc'])
            rows = []
            for row in payload['entries']:
                rows.append([
                    QuadNum(Fraction(*cell['a']), Fraction(*cell['b']), disc)
                    for cell in row
                ])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise MatrixFormatError(f"malformed matrix JSON: {e}") from e
        if len(rows) != order:
            raise MatrixFormatError(f"matrix JSON declares order {order} but has {len(rows)} rows")
        try:
            return ExactMatrix(rows)
        except ValueError as e:
            raise MatrixFormatError(str(e)) from e

    @classmethod
    def cretan_to_dict(cls, cretan: CretanMatrix) -> Dict[str, Any]:
        payload = cls.matrix_to_dict(cretan.matrix)
        payload['metadata'] = {
            'v': cretan.v,
            'k': cretan.pattern.k,
            'lambda': cretan.pattern.lam,
            'convention': cretan.convention.value if cretan.convention else None,
            'y': format_quadnum(cretan.y),
            'omega': format_quadnum(cretan.omega),
        }
        return payload

    @staticmethod
    def dumps(payload: Dict[str, Any]) -> str:
        return json.dumps(payload, indent=2) + '\n'

    # -- loading -----------------------------------------------------------

    @classmethod
    def load(cls, path: Optional[str]) -> LoadedMatrix:
        """Read path (or stdin), detect its format and verify what it claims to be"""
        return cls.loads(cls.read_text(path))

    @classmethod
    def loads(cls, text: str) -> LoadedMatrix:
        kind = cls.detect_format(text)
        if kind == GRID:
            return LoadedMatrix(kind=GRID, hadamard=from_grid(cls.parse_grid(text)))
        if kind == INCIDENCE:
            header, rows = cls.parse_incidence(text)
            design = verify_design(rows)
            if header is not None and header != design.parameters:
                raise CertificateError(
                    f"header claims sbibd {header} but the incidence is {design.parameters}"
                )
            return LoadedMatrix(kind=INCIDENCE, design=design)
        if kind == JSON:
            try:
                payload = json.loads(text)
            except json.JSONDecodeError as e:
                raise MatrixFormatError(f"invalid JSON: {e.msg} (line {e.lineno})") from e
            return LoadedMatrix(kind=JSON, exact=cls.matrix_from_dict(payload),
                                metadata=payload.get('metadata'))
        raise MatrixFormatError("portrait images are not exact matrices")

    @staticmethod
    def metadata_levels(metadata: Dict[str, Any]) -> Tuple[QuadNum, QuadNum]:
        """(y, omega) recorded in a Cretan JSON metadata block"""
        try:
            return parse_quadnum(metadata['y']), parse_quadnum(metadata['omega'])
        except (KeyError, ValueError) as e:
            raise MatrixFormatError(f"malformed Cretan metadata: {e}") from e
