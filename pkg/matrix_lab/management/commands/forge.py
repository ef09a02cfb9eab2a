"""
Management command: construct, convert and verify Hadamard, SBIBD and
Cretan matrices

    python manage.py forge roundtrip --t 2
    python manage.py forge gen-hadamard --order 12 --method paley --out h12.txt
"""
import argparse
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from matrix_lab.controllers import reports
from matrix_lab.controllers.reports import Report
from matrix_lab.exceptions import CertificateError, ForgeError, InfeasibleError, MatrixFormatError
from matrix_lab.repositories import MatrixFileRepository, PortraitRepository
from matrix_lab.repositories.matrix_repositories import GRID, INCIDENCE, JSON
from matrix_lab.services.cretan_service import (
    Convention, cretan_from_sbibd, cretan_to_incidence, det_bounds,
    verify_cretan, verify_orthogonal,
)
from matrix_lab.services.design_service import complement
from matrix_lab.services.hadamard_service import (
    core_to_sbibd, normalize, paley_hadamard, sbibd_to_hadamard, sylvester,
)
from matrix_lab.services.pipeline_service import roundtrip, roundtrip_for_t, scan

logger = logging.getLogger(__name__)

VERBS = [
    ('gen-hadamard', 'Build a Hadamard matrix (Sylvester or Paley I)'),
    ('normalize', 'Normalize a Hadamard matrix: first row and column all +1'),
    ('to-sbibd', 'Hadamard core -> SBIBD(4t-1, 2t-1, t-1)'),
    ('complement', 'Complementary SBIBD'),
    ('to-cretan', 'SBIBD -> two-level Cretan matrix (exact JSON)'),
    ('to-incidence', 'Cretan matrix -> incidence of its 1-cells'),
    ('to-hadamard', 'SBIBD(4t-1, 2t-1, t-1) -> bordered Hadamard matrix'),
    ('verify', 'Verify any supported matrix file exactly'),
    ('bounds', 'Hadamard, Barba and Wojtas determinant bounds'),
    ('roundtrip', 'Hadamard -> SBIBD -> Cretan -> SBIBD -> Hadamard'),
    ('scan', 'Round trip every order 4t with a generator'),
    ('render', 'Write a PGM (P2) portrait of a matrix'),
]


class Command(BaseCommand):
    help = 'Exact Hadamard / SBIBD / Cretan-Mersenne matrix toolkit'

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='JSON report (also CRETAN_FORGE_JSON=1)')

        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--json', action='store_true', default=argparse.SUPPRESS,
                            help='JSON report')

        subparsers = parser.add_subparsers(dest='verb', metavar='verb', required=True)
        sub = {name: subparsers.add_parser(name, help=text, parents=[common]) for name, text in VERBS}

        for name in ('normalize', 'to-sbibd', 'complement', 'to-cretan', 'to-incidence',
                     'to-hadamard', 'verify'):
            sub[name].add_argument('--in', dest='input', default='-', help="input file ('-' = stdin)")
        for name in ('gen-hadamard', 'normalize', 'to-sbibd', 'complement', 'to-cretan',
                     'to-incidence', 'to-hadamard'):
            sub[name].add_argument('--out', dest='output', help='output file (default: stdout)')

        sub['gen-hadamard'].add_argument('--order', type=int, required=True)
        sub['gen-hadamard'].add_argument('--method', choices=['sylvester', 'paley'], required=True)

        sub['to-cretan'].add_argument('--convention', choices=['x-on-ones', 'x-on-zeros'],
                                      default='x-on-zeros')

        sub['bounds'].add_argument('--order', type=int, required=True)

        source = sub['roundtrip'].add_mutually_exclusive_group(required=True)
        source.add_argument('--t', type=int, help='build the order-4t Hadamard matrix')
        source.add_argument('--in', dest='input', help='Hadamard +/- grid file')

        sub['scan'].add_argument('--t-max', dest='t_max', type=int, required=True)
        sub['scan'].add_argument('--workers', type=int, default=None,
                                 help='process-pool width (default: FORGE_SCAN_WORKERS)')
        sub['scan'].add_argument('--xlsx', help='also export the table to an Excel file')

        sub['render'].add_argument('--in', dest='input', required=True)
        sub['render'].add_argument('--out', dest='output', required=True)
        sub['render'].add_argument('--scale', type=int, default=None,
                                   help='k x k pixels per entry (default: FORGE_PORTRAIT_SCALE)')

    def handle(self, *args, **options):
        verb = options['verb']
        self.as_json = reports.json_mode(options.get('json'))
        handler = getattr(self, 'handle_' + verb.replace('-', '_'))
        try:
            handler(options)
        except CertificateError as e:
            raise CommandError(f"certificate failed: {e.certificate}")
        except (InfeasibleError, MatrixFormatError) as e:
            raise CommandError(str(e))
        except ForgeError as e:
            raise CommandError(f"{verb} failed: {e}")

    # -- helpers -----------------------------------------------------------

    def _load(self, options, *kinds):
        loaded = MatrixFileRepository.load(options.get('input'))
        if kinds and loaded.kind not in kinds:
            raise MatrixFormatError(f"expected {' or '.join(kinds)} input, got {loaded.kind}")
        return loaded

    def _emit(self, artifact: str, report: Report, options) -> None:
        """Artifact to --out (report to stdout) or to stdout directly"""
        output = options.get('output')
        if output:
            MatrixFileRepository.write_text(output, artifact)
            report.values['written'] = output
            self.stdout.write(report.render(self.as_json), ending='')
        elif self.as_json:
            report.values['artifact'] = artifact
            self.stdout.write(report.render(True), ending='')
        else:
            self.stdout.write(artifact, ending='')

    def _report(self, report: Report) -> None:
        self.stdout.write(report.render(self.as_json), ending='')

    # -- verbs -------------------------------------------------------------

    def handle_gen_hadamard(self, options):
        order, method = options['order'], options['method']
        if method == 'sylvester':
            if order < 1 or order & (order - 1):
                raise InfeasibleError(f"sylvester needs a power-of-two order, got {order}")
            matrix = sylvester(order.bit_length() - 1)
        else:
            matrix = paley_hadamard(order - 1)
        report = Report('gen-hadamard', values={'method': method, **reports.hadamard_values(matrix)},
                        certificates=[f'gram = {order}I'])
        self._emit(MatrixFileRepository.format_grid(matrix), report, options)

    def handle_normalize(self, options):
        matrix = normalize(self._load(options, GRID).hadamard)
        report = Report('normalize', values=reports.hadamard_values(matrix))
        self._emit(MatrixFileRepository.format_grid(matrix), report, options)

    def handle_to_sbibd(self, options):
        design = core_to_sbibd(self._load(options, GRID).hadamard)
        report = Report('to-sbibd', values=reports.design_values(design),
                        certificates=['B B^T = 4tI - J', 'A A^T = (k-lambda)I + lambda J'])
        self._emit(MatrixFileRepository.format_incidence(design), report, options)

    def handle_complement(self, options):
        design = complement(self._load(options, INCIDENCE).design)
        report = Report('complement', values=reports.design_values(design))
        self._emit(MatrixFileRepository.format_incidence(design), report, options)

    def handle_to_cretan(self, options):
        design = self._load(options, INCIDENCE).design
        cretan = cretan_from_sbibd(design, Convention.parse(options['convention']))
        report = Report('to-cretan', values=reports.cretan_values(cretan),
                        certificates=['gram = omega I', '|y| <= 1'])
        payload = MatrixFileRepository.cretan_to_dict(cretan)
        self._emit(MatrixFileRepository.dumps(payload), report, options)

    def handle_to_incidence(self, options):
        loaded = self._load(options, JSON)
        design = cretan_to_incidence(verify_cretan(loaded.exact))
        report = Report('to-incidence', values=reports.design_values(design))
        self._emit(MatrixFileRepository.format_incidence(design), report, options)

    def handle_to_hadamard(self, options):
        matrix = sbibd_to_hadamard(self._load(options, INCIDENCE).design)
        report = Report('to-hadamard', values=reports.hadamard_values(matrix),
                        certificates=[f'gram = {matrix.order}I'])
        self._emit(MatrixFileRepository.format_grid(matrix), report, options)

    def handle_verify(self, options):
        loaded = self._load(options)
        if loaded.kind == GRID:
            report = Report('verify', values={'kind': 'hadamard', **reports.hadamard_values(loaded.hadamard)},
                            certificates=[f'gram = {loaded.hadamard.order}I'])
        elif loaded.kind == INCIDENCE:
            report = Report('verify', values={'kind': 'sbibd', **reports.design_values(loaded.design)},
                            certificates=['row sums = k', 'pairwise meets = lambda',
                                          'lambda(v-1) = k(k-1)'])
        else:
            report = self._verify_exact(loaded)
        self._report(report)

    def _verify_exact(self, loaded) -> Report:
        omega = verify_orthogonal(loaded.exact)
        certificates = ['|s_ij| <= 1', 'a 1 in every row and column', 'gram = omega I']
        try:
            cretan = verify_cretan(loaded.exact)
        except CertificateError as e:
            logger.info("orthogonal but not two-level SBIBD-patterned: %s", e.certificate)
            return Report('verify', values={'kind': 'orthogonal', 'order': loaded.exact.order,
                                            'omega': omega, 'omega_float': float(omega)},
                          certificates=certificates)

        if loaded.metadata:
            y, recorded_omega = MatrixFileRepository.metadata_levels(loaded.metadata)
            if y != cretan.y or recorded_omega != cretan.omega:
                raise CertificateError("metadata levels disagree with the matrix")
            certificates.append('metadata matches')
        return Report('verify', values={'kind': 'cretan', **reports.cretan_values(cretan)},
                      certificates=certificates)

    def handle_bounds(self, options):
        n = options['order']
        if n < 1:
            raise InfeasibleError(f"order must be >= 1, got {n}")
        self._report(Report('bounds', values=reports.bounds_values(n, det_bounds(n))))

    def handle_roundtrip(self, options):
        if options.get('t') is not None:
            result = roundtrip_for_t(options['t'])
        else:
            matrix = self._load(options, GRID).hadamard
            result = roundtrip(matrix)
        report = Report('roundtrip', values=reports.roundtrip_values(result),
                        certificates=result.stages)
        self._report(report)

    def handle_scan(self, options):
        workers = options['workers'] if options['workers'] is not None else settings.FORGE_SCAN_WORKERS
        rows = scan(options['t_max'], workers=workers)
        if options.get('xlsx'):
            reports.export_scan(rows, options['xlsx'])
        failures = [row for row in rows if str(row['status']).startswith('fail')]
        if self.as_json:
            report = Report('scan', passed=not failures, values={'t_max': options['t_max'], 'rows': rows})
            self._report(report)
        else:
            self.stdout.write(reports.scan_table(rows), ending='')
        if failures:
            raise CertificateError(f"t = {failures[0]['t']}: {failures[0]['status']}")

    def handle_render(self, options):
        scale = options['scale'] if options['scale'] is not None else settings.FORGE_PORTRAIT_SCALE
        matrix = self._load(options).as_exact()
        PortraitRepository.render(matrix, options['output'], scale=scale)
        size = matrix.order * scale
        report = Report('render', values={'order': matrix.order, 'scale': scale,
                                          'width': size, 'height': size,
                                          'written': options['output']})
        self._report(report)
