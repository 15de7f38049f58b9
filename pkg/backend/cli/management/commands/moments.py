from django.core.management.base import CommandError

from api.serializers import MomentReportSerializer
from cli.base import (USAGE_ERROR, PolyrecCommand, non_negative_int,
                      positive_int)
from core.choices import Mode, OutputFormat
from core.constans import DEFAULT_RMAX
from moments.recurrence import derivative_vector_recurrence
from moments.report import moment_report
from polynomials.rational import format_rational
from recurrences.engine import generate

CSV_COLUMNS = ('n', 'mean', 'variance', 'm3', 'm4')


class Command(PolyrecCommand):
    help = 'Таблица факториальных моментов P_0, ..., P_nmax'

    formats = (OutputFormat.CSV, OutputFormat.JSON, OutputFormat.TEXT)

    def add_arguments(self, parser):
        self.add_family_arguments(parser)
        parser.add_argument('--nmax', type=non_negative_int, required=True)
        parser.add_argument('--rmax', type=positive_int,
                            default=DEFAULT_RMAX)
        parser.add_argument('--vector-recurrence', action='store_true',
                            help='Считать без построения многочленов')
        parser.add_argument('--float', action='store_true',
                            help='Векторная рекуррентность в float')
        parser.add_argument('--floats', action='store_true',
                            help='Десятичная запись в CSV (с потерей '
                                 'точности)')
        self.add_format_argument(parser)

    def reports(self, spec, options):
        if options['float'] and not options['vector_recurrence']:
            raise CommandError('--float требует --vector-recurrence.',
                               returncode=USAGE_ERROR)
        if options['vector_recurrence']:
            mode = Mode.FLOAT if options['float'] else Mode.EXACT
            return derivative_vector_recurrence(
                spec, options['nmax'], options['rmax'], mode)
        return [moment_report(p, options['rmax'], n=n)
                for n, p in enumerate(generate(spec, options['nmax']))]

    def render(self, value, floats):
        if value is None:
            return ''
        if floats or isinstance(value, float):
            return repr(float(value))
        return format_rational(value)

    def run(self, **options):
        reports = self.reports(self.get_spec(options), options)
        if options['format'] == OutputFormat.JSON:
            self.write_json(MomentReportSerializer(reports, many=True).data)
            return
        rows = []
        for report in reports:
            standardized = tuple(report.standardized_moments or ())
            standardized += (None,) * (2 - len(standardized))
            rows.append([report.n] + [
                self.render(value, options['floats'])
                for value in (report.mean, report.variance)
                + standardized[:2]])
        if options['format'] == OutputFormat.CSV:
            self.write_csv(CSV_COLUMNS, rows)
            return
        for row in rows:
            self.stdout.write(' '.join(
                f'{name}={value}' for name, value in zip(CSV_COLUMNS, row)))
