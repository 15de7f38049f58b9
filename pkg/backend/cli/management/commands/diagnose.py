from django.core.management.base import CommandError

from api.serializers import (CltReportSerializer, LocalLimitReportSerializer,
                             PoissonDiagnosisSerializer,
                             ScaledMomentReportSerializer)
from cli.base import (USAGE_ERROR, PolyrecCommand, non_negative_int,
                      positive_int, rational)
from core.choices import OutputFormat
from core.constans import (DEFAULT_GRID_POINTS, DEFAULT_RMAX,
                           DEFAULT_SCALED_KMAX)
from limits.clt import clt_report
from limits.local import local_limit_report
from limits.poisson import diagnose_poisson
from limits.scaled import scaled_moment_limit
from recurrences.families import FamilyTag

POISSON = 'poisson'
CLT = 'clt'
LOCAL_LIMIT = 'local-limit'
SCALED_MOMENTS = 'scaled-moments'

DEFAULT_FAMILIES = {
    POISSON: FamilyTag.LZ,
    CLT: FamilyTag.ABN,
    LOCAL_LIMIT: FamilyTag.ABN,
    SCALED_MOMENTS: FamilyTag.AH,
}
DEFAULT_N = {
    POISSON: 50,
    CLT: 25,
    LOCAL_LIMIT: 60,
    SCALED_MOMENTS: 10_000,
}


class Command(PolyrecCommand):
    help = ('Диагностика предельного закона: poisson, clt, local-limit, '
            'scaled-moments')

    default_family = ''

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=tuple(DEFAULT_FAMILIES))
        self.add_family_arguments(parser)
        parser.add_argument('--n', type=non_negative_int,
                            help='n для clt и local-limit')
        parser.add_argument('--nmax', type=positive_int,
                            help='nmax для poisson и scaled-moments')
        parser.add_argument('--rmax', type=positive_int,
                            default=DEFAULT_RMAX)
        parser.add_argument('--eps', type=rational)
        parser.add_argument('--kmax', type=positive_int,
                            default=DEFAULT_SCALED_KMAX)
        parser.add_argument('--points', type=positive_int,
                            default=DEFAULT_GRID_POINTS,
                            help='Число точек логарифмической сетки')
        self.add_format_argument(parser)

    def run(self, **options):
        kind = options['kind']
        if not options['family'] and not options.get('spec_file'):
            options['family'] = DEFAULT_FAMILIES[kind]
        n = options['n'] if options['n'] is not None else DEFAULT_N[kind]
        nmax = (options['nmax'] if options['nmax'] is not None
                else DEFAULT_N[kind])
        if kind == POISSON:
            report = diagnose_poisson(self.get_spec(options), nmax,
                                      options['rmax'])
            serializer, lines = PoissonDiagnosisSerializer, self.poisson
        elif kind == CLT:
            report = clt_report(self.get_spec(options), n, options['eps'])
            serializer, lines = CltReportSerializer, self.clt
        elif kind == LOCAL_LIMIT:
            if options.get('spec_file'):
                raise CommandError('local-limit работает только со '
                                   'встроенными семействами.',
                                   returncode=USAGE_ERROR)
            report = local_limit_report(self.family_id(options), n)
            serializer, lines = LocalLimitReportSerializer, self.local
        else:
            report = scaled_moment_limit(
                self.get_spec(options), nmax, options['kmax'],
                options['points'])
            serializer, lines = ScaledMomentReportSerializer, self.scaled
        if options['format'] == OutputFormat.JSON:
            self.write_json(serializer(report).data)
            return
        for line in lines(report):
            self.stdout.write(line)

    def poisson(self, report):
        yield f'{report.family}: предел {report.limit}'
        constant = 'да' if report.c_is_constant else 'нет'
        yield f'c_n постоянно: {constant}, c = {report.c_limit:.6g}'
        yield (f'max_r |E(X_{report.nmax})_r - c^r| = '
               f'{report.max_deviation_at_nmax:.6g}')

    def clt(self, report):
        yield (f'{report.family}, n={report.n}: '
               f'корни вещественные: {report.certificate.real_rooted}')
        yield f'среднее {report.mean}, дисперсия {report.variance}'
        if report.lyapunov is not None:
            yield (f'отношение Ляпунова в [{report.lyapunov.lo:.6g}, '
                   f'{report.lyapunov.hi:.6g}]')
            yield (f'm3 = {report.standardized_m3:.6g} '
                   f'(норм. {report.gaussian_m3:g}), '
                   f'm4 = {report.standardized_m4:.6g} '
                   f'(норм. {report.gaussian_m4:g})')

    def local(self, report):
        yield (f'{report.family}, n={report.n}: '
               f'sup_k |P(X=k) - phi(k)| = {report.sup_abs_error:.6g} '
               f'при k={report.argmax}')

    def scaled(self, report):
        yield f'{report.family}: {report.scaling}'
        for n, k, ratio in report.moment_ratios:
            yield f'n={n} k={k} отношение={ratio:.6f}'
        for n, ratio in report.variance_ratios:
            yield (f'n={n} var/n={ratio:.6f} '
                   f'(предел {report.variance_target:.6f})')
