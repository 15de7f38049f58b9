from api.serializers import RootCertificateSerializer
from cli.base import (PolyrecCommand, non_negative_int, rational,
                      rational_interval)
from core.choices import OutputFormat
from core.exceptions import NotRealRootedError
from recurrences.engine import generate
from roots.isolation import isolate


class Command(PolyrecCommand):
    help = 'Проверка вещественности корней P_n и их отделение'

    def add_arguments(self, parser):
        self.add_family_arguments(parser)
        parser.add_argument('--n', type=non_negative_int, required=True)
        parser.add_argument('--eps', type=rational,
                            help='Ширина отделяющих отрезков')
        parser.add_argument('--certify-interval', type=rational_interval,
                            help='Отрезок lo,hi, где должны лежать корни')
        self.add_format_argument(parser)

    def run(self, **options):
        p = generate(self.get_spec(options), options['n'])[-1]
        try:
            certificate = isolate(p, options['eps'],
                                  options['certify_interval'])
        except NotRealRootedError as error:
            certificate = error.certificate
        if options['format'] == OutputFormat.JSON:
            self.write_json(RootCertificateSerializer(certificate).data)
            return
        verdict = ('вещественные' if certificate.real_rooted
                   else 'есть невещественные')
        self.stdout.write(f'P_{options["n"]} = {p}')
        self.stdout.write(f'степень {certificate.degree}, корни {verdict}')
        for root in certificate.roots:
            self.stdout.write(f'  {root}')
        if certificate.expect_interval is not None:
            lo, hi = certificate.expect_interval
            inside = 'да' if certificate.inside_expected else 'нет'
            self.stdout.write(f'все корни в [{lo}, {hi}]: {inside}')
