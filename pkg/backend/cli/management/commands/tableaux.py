from api.serializers import (StatisticDistributionSerializer,
                             TableauSerializer)
from cli.base import PolyrecCommand, positive_int
from core.choices import OutputFormat, Statistic
from tableaux.enumeration import enumerate_symmetric, enumerate_tableaux
from tableaux.statistics import statistic_distribution

ENUMERATE = 'enumerate'
DISTRIBUTION = 'distribution'


class Command(PolyrecCommand):
    help = 'Перебор древовидных таблиц и гистограммы их статистик'

    def add_arguments(self, parser):
        parser.add_argument('action', choices=(ENUMERATE, DISTRIBUTION))
        parser.add_argument('--size', type=positive_int, required=True,
                            help='Размер n (n_half для --symmetric)')
        parser.add_argument('--stat', default=Statistic.OCCUPIED_CORNERS,
                            help='occupied-corners, corners или '
                                 'diagonal-cells')
        parser.add_argument('--symmetric', action='store_true')
        self.add_format_argument(parser)

    def run(self, **options):
        size, symmetric = options['size'], options['symmetric']
        as_json = options['format'] == OutputFormat.JSON
        if options['action'] == DISTRIBUTION:
            distribution = statistic_distribution(options['stat'], size,
                                                  symmetric)
            if as_json:
                self.write_json(
                    StatisticDistributionSerializer(distribution).data)
                return
            counts = ','.join(str(c) for c in distribution.counts)
            self.stdout.write(
                f'{distribution.statistic} n={size}: counts=[{counts}]')
            return
        found = (enumerate_symmetric(size) if symmetric
                 else enumerate_tableaux(size))
        if as_json:
            self.write_json(TableauSerializer(found, many=True).data)
            return
        self.stdout.write('\n\n'.join(t.to_text() for t in found))
