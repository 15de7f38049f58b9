from django.core.management.base import CommandError

from cli.base import PolyrecCommand, positive_int
from tableaux.statistics import crosscheck


class Command(PolyrecCommand):
    help = ('Сверяет гистограмму статистики таблиц с коэффициентами '
            'многочлена семейства')

    def add_arguments(self, parser):
        parser.add_argument('--stat', required=True,
                            help='occupied-corners или diagonal-cells')
        parser.add_argument('--n', type=positive_int, required=True)
        parser.add_argument('--symmetric', action='store_true')

    def run(self, **options):
        result = crosscheck(options['stat'], options['n'],
                            options['symmetric'])
        self.stdout.write(str(result))
        if not result.match:
            raise CommandError(
                f'Гистограмма не совпала с многочленом {result.family}.')
