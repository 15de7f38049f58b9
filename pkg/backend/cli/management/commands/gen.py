from api.serializers import RecurrenceSpecSerializer
from cli.base import PolyrecCommand, non_negative_int
from core.choices import OutputFormat
from recurrences.engine import generate


class Command(PolyrecCommand):
    help = 'Строит многочлен P_n встроенного или заданного семейства'

    formats = (OutputFormat.TEXT, OutputFormat.JSON, OutputFormat.CSV)

    def add_arguments(self, parser):
        self.add_family_arguments(parser)
        parser.add_argument('--n', type=non_negative_int, required=True,
                            help='Номер многочлена')
        parser.add_argument('--emit-spec', action='store_true',
                            help='Вывести рекуррентность в JSON')
        self.add_format_argument(parser)

    def run(self, **options):
        spec = self.get_spec(options)
        if options['emit_spec']:
            self.write_json(RecurrenceSpecSerializer(spec).data)
            return
        p = generate(spec, options['n'])[-1]
        if options['format'] == OutputFormat.JSON:
            self.write_json(p.to_strings())
        elif options['format'] == OutputFormat.CSV:
            self.write_csv(('k', 'coefficient'), enumerate(p.to_strings()))
        else:
            self.stdout.write(str(p))
