"""Общие части команд: выбор семейства, формат вывода, ошибки."""
import argparse
import csv
import json
import logging
from fractions import Fraction

from django.core.management.base import BaseCommand, CommandError

from api.serializers import RecurrenceSpecSerializer
from core.choices import OutputFormat
from core.exceptions import PolyrecError, SpecError
from polynomials.rational import to_rational
from recurrences.families import FamilyId, builtin
from recurrences.specs import RecurrenceSpec

USAGE_ERROR = 2
FAMILY_PARAMETERS = ('a', 'b', 'c', 'm')


def non_negative_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{value!r} не целое число')
    if number < 0:
        raise argparse.ArgumentTypeError(
            f'{value} - ожидается неотрицательное целое')
    return number


def positive_int(value: str) -> int:
    number = non_negative_int(value)
    if number == 0:
        raise argparse.ArgumentTypeError('ожидается целое больше 0')
    return number


def rational(value: str) -> Fraction:
    try:
        return to_rational(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f'{value!r} не рациональное число вида p/q')


def rational_interval(value: str):
    """Отрезок в виде "lo,hi"."""
    parts = value.split(',')
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f'{value!r} - ожидается пара lo,hi')
    lo, hi = (rational(part.strip()) for part in parts)
    if lo > hi:
        raise argparse.ArgumentTypeError(f'{value!r}: lo больше hi')
    return lo, hi


def load_spec(path: str) -> RecurrenceSpec:
    """Читает рекуррентность из JSON в формате --emit-spec."""
    try:
        with open(path, mode='r', encoding='utf-8') as file:
            data = json.load(file)
    except FileNotFoundError:
        raise CommandError(f'Файл {path} не найден.')
    except json.JSONDecodeError as error:
        raise SpecError(f'Файл {path} не является JSON: {error}.')
    serializer = RecurrenceSpecSerializer(data=data)
    if not serializer.is_valid():
        raise SpecError(
            f'Некорректная рекуррентность в {path}: '
            f'{json.dumps(serializer.errors, ensure_ascii=False)}')
    return serializer.save()


class PolyrecCommand(BaseCommand):
    """
    База команд: ошибки вычислений превращаются в CommandError.

    Наследники реализуют run(**options) вместо handle.
    """

    formats = (OutputFormat.TEXT, OutputFormat.JSON)
    default_family = None

    def add_family_arguments(self, parser, spec_file=True):
        group = parser.add_mutually_exclusive_group(
            required=self.default_family is None)
        group.add_argument('--family', default=self.default_family,
                           help='Встроенное семейство, например lz или hj')
        if spec_file:
            group.add_argument('--spec-file',
                               help='JSON с рекуррентностью (--emit-spec)')
        for name in FAMILY_PARAMETERS:
            parser.add_argument(f'--{name}', type=rational,
                                help=f'Параметр семейства {name}')

    def add_format_argument(self, parser):
        parser.add_argument('--format', choices=self.formats,
                            default=self.formats[0],
                            help='Формат вывода')

    def family_id(self, options) -> FamilyId:
        params = {name: options.get(name) for name in FAMILY_PARAMETERS}
        return FamilyId.parse(options['family'], **params)

    def get_spec(self, options) -> RecurrenceSpec:
        if options.get('spec_file'):
            if any(options.get(name) is not None
                   for name in FAMILY_PARAMETERS):
                raise CommandError(
                    'Параметры семейства не сочетаются с --spec-file.',
                    returncode=USAGE_ERROR)
            return load_spec(options['spec_file'])
        return builtin(self.family_id(options))

    def handle(self, *args, **options):
        if options['verbosity'] >= 2:
            logging.getLogger().setLevel(logging.DEBUG)
        try:
            self.run(**options)
        except PolyrecError as error:
            raise CommandError(str(error))

    def run(self, **options):
        raise NotImplementedError

    def write_json(self, data):
        self.stdout.write(json.dumps(data, ensure_ascii=False, indent=2))

    def write_csv(self, header, rows):
        writer = csv.writer(self.stdout, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
