"""
Перебор древовидных таблиц.

Правила для таблицы размера n (полупериметр n + 1):
    1. клетка (0, 0) отмечена;
    2. в каждой строке и каждом столбце есть отмеченная клетка;
    3. у каждой другой отмеченной клетки есть отмеченная клетка либо
       выше в том же столбце, либо левее в той же строке, но не обе.
"""
import logging
from math import factorial
from typing import Iterator, List, Optional

from django.conf import settings

from core.exceptions import (ArgumentError, EnumerationCapError,
                             InvalidTableauError)

from .shapes import FerrersShape, Tableau, enumerate_shapes

logger = logging.getLogger(__name__)

ROOT = (0, 0)


def violations(tableau: Tableau) -> List[str]:
    """Проверка по определению, без связи с перебором."""
    shape, points = tableau.shape, tableau.points
    problems = []
    outside = sorted(cell for cell in points if cell not in shape)
    if outside:
        problems.append(f'клетки вне диаграммы: {outside}')
    if ROOT not in points:
        problems.append('клетка (0, 0) не отмечена')
    for row in range(shape.rows):
        if not any(r == row for r, _ in points):
            problems.append(f'в строке {row} нет отмеченных клеток')
    for column in range(shape.columns):
        if not any(c == column for _, c in points):
            problems.append(f'в столбце {column} нет отмеченных клеток')
    for row, column in sorted(points):
        if (row, column) == ROOT:
            continue
        above = any((r, column) in points for r in range(row))
        left = any((row, c) in points for c in range(column))
        if above == left:
            problems.append(f'клетка ({row}, {column}) нарушает правило 3')
    return problems


def validate(tableau: Tableau) -> Tableau:
    problems = violations(tableau)
    if problems:
        raise InvalidTableauError(
            'Таблица не древовидная: ' + '; '.join(problems) + '.')
    return tableau


class _ShapeSearch:
    """
    Построчная расстановка отметок в одной диаграмме.

    Последняя клетка строки или столбца без отметок обязана быть
    отмечена. В симметричном режиме клетки под диагональю повторяют
    отражённые клетки.
    """

    def __init__(self, shape: FerrersShape, symmetric: bool = False):
        self.shape = shape
        self.symmetric = symmetric
        self.cells = list(shape.cells())
        self.heights = [shape.column_height(column)
                        for column in range(shape.columns)]

    def run(self) -> Iterator[Tableau]:
        self.points = set()
        self.row_has = [False] * self.shape.rows
        self.column_has = [False] * self.shape.columns
        yield from self._visit(0)

    def _candidates(self, row: int, column: int):
        if self.symmetric and column < row:
            return ((column, row) in self.points,)
        if (row, column) == ROOT:
            return (True,)
        return (False, True)

    def _allowed(self, row: int, column: int) -> bool:
        if (row, column) == ROOT:
            return True
        return self.row_has[row] != self.column_has[column]

    def _forced(self, row: int, column: int) -> bool:
        last_in_row = column == self.shape.row_lengths[row] - 1
        last_in_column = row == self.heights[column] - 1
        return ((last_in_row and not self.row_has[row])
                or (last_in_column and not self.column_has[column]))

    def _visit(self, index: int) -> Iterator[Tableau]:
        if index == len(self.cells):
            yield Tableau(self.shape, frozenset(self.points))
            return
        row, column = self.cells[index]
        allowed = self._allowed(row, column)
        forced = self._forced(row, column)
        for pointed in self._candidates(row, column):
            if (pointed and not allowed) or (not pointed and forced):
                continue
            if not pointed:
                yield from self._visit(index + 1)
                continue
            saved = self.row_has[row], self.column_has[column]
            self.points.add((row, column))
            self.row_has[row] = self.column_has[column] = True
            yield from self._visit(index + 1)
            self.points.discard((row, column))
            self.row_has[row], self.column_has[column] = saved


def tableaux_of_shape(shape: FerrersShape,
                      symmetric: bool = False) -> Iterator[Tableau]:
    if symmetric and not shape.is_symmetric:
        return iter(())
    return _ShapeSearch(shape, symmetric).run()


def check_cap(n: int, cap: int, name: str) -> None:
    if n < 1:
        raise ArgumentError(f'{name} должно быть не меньше 1.')
    if n > cap:
        raise EnumerationCapError(
            f'{name}={n} превышает предел перебора {cap}.')


def _collect(half_perimeter: int, symmetric: bool) -> List[Tableau]:
    result = []
    for shape in enumerate_shapes(half_perimeter):
        found = list(tableaux_of_shape(shape, symmetric))
        logger.debug('Диаграмма %s: %d таблиц', shape.row_lengths, len(found))
        result.extend(found)
    return result


def enumerate_tableaux(n: int, cap: Optional[int] = None) -> List[Tableau]:
    """Все древовидные таблицы размера n; их n!."""
    cap = settings.TABLEAUX_CAP_PLAIN if cap is None else cap
    check_cap(n, cap, 'n')
    result = _collect(n + 1, symmetric=False)
    logger.info('Размер %d: %d таблиц (n! = %d)', n, len(result),
                factorial(n))
    return result


def enumerate_symmetric(n_half: int,
                        cap: Optional[int] = None) -> List[Tableau]:
    """Все симметричные таблицы размера 2 n_half + 1; их 2^n_half n_half!."""
    cap = settings.TABLEAUX_CAP_SYMMETRIC if cap is None else cap
    check_cap(n_half, cap, 'n_half')
    result = _collect(2 * n_half + 2, symmetric=True)
    logger.info('Симметричные, размер %d: %d таблиц', 2 * n_half + 1,
                len(result))
    return result

