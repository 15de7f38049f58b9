"""Диаграммы Ферре и древовидные таблицы."""
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import FrozenSet, Iterator, List, Tuple

from core.constans import MIN_HALF_PERIMETER
from core.exceptions import ArgumentError, InvalidTableauError

Cell = Tuple[int, int]

POINT = '•'
EMPTY = '.'


@dataclass(frozen=True)
class FerrersShape:
    """
    Выровненная по левому краю диаграмма.

    Атрибуты:
        row_lengths (tuple[int]): длины строк, нестрого убывают.
    """

    row_lengths: Tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(self.row_lengths)
        if not lengths or any(length < 1 for length in lengths):
            raise InvalidTableauError(
                f'Длины строк должны быть положительны: {lengths}.')
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise InvalidTableauError(
                f'Длины строк должны нестрого убывать: {lengths}.')
        object.__setattr__(self, 'row_lengths', lengths)

    @property
    def rows(self) -> int:
        return len(self.row_lengths)

    @property
    def columns(self) -> int:
        return self.row_lengths[0]

    @property
    def half_perimeter(self) -> int:
        return self.rows + self.columns

    def column_height(self, column: int) -> int:
        return sum(1 for length in self.row_lengths if length > column)

    def __contains__(self, cell: Cell) -> bool:
        row, column = cell
        return 0 <= row < self.rows and 0 <= column < self.row_lengths[row]

    def cells(self) -> Iterator[Cell]:
        """Клетки построчно слева направо."""
        for row, length in enumerate(self.row_lengths):
            for column in range(length):
                yield row, column

    def is_corner(self, cell: Cell) -> bool:
        """Правая и нижняя стороны клетки лежат на границе."""
        row, column = cell
        if cell not in self or column != self.row_lengths[row] - 1:
            return False
        return (row == self.rows - 1
                or self.row_lengths[row + 1] <= column)

    def corners(self) -> List[Cell]:
        return [(row, length - 1)
                for row, length in enumerate(self.row_lengths)
                if self.is_corner((row, length - 1))]

    def conjugate(self) -> 'FerrersShape':
        return FerrersShape(tuple(self.column_height(column)
                                  for column in range(self.columns)))

    @property
    def is_symmetric(self) -> bool:
        return self.conjugate() == self

    def diagonal(self) -> List[Cell]:
        return [(i, i) for i in range(min(self.rows, self.columns))
                if (i, i) in self]


@dataclass(frozen=True)
class Tableau:
    """Диаграмма с множеством отмеченных клеток."""

    shape: FerrersShape
    points: FrozenSet[Cell]

    @property
    def size(self) -> int:
        return self.shape.half_perimeter - 1

    def transpose(self) -> 'Tableau':
        return Tableau(self.shape.conjugate(),
                       frozenset((column, row) for row, column in self.points))

    @property
    def is_symmetric(self) -> bool:
        return self.transpose() == self

    def to_text(self) -> str:
        lines = [' '.join(str(length) for length in self.shape.row_lengths)]
        for row, length in enumerate(self.shape.row_lengths):
            lines.append(''.join(
                POINT if (row, column) in self.points else EMPTY
                for column in range(length)))
        return '\n'.join(lines)

    def __str__(self) -> str:
        return self.to_text()


def enumerate_shapes(half_perimeter: int) -> List[FerrersShape]:
    """
    Все диаграммы с числом строк плюс числом столбцов half_perimeter.

    Порядок лексикографический по длинам строк, по убыванию.
    """
    if half_perimeter < MIN_HALF_PERIMETER:
        raise ArgumentError(
            f'Полупериметр должен быть не меньше {MIN_HALF_PERIMETER}.')
    shapes = []
    for columns in range(half_perimeter - 1, 0, -1):
        rows = half_perimeter - columns
        lengths = range(columns, 0, -1)
        for tail in combinations_with_replacement(lengths, rows - 1):
            shapes.append(FerrersShape((columns,) + tail))
    return shapes
