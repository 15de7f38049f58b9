"""Статистики таблиц и сверка с производящими многочленами."""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from core.choices import Statistic
from core.exceptions import ArgumentError
from moments.report import Pmf
from polynomials.polynomial import Polynomial
from recurrences.engine import generate
from recurrences.families import FamilyTag, builtin

from .enumeration import enumerate_symmetric, enumerate_tableaux, validate
from .shapes import Tableau

logger = logging.getLogger(__name__)

# Семейство, чьи коэффициенты совпадают с гистограммой статистики.
ORACLES = {
    (Statistic.OCCUPIED_CORNERS, False): FamilyTag.LZ,
    (Statistic.OCCUPIED_CORNERS, True): FamilyTag.LZ_SYMMETRIC,
    (Statistic.DIAGONAL_CELLS, True): FamilyTag.ABN,
}


def parse_statistic(name) -> Statistic:
    """Принимает и occupied_corners, и occupied-corners."""
    try:
        return Statistic(str(name).replace('-', '_'))
    except ValueError:
        raise ArgumentError(
            f'Неизвестная статистика: {name}. '
            f'Доступны: {", ".join(Statistic.values)}.')


@dataclass(frozen=True)
class TableauStats:
    size: int
    corners: int
    occupied_corners: int
    diagonal_cells: Optional[int] = None

    def value(self, statistic: str) -> int:
        value = getattr(self, parse_statistic(statistic).value)
        if value is None:
            raise ArgumentError(
                'Диагональные клетки считаются только для симметричных '
                'таблиц.')
        return value


def stats(tableau: Tableau) -> TableauStats:
    """
    Углы, занятые углы и, для симметричной таблицы, число клеток (i, i).

    Угол - клетка, правая и нижняя стороны которой лежат на границе.
    """
    validate(tableau)
    corners = tableau.shape.corners()
    diagonal = (len(tableau.shape.diagonal()) if tableau.is_symmetric
                else None)
    return TableauStats(
        size=tableau.size,
        corners=len(corners),
        occupied_corners=sum(1 for cell in corners
                             if cell in tableau.points),
        diagonal_cells=diagonal,
    )


@dataclass(frozen=True)
class StatisticDistribution:
    """
    Гистограмма статистики по всем таблицам.

    Атрибуты:
        n (int): размер, для симметричных таблиц - n_half.
        counts (tuple[int]): counts[k] - число таблиц со значением k.
    """

    statistic: str
    n: int
    symmetric: bool
    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def pmf(self) -> Pmf:
        return Pmf(tuple(Fraction(count, self.total)
                         for count in self.counts))

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial.from_coefficients(self.counts)


def statistic_distribution(statistic: str, n: int,
                           symmetric: bool = False) -> StatisticDistribution:
    statistic = parse_statistic(statistic)
    if statistic == Statistic.DIAGONAL_CELLS and not symmetric:
        raise ArgumentError(
            'Статистика diagonal_cells требует симметричных таблиц.')
    tableaux = enumerate_symmetric(n) if symmetric else enumerate_tableaux(n)
    histogram = Counter(stats(tableau).value(statistic)
                        for tableau in tableaux)
    counts = tuple(histogram.get(k, 0) for k in range(max(histogram) + 1))
    return StatisticDistribution(statistic.value, n, symmetric, counts)


@dataclass(frozen=True)
class Crosscheck:
    distribution: StatisticDistribution
    family: str
    expected: Tuple[int, ...]

    @property
    def match(self) -> bool:
        return self.distribution.counts == self.expected

    def __str__(self) -> str:
        verdict = 'MATCH' if self.match else 'MISMATCH'
        counts = ','.join(str(c) for c in self.distribution.counts)
        line = f'{verdict} counts=[{counts}]'
        if not self.match:
            expected = ','.join(str(c) for c in self.expected)
            line += f' expected=[{expected}] ({self.family})'
        return line


def crosscheck(statistic: str, n: int, symmetric: bool = False) -> Crosscheck:
    """Сравнивает гистограмму с коэффициентами многочлена семейства."""
    statistic = parse_statistic(statistic)
    tag = ORACLES.get((statistic, symmetric))
    if tag is None:
        raise ArgumentError(
            f'Для статистики {statistic.value} '
            f'{"симметричных " if symmetric else ""}таблиц нет '
            'семейства многочленов для сверки.')
    distribution = statistic_distribution(statistic, n, symmetric)
    p = generate(builtin(tag), n)[n]
    expected = tuple(int(c) for c in p.coeffs)
    result = Crosscheck(distribution, str(tag), expected)
    if not result.match:
        logger.warning('%s, n=%d: %s', tag, n, result)
    return result
