"""
Производные в единице без построения самих многочленов.

По формуле Лейбница вектор v_n = (P_n(1), P_n'(1), ..., P_n^(r)(1))
получается из v_{n-1} умножением на нижнетреугольную матрицу, если
g_n(1) = 0.
"""
import logging
from fractions import Fraction
from math import comb
from typing import Iterable, List, Optional

import numpy as np

from core.choices import Form, Mode
from core.constans import STANDARDIZED_KMAX
from core.exceptions import (ArgumentError, DegenerateDistributionError,
                             HypothesisError)
from recurrences.specs import RecurrenceSpec

from .report import MomentReport, check_rmax, report_from_derivatives

logger = logging.getLogger(__name__)


def transition_matrix(spec: RecurrenceSpec, n: int,
                      rmax: int) -> List[List[Fraction]]:
    """Матрица перехода v_{n-1} -> v_n размера (rmax + 1) x (rmax + 1)."""
    f = spec.f.instantiate(n).derivatives_at_one(rmax)
    g = spec.g.instantiate(n).derivatives_at_one(rmax)
    size = rmax + 1
    matrix = [[Fraction(0)] * size for _ in range(size)]
    if spec.form == Form.DIRECT:
        for r in range(size):
            for k in range(r + 1):
                matrix[r][r - k] += comb(r, k) * f[k]
            for k in range(1, r + 1):
                matrix[r][r - k + 1] += comb(r, k) * g[k]
        return matrix
    matrix[0][0] = spec.normalization.ratio(n)
    for r in range(1, size):
        for k in range(r):
            matrix[r][r - 1 - k] += comb(r - 1, k) * f[k]
        for k in range(1, r):
            matrix[r][r - k] += comb(r - 1, k) * g[k]
    return matrix


def derivative_vector_recurrence(
    spec: RecurrenceSpec,
    nmax: int,
    rmax: int,
    mode: str = Mode.EXACT,
    grid: Optional[Iterable[int]] = None,
    kmax: int = STANDARDIZED_KMAX,
) -> List[MomentReport]:
    """
    Таблица моментов для n = 0..nmax (или только для n из grid).

    В режиме float нормировка остаётся точной, а нормированный вектор
    факториальных моментов распространяется в numpy.
    """
    if not spec.g_vanishes_at_one:
        raise HypothesisError(
            f'{spec}: рекуррентность для производных требует g_n(1) = 0.')
    if nmax < 0:
        raise ArgumentError('nmax должно быть неотрицательным.')
    check_rmax(rmax)
    if mode not in Mode.values:
        raise ArgumentError(f'Неизвестный режим: {mode}.')
    wanted = None if grid is None else set(grid)
    exact = mode == Mode.EXACT

    values = spec.p0.derivatives_at_one(rmax)
    normalizer = values[0]
    if normalizer <= 0:
        raise DegenerateDistributionError(
            f'{spec}: P_0(1) = {normalizer} не положительно.')
    if not exact:
        vector = np.array([float(v / normalizer) for v in values])

    table = []
    for n in range(nmax + 1):
        if n > 0:
            matrix = transition_matrix(spec, n, rmax)
            ratio = matrix[0][0]
            if ratio <= 0:
                raise DegenerateDistributionError(
                    f'{spec}: P_{n}(1) = 0, распределение не определено.')
            normalizer *= ratio
            if exact:
                values = [sum(matrix[r][j] * values[j] for j in range(r + 1))
                          for r in range(rmax + 1)]
            else:
                vector = np.array(matrix, dtype=float) @ vector / float(ratio)
        if wanted is not None and n not in wanted:
            continue
        if exact:
            table.append(report_from_derivatives(values, n=n, kmax=kmax))
        else:
            table.append(report_from_derivatives(
                [1.0] + vector[1:].tolist(), n=n, kmax=kmax,
                normalizer=normalizer, normalized=True))
    logger.debug('%s: моменты до n=%d, r=%d (%s)', spec, nmax, rmax, mode)
    return table


def abn_variance_recurrence(nmax: int) -> List[Fraction]:
    """
    Дисперсии числа диагональных клеток var(D_1), ..., var(D_nmax).

    var(D_1) = 1/4, далее var(D_n) = (n - 2)/n * var(D_{n-1}) + 7/16.
    """
    if nmax < 1:
        raise ArgumentError('nmax должно быть не меньше 1.')
    variances = [Fraction(1, 4)]
    for n in range(2, nmax + 1):
        variances.append(Fraction(n - 2, n) * variances[-1] + Fraction(7, 16))
    return variances
