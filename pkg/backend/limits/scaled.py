"""Масштабированные моменты AH: X_n / (2 sqrt(n))."""
import logging
from dataclasses import dataclass
from math import pi, sqrt
from typing import Optional, Tuple

import numpy as np
from scipy.special import gamma, gammaln

from core.choices import Mode
from core.constans import DEFAULT_GRID_POINTS, DEFAULT_SCALED_KMAX
from core.exceptions import ArgumentError
from moments.recurrence import derivative_vector_recurrence
from moments.report import raw_moments
from recurrences.families import FamilyTag, builtin
from recurrences.specs import RecurrenceSpec

logger = logging.getLogger(__name__)

VARIANCE_SLOPE = 4 - pi
SCALING = 'X_n / (2 sqrt(n))'


def limit_moment(k: int) -> float:
    """k-й момент плотности 2x exp(-x^2) на (0, oo): Gamma(k/2 + 1)."""
    return float(gamma(k / 2 + 1))


def ah_third_factorial_moment_closed_form(n: int) -> float:
    """
    6 (sqrt(pi) (n + 2) n! / Gamma(n + 1/2) - 4n - 3).

    При малых n значение на 6 меньше точного E(X_n)_3; используется
    только асимптотика 6 sqrt(pi) n^(3/2).
    """
    ratio = np.exp(gammaln(n + 1) - gammaln(n + 0.5))
    return float(6 * (sqrt(pi) * (n + 2) * ratio - 4 * n - 3))


def log_grid(nmax: int, points: int = DEFAULT_GRID_POINTS) -> Tuple[int, ...]:
    """Логарифмическая сетка целых n от 1 до nmax."""
    grid = np.unique(np.rint(np.geomspace(1, nmax, points)).astype(int))
    return tuple(int(n) for n in grid)


@dataclass(frozen=True)
class ScaledMomentReport:
    """
    Отношения E(X_n / s_n)^k к моментам предельного закона.

    Атрибуты:
        moment_ratios (tuple): строки (n, k, отношение).
        variance_ratios (tuple): строки (n, var(X_n) / n).
    """

    family: str
    scaling: str
    grid: Tuple[int, ...]
    kmax: int
    moment_ratios: Tuple[Tuple[int, int, float], ...]
    variance_ratios: Tuple[Tuple[int, float], ...]
    variance_target: float = VARIANCE_SLOPE

    def ratio(self, n: int, k: int) -> Optional[float]:
        for row_n, row_k, value in self.moment_ratios:
            if row_n == n and row_k == k:
                return value
        return None

    def entered_band(self, k: int, tolerance: float) -> Optional[int]:
        """Первое n сетки, начиная с которого |отношение - 1| <= tolerance."""
        entry = None
        for n in self.grid:
            if abs(self.ratio(n, k) - 1) <= tolerance:
                if entry is None:
                    entry = n
            else:
                entry = None
        return entry


def scaled_moment_limit(spec: Optional[RecurrenceSpec] = None,
                        nmax: int = 10_000,
                        kmax: int = DEFAULT_SCALED_KMAX,
                        points: int = DEFAULT_GRID_POINTS,
                        grid=None) -> ScaledMomentReport:
    """Моменты X_n / (2 sqrt(n)) на логарифмической сетке, режим float."""
    spec = spec or builtin(FamilyTag.AH)
    if nmax < 1:
        raise ArgumentError('nmax должно быть не меньше 1.')
    if kmax < 2:
        raise ArgumentError('kmax должно быть не меньше 2.')
    grid = tuple(sorted(set(grid))) if grid else log_grid(nmax, points)
    if grid[0] < 1 or grid[-1] > nmax:
        raise ArgumentError(f'Точки сетки должны лежать в [1, {nmax}].')
    table = derivative_vector_recurrence(spec, nmax, kmax, Mode.FLOAT,
                                         grid=grid)
    ratios, variances = [], []
    for report in table:
        raw = raw_moments(report.factorial_moments)
        scale = 2 * sqrt(report.n)
        for k in range(1, kmax + 1):
            ratios.append((report.n, k,
                           raw[k] / (scale ** k * limit_moment(k))))
        variances.append((report.n, report.variance / report.n))
    logger.info('%s: масштабированные моменты на сетке %s', spec, grid)
    return ScaledMomentReport(
        family=str(spec),
        scaling=SCALING,
        grid=grid,
        kmax=kmax,
        moment_ratios=tuple(ratios),
        variance_ratios=tuple(variances),
    )
