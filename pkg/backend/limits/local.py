"""Сравнение точного распределения с нормальной плотностью."""
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np
from scipy.stats import norm

from core.exceptions import ArgumentError, DegenerateDistributionError
from moments.report import moment_report, pmf
from recurrences.engine import generate
from recurrences.families import FamilyId, FamilyTag, builtin


@dataclass(frozen=True)
class LocalLimitReport:
    family: str
    n: int
    mean: float
    variance: float
    sup_abs_error: float
    argmax: int
    pmf_total: Fraction
    density_total: float


def abn_density_parameters(n: int):
    """Среднее 3(n+1)/4 и дисперсия 7(n+1)/48 числа диагональных клеток."""
    return Fraction(3 * (n + 1), 4), Fraction(7 * (n + 1), 48)


def local_limit_report(family=FamilyTag.ABN, n: int = 1) -> LocalLimitReport:
    """
    max_k |P(X_n = k) - phi(k)|, phi - нормальная плотность.

    Для ABN берутся замкнутые формулы среднего и дисперсии, для
    остальных семейств - точные моменты P_n.
    """
    if not isinstance(family, FamilyId):
        family = FamilyId.parse(str(family))
    if n < 1:
        raise ArgumentError('n должно быть не меньше 1.')
    p = generate(builtin(family), n)[n]
    distribution = pmf(p)
    if family.tag == FamilyTag.ABN:
        mean, variance = abn_density_parameters(n)
    else:
        report = moment_report(p, 2, n=n)
        mean, variance = report.mean, report.variance
    if variance <= 0:
        raise DegenerateDistributionError(
            f'{family}: дисперсия при n={n} равна нулю.')
    ks = np.arange(len(distribution))
    density = norm.pdf(ks, loc=float(mean), scale=sqrt(float(variance)))
    exact = np.array([float(q) for q in distribution.probabilities])
    errors = np.abs(exact - density)
    return LocalLimitReport(
        family=str(family),
        n=n,
        mean=float(mean),
        variance=float(variance),
        sup_abs_error=float(errors.max()),
        argmax=int(errors.argmax()),
        pmf_total=sum(distribution.probabilities, Fraction(0)),
        density_total=float(density.sum()),
    )
