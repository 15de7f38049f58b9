"""Центральная предельная теорема через вещественность корней."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from core.exceptions import ArgumentError
from moments.report import moment_report
from recurrences.engine import generate
from recurrences.specs import RecurrenceSpec
from roots.bernoulli import (BernoulliDecomposition, FloatInterval,
                             bernoulli_decomposition, lyapunov_ratio)
from roots.isolation import RootCertificate

GAUSSIAN_M3 = 0.0
GAUSSIAN_M4 = 3.0


@dataclass(frozen=True)
class CltReport:
    """
    Сводка для нормального предела X_n.

    Атрибуты:
        certificate (RootCertificate): корни P_n.
        decomposition (BernoulliDecomposition): вероятности индикаторов.
        lyapunov (FloatInterval): отношение Ляпунова; None при нулевой
            дисперсии.
        standardized_m3, standardized_m4: моменты точного распределения.
    """

    family: str
    n: int
    certificate: RootCertificate
    decomposition: BernoulliDecomposition
    mean: Fraction
    variance: Fraction
    lyapunov: Optional[FloatInterval]
    standardized_m3: Optional[float]
    standardized_m4: Optional[float]
    gaussian_m3: float = GAUSSIAN_M3
    gaussian_m4: float = GAUSSIAN_M4


def clt_report(spec: RecurrenceSpec, n: int, eps=None) -> CltReport:
    """Сертификат, точная дисперсия, отношение Ляпунова и моменты."""
    if n < 0:
        raise ArgumentError('n должно быть неотрицательным.')
    p = generate(spec, n)[n]
    decomposition = bernoulli_decomposition(p, eps)
    report = moment_report(p, 4, n=n)
    lyapunov = None
    m3 = m4 = None
    if report.variance > 0:
        lyapunov = lyapunov_ratio(decomposition)
        m3, m4 = report.standardized_moments
    return CltReport(
        family=str(spec),
        n=n,
        certificate=decomposition.certificate,
        decomposition=decomposition,
        mean=report.mean,
        variance=report.variance,
        lyapunov=lyapunov,
        standardized_m3=m3,
        standardized_m4=m4,
    )
