"""Распределение коэффициентов и факториальные моменты."""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt
from typing import Optional, Sequence, Tuple, Union

from django.conf import settings
from sympy.functions.combinatorial.numbers import stirling

from core.constans import STANDARDIZED_KMAX
from core.exceptions import (ArgumentError, DegenerateDistributionError,
                             NegativeCoefficientError)
from polynomials.polynomial import Polynomial

Number = Union[Fraction, float]


@dataclass(frozen=True)
class Pmf:
    """Распределение P(X = k) = p_k / p(1)."""

    probabilities: Tuple[Fraction, ...]

    def __len__(self):
        return len(self.probabilities)


@dataclass(frozen=True)
class MomentReport:
    """
    Моменты случайной величины, заданной многочленом.

    Атрибуты:
        n (int): номер многочлена в последовательности (если известен).
        normalizer (Fraction): P_n(1).
        factorial_moments (tuple): E(X)_r при r = 1..rmax.
        mean, variance: среднее и дисперсия.
        standardized_moments (tuple[float]): E((X - EX)/sigma)^k при
            k = 3..kmax; None, если дисперсия нулевая.
    """

    n: Optional[int]
    normalizer: Fraction
    factorial_moments: Tuple[Number, ...]
    mean: Number
    variance: Number
    standardized_moments: Optional[Tuple[float, ...]] = None

    def factorial_moment(self, r: int) -> Number:
        if r == 0:
            return 1
        return self.factorial_moments[r - 1]

    @property
    def rmax(self) -> int:
        return len(self.factorial_moments)


def check_distribution(p: Polynomial) -> Fraction:
    """Проверяет, что p задаёт распределение, и возвращает p(1)."""
    if not p.has_nonnegative_coefficients():
        raise NegativeCoefficientError(
            f'Многочлен {p} имеет отрицательный коэффициент.')
    total = p.evaluate(1)
    if total <= 0:
        raise DegenerateDistributionError(
            f'Многочлен {p} не задаёт распределение: p(1) = {total}.')
    return total


def pmf(p: Polynomial) -> Pmf:
    total = check_distribution(p)
    return Pmf(tuple(c / total for c in p.coeffs))


def check_rmax(rmax: int, minimum: int = 1) -> None:
    cap = settings.FACTORIAL_MOMENT_RMAX_CAP
    if not minimum <= rmax <= cap:
        raise ArgumentError(
            f'Порядок моментов rmax={rmax} должен быть от {minimum} до {cap}.')


def raw_moments(factorial_moments: Sequence[Number]) -> list:
    """E X^k = sum_j S(k, j) E(X)_j, k = 0..len(factorial_moments)."""
    values = [1] + list(factorial_moments)
    return [sum(int(stirling(k, j)) * values[j] for j in range(k + 1))
            for k in range(len(values))]


def central_moments(factorial_moments: Sequence[Number]) -> list:
    raw = raw_moments(factorial_moments)
    mean = raw[1] if len(raw) > 1 else 0
    return [sum(comb(k, i) * raw[i] * (-mean) ** (k - i)
                for i in range(k + 1))
            for k in range(len(raw))]


def standardized_moments(
    factorial_moments: Sequence[Number], kmax: int = STANDARDIZED_KMAX
) -> Optional[Tuple[float, ...]]:
    """
    Стандартизованные моменты порядков 3..kmax.

    Центральные моменты считаются в той же арифметике, что и входные
    данные, в числа с плавающей точкой переводится только результат.
    """
    kmax = min(kmax, len(factorial_moments))
    if kmax < 3:
        return ()
    central = central_moments(factorial_moments[:kmax])
    variance = central[2]
    if variance <= 0:
        return None
    sigma = sqrt(float(variance))
    return tuple(float(central[k]) / sigma ** k for k in range(3, kmax + 1))


def report_from_derivatives(values: Sequence[Number], n: Optional[int] = None,
                            kmax: int = STANDARDIZED_KMAX,
                            normalizer: Optional[Fraction] = None,
                            normalized: bool = False) -> MomentReport:
    """
    Собирает отчёт по вектору (P(1), P'(1), ..., P^(r)(1)).

    Если normalized, вектор уже поделён на P(1), а сама нормировка
    передаётся отдельно.
    """
    if normalized:
        moments = tuple(values[1:])
    else:
        normalizer = values[0]
        if normalizer <= 0:
            raise DegenerateDistributionError(
                f'Нормирующий множитель P(1) = {normalizer} не положителен.')
        moments = tuple(value / normalizer for value in values[1:])
    mean = moments[0]
    second = moments[1] if len(moments) > 1 else None
    variance = None if second is None else second - mean * mean + mean
    return MomentReport(
        n=n,
        normalizer=normalizer,
        factorial_moments=moments,
        mean=mean,
        variance=variance,
        standardized_moments=standardized_moments(moments, kmax),
    )


def moment_report(p: Polynomial, rmax: int, n: Optional[int] = None,
                  kmax: int = STANDARDIZED_KMAX) -> MomentReport:
    """Точные факториальные моменты E(X)_r = p^(r)(1) / p(1)."""
    check_rmax(rmax, minimum=2)
    check_distribution(p)
    return report_from_derivatives(p.derivatives_at_one(rmax), n=n,
                                   kmax=kmax)
