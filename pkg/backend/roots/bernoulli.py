"""Представление X_n суммой независимых индикаторов."""
from dataclasses import dataclass
from fractions import Fraction
from math import inf, nextafter
from typing import Optional, Tuple

from core.exceptions import DegenerateDistributionError
from moments.report import check_distribution
from polynomials.polynomial import Polynomial
from polynomials.rational import RationalLike

from .isolation import RootCertificate, isolate

Bracket = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class FloatInterval:
    lo: float
    hi: float

    def __contains__(self, value: float) -> bool:
        return self.lo <= value <= self.hi

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2


def _q(p: Fraction) -> Fraction:
    return p * (1 - p)


def _q_bracket(bracket: Bracket) -> Bracket:
    """Отрезок значений p(1-p) при p из [lo, hi]."""
    lo, hi = bracket
    ends = (_q(lo), _q(hi))
    top = Fraction(1, 4) if lo <= Fraction(1, 2) <= hi else max(ends)
    return min(ends), top


@dataclass(frozen=True)
class BernoulliDecomposition:
    """
    Вероятности успеха индикаторов с точными рациональными границами.

    Атрибуты:
        success_probs (tuple): отрезки [lo, hi], содержащие 1/(1 + pi_k).
        width_bound (Fraction): наибольшая ширина отрезка.
    """

    success_probs: Tuple[Bracket, ...]
    width_bound: Fraction
    certificate: Optional[RootCertificate] = None

    @classmethod
    def from_probabilities(cls, probs) -> 'BernoulliDecomposition':
        brackets = tuple((Fraction(p), Fraction(p)) for p in probs)
        return cls(brackets, Fraction(0))

    def mean_bracket(self) -> Bracket:
        return (sum((lo for lo, _ in self.success_probs), Fraction(0)),
                sum((hi for _, hi in self.success_probs), Fraction(0)))

    def variance_bracket(self) -> Bracket:
        brackets = [_q_bracket(b) for b in self.success_probs]
        return (sum((lo for lo, _ in brackets), Fraction(0)),
                sum((hi for _, hi in brackets), Fraction(0)))


def bernoulli_decomposition(
    p: Polynomial, eps: Optional[RationalLike] = None
) -> BernoulliDecomposition:
    """
    Переводит корни gamma <= 0 в вероятности 1/(1 - gamma).

    Корень из [a, b] даёт отрезок [1/(1 - a), 1/(1 - min(b, 0))],
    кратный корень - столько отрезков, какова кратность.
    """
    check_distribution(p)
    certificate = isolate(p, eps)
    brackets = []
    for root in certificate.roots:
        bracket = (1 / (1 - root.lo), 1 / (1 - min(root.hi, 0)))
        brackets.extend([bracket] * root.multiplicity)
    width = max((hi - lo for lo, hi in brackets), default=Fraction(0))
    return BernoulliDecomposition(tuple(brackets), width, certificate)


def lyapunov_ratio(d: BernoulliDecomposition) -> FloatInterval:
    """
    Отношение Ляпунова sum E|xi - p|^3 / (sum p(1-p))^(3/2).

    E|xi - p|^3 = q(1 - 2q) при q = p(1-p); функция q - 2q^2 возрастает
    на [0, 1/4], поэтому границы берутся на концах отрезков для q.
    """
    q_brackets = [_q_bracket(b) for b in d.success_probs]
    variance_lo = sum((lo for lo, _ in q_brackets), Fraction(0))
    variance_hi = sum((hi for _, hi in q_brackets), Fraction(0))
    if variance_hi == 0:
        raise DegenerateDistributionError(
            'Дисперсия суммы индикаторов равна нулю.')
    third_lo = sum((lo - 2 * lo * lo for lo, _ in q_brackets), Fraction(0))
    third_hi = sum((hi - 2 * hi * hi for _, hi in q_brackets), Fraction(0))
    lower = float(third_lo) / float(variance_hi) ** 1.5
    upper = (inf if variance_lo == 0
             else float(third_hi) / float(variance_lo) ** 1.5)
    return FloatInterval(nextafter(lower, -inf), nextafter(upper, inf))
