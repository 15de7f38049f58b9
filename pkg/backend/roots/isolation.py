"""Сертификат вещественности корней и их отделение."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from django.conf import settings

from core.exceptions import ArgumentError, NotRealRootedError
from polynomials.algebra import squarefree_decomposition, squarefree_part
from polynomials.polynomial import Polynomial
from polynomials.rational import (RationalLike, format_rational,
                                  simplest_between, to_rational)

from .sturm import SturmChain, cauchy_bound, sturm_chain

logger = logging.getLogger(__name__)

Interval = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class RootEnclosure:
    """Отрезок [lo, hi] с ровно одним корнем кратности multiplicity."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self) -> str:
        if self.is_exact:
            text = format_rational(self.lo)
        else:
            text = f'[{format_rational(self.lo)}, {format_rational(self.hi)}]'
        if self.multiplicity > 1:
            text += f' x{self.multiplicity}'
        return text


@dataclass(frozen=True)
class RootCertificate:
    """
    Проверенные сведения о вещественных корнях многочлена.

    Атрибуты:
        degree (int): степень многочлена.
        real_rooted (bool): все корни вещественны.
        roots (tuple[RootEnclosure]): отделяющие отрезки по возрастанию.
        width_bound (Fraction): наибольшая ширина отрезка.
        expect_interval (tuple): проверяемый отрезок, если задан.
        roots_in_interval (int): число корней с кратностью в нём.
    """

    degree: int
    real_rooted: bool
    roots: Tuple[RootEnclosure, ...]
    width_bound: Fraction
    expect_interval: Optional[Interval] = None
    roots_in_interval: Optional[int] = None
    polynomial: Polynomial = field(default=Polynomial(), compare=False,
                                   repr=False)

    @property
    def real_root_count(self) -> int:
        return sum(root.multiplicity for root in self.roots)

    @property
    def inside_expected(self) -> Optional[bool]:
        if self.expect_interval is None:
            return None
        return self.roots_in_interval == self.degree

    def root_count_in(self, lo: RationalLike, hi: RationalLike) -> int:
        """Число корней с учётом кратности на отрезке [lo, hi]."""
        return _count_with_multiplicity(self.polynomial, to_rational(lo),
                                        to_rational(hi))


def _count_with_multiplicity(p: Polynomial, lo: Fraction,
                             hi: Fraction) -> int:
    if lo > hi:
        raise ArgumentError('Левый конец отрезка больше правого.')
    total = 0
    for factor, multiplicity in squarefree_decomposition(p):
        inside = sturm_chain(factor).count(lo, hi) if lo < hi else 0
        if factor.sign_at(lo) == 0:
            inside += 1
        total += multiplicity * inside
    return total


class _Isolator:
    """Деление отрезков по подсчётам Штурма для бесквадратного f.

    Точки деления не зависят от eps, поэтому при меньшем eps отрезки
    вкладываются в прежние.
    """

    def __init__(self, f: Polynomial, eps: Optional[Fraction]):
        self.f = f.primitive_part()
        self.chain: SturmChain = sturm_chain(self.f)
        self.eps = eps
        self.found: List[Interval] = []

    def count(self, lo: Fraction, hi: Fraction) -> int:
        return self.chain.count(lo, hi)

    def run(self) -> List[Interval]:
        if self.f.degree == 0:
            return []
        bound = cauchy_bound(self.f)
        self._process(-bound, bound, self.count(-bound, bound))
        return sorted(self.found)

    def _pad(self, t: Fraction, width: Fraction, side: int) -> Fraction:
        delta = width / 8
        while True:
            point = t + side * delta
            inside = (self.count(point, t) if side < 0
                      else self.count(t, point))
            if inside == (1 if side < 0 else 0) and self.f.sign_at(point):
                return point
            delta /= 2

    def _process(self, lo: Fraction, hi: Fraction, k: int) -> None:
        if k == 0:
            return
        width = hi - lo
        if k == 1:
            if self.f.sign_at(hi) == 0:
                logger.debug('Точный корень %s', hi)
                self.found.append((hi, hi))
                return
            if self.eps is None or width <= self.eps:
                self.found.append((lo, hi))
                return
        t = simplest_between(lo + width / 4, hi - width / 4)
        if self.f.sign_at(t) == 0:
            logger.debug('Точка деления %s - корень', t)
            self.found.append((t, t))
            left = self._pad(t, width, -1)
            right = self._pad(t, width, 1)
            self._process(lo, left, self.count(lo, left))
            self._process(right, hi, self.count(right, hi))
            return
        self._process(lo, t, self.count(lo, t))
        self._process(t, hi, self.count(t, hi))


def _multiplicity(enclosure: Interval, factors) -> int:
    if len(factors) == 1:
        return factors[0][1]
    lo, hi = enclosure
    for factor, multiplicity in factors:
        if lo == hi:
            if factor.sign_at(lo) == 0:
                return multiplicity
        elif sturm_chain(factor).count(lo, hi) == 1:
            return multiplicity
    raise AssertionError('Корень не принадлежит ни одному множителю.')


def _certificate(p: Polynomial, eps: Optional[Fraction],
                 expect_interval: Optional[Interval]) -> RootCertificate:
    if p.is_zero:
        raise ArgumentError('Нулевой многочлен не имеет сертификата корней.')
    factors = squarefree_decomposition(p)
    enclosures = []
    if factors:
        isolated = _Isolator(squarefree_part(p), eps).run()
        enclosures = [RootEnclosure(lo, hi, _multiplicity((lo, hi), factors))
                      for lo, hi in isolated]
    real_count = sum(root.multiplicity for root in enclosures)
    in_interval = None
    if expect_interval is not None:
        lo, hi = (to_rational(v) for v in expect_interval)
        expect_interval = (lo, hi)
        in_interval = _count_with_multiplicity(p, lo, hi)
    certificate = RootCertificate(
        degree=p.degree,
        real_rooted=real_count == p.degree,
        roots=tuple(enclosures),
        width_bound=max((root.width for root in enclosures),
                        default=Fraction(0)),
        expect_interval=expect_interval,
        roots_in_interval=in_interval,
        polynomial=p,
    )
    logger.debug('Степень %d, вещественных корней %d', p.degree, real_count)
    return certificate


def certify(p: Polynomial,
            expect_interval: Optional[Tuple[RationalLike, RationalLike]] = None
            ) -> RootCertificate:
    """
    Проверяет, что все корни p вещественны.

    Отрицательный вердикт - результат, а не ошибка. Отрезки только
    отделяют корни и не уточняются.
    """
    return _certificate(p, None, expect_interval)


def isolate(p: Polynomial, eps: Optional[RationalLike] = None,
            expect_interval=None) -> RootCertificate:
    """Отделяет корни вещественно-корневого p до ширины не больше eps."""
    eps = settings.ROOT_EPS if eps is None else to_rational(eps)
    if eps <= 0:
        raise ArgumentError('Точность eps должна быть больше 0.')
    certificate = _certificate(p, eps, expect_interval)
    if not certificate.real_rooted:
        raise NotRealRootedError(
            f'Многочлен {p} имеет невещественные корни: вещественных '
            f'{certificate.real_root_count} из {certificate.degree}.',
            certificate=certificate)
    return certificate
