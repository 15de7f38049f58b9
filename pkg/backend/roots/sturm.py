"""Последовательности Штурма и подсчёт вещественных корней."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from core.exceptions import ArgumentError
from polynomials.algebra import squarefree_part
from polynomials.polynomial import Polynomial
from polynomials.rational import RationalLike, to_rational


def _variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True)
class SturmChain:
    """
    Последовательность Штурма из примитивных частей.

    Атрибуты:
        chain (tuple[Polynomial]): p, p', -rem(p, p'), ... с
            положительными множителями, сохраняющими знаки.
    """

    chain: Tuple[Polynomial, ...]

    def __len__(self):
        return len(self.chain)

    @property
    def is_squarefree(self) -> bool:
        return self.chain[-1].degree == 0

    def variations(self, point: RationalLike) -> int:
        point = to_rational(point)
        return _variations(c.sign_at(point) for c in self.chain)

    def variations_at_infinity(self, direction: int) -> int:
        """Число перемен знака на +oo (direction = 1) или -oo (-1)."""
        signs = []
        for c in self.chain:
            sign = 1 if c.leading > 0 else -1
            if direction < 0 and c.degree % 2:
                sign = -sign
            signs.append(sign)
        return _variations(signs)

    def count(self, lo: Optional[Fraction], hi: Optional[Fraction]) -> int:
        """
        Число различных корней в (lo, hi]; None - бесконечный конец.

        Для бесквадратного многочлена V(t) = V(t+0) и в корне t,
        поэтому сдвигать концы не нужно.
        """
        left = (self.variations_at_infinity(-1) if lo is None
                else self.variations(lo))
        right = (self.variations_at_infinity(1) if hi is None
                 else self.variations(hi))
        return left - right


def sturm_chain(p: Polynomial) -> SturmChain:
    if p.is_zero:
        raise ArgumentError('Для нулевого многочлена нет цепочки Штурма.')
    chain = [p.primitive_part()]
    current = p.derivative().primitive_part()
    while not current.is_zero:
        chain.append(current)
        current = (-(chain[-2] % chain[-1])).primitive_part()
    return SturmChain(tuple(chain))


def cauchy_bound(p: Polynomial) -> Fraction:
    """Все корни p лежат строго внутри (-M, M)."""
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=0)


def count_real_roots(p: Polynomial, lo: RationalLike,
                     hi: RationalLike) -> int:
    """Число различных вещественных корней p в (lo, hi]."""
    lo, hi = to_rational(lo), to_rational(hi)
    if lo >= hi:
        raise ArgumentError(
            'Левый конец интервала должен быть меньше правого.')
    if p.is_zero:
        raise ArgumentError('У нулевого многочлена корни везде.')
    return sturm_chain(squarefree_part(p)).count(lo, hi)
