"""Точная арифметика многочленов одной переменной над рациональными числами."""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from core.choices import Operation

from .rational import RationalLike, format_rational, to_rational


def _strip(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """
    Многочлен с плотным вектором рациональных коэффициентов.

    Атрибуты:
        coeffs (tuple[Fraction]): коэффициенты по возрастанию степени,
            старший коэффициент ненулевой; нулевой многочлен - пустой кортеж.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, 'coeffs', _strip(to_rational(c) for c in self.coeffs))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[RationalLike]) -> 'Polynomial':
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, value: RationalLike) -> 'Polynomial':
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int,
                 coefficient: RationalLike = 1) -> 'Polynomial':
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def x(cls) -> 'Polynomial':
        return cls.monomial(1)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Optional[int]:
        """Степень; у нулевого многочлена степени нет (None)."""
        if self.is_zero:
            return None
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other):
        other = _coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(k) + other.coefficient(k)
                                for k in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def __call__(self, point: RationalLike) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: RationalLike) -> Fraction:
        """Значение в точке по схеме Горнера."""
        point = to_rational(point)
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def sign_at(self, point: RationalLike) -> int:
        """
        Знак значения в рациональной точке.

        Для многочлена с целыми коэффициентами вычисление идёт в целых
        числах: знак p(a/b) совпадает со знаком b^d p(a/b) при b > 0.
        """
        point = to_rational(point)
        if any(c.denominator != 1 for c in self.coeffs):
            value = self.evaluate(point)
            return (value > 0) - (value < 0)
        num, den = point.numerator, point.denominator
        acc = 0
        scale = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c.numerator * scale
            scale *= den
        return (acc > 0) - (acc < 0)

    def derivative(self) -> 'Polynomial':
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs)
                                if k > 0))

    def antiderivative(self, constant: RationalLike = 0) -> 'Polynomial':
        """Первообразная с заданным свободным членом."""
        return Polynomial((to_rational(constant),) + tuple(
            c / (k + 1) for k, c in enumerate(self.coeffs)))

    def derivatives_at_one(self, rmax: int) -> List[Fraction]:
        """Возвращает [p(1), p'(1), ..., p^(rmax)(1)]."""
        if rmax < 0:
            raise ValueError('rmax должно быть неотрицательным.')
        values = []
        current = self
        for _ in range(rmax + 1):
            values.append(current.evaluate(1))
            current = current.derivative()
        return values

    def substitute_square(self) -> 'Polynomial':
        """Возвращает p(x^2)."""
        spread = [Fraction(0)] * (2 * len(self.coeffs))
        for k, c in enumerate(self.coeffs):
            spread[2 * k] = c
        return Polynomial(tuple(spread))

    def scale(self, factor: RationalLike) -> 'Polynomial':
        factor = to_rational(factor)
        return Polynomial(tuple(c * factor for c in self.coeffs))

    def divmod(self, divisor: 'Polynomial'):
        """Деление с остатком: self = q * divisor + r, deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError('Деление на нулевой многочлен.')
        remainder = list(self.coeffs)
        shift = len(remainder) - len(divisor.coeffs)
        if shift < 0:
            return Polynomial(), self
        quotient = [Fraction(0)] * (shift + 1)
        lead = divisor.leading
        for k in range(shift, -1, -1):
            factor = remainder[k + len(divisor.coeffs) - 1] / lead
            quotient[k] = factor
            if factor == 0:
                continue
            for j, c in enumerate(divisor.coeffs):
                remainder[k + j] -= factor * c
        return Polynomial(tuple(quotient)), Polynomial(tuple(remainder))

    def __floordiv__(self, divisor):
        return self.divmod(_coerce(divisor))[0]

    def __mod__(self, divisor):
        return self.divmod(_coerce(divisor))[1]

    def content(self) -> Fraction:
        """Положительное содержание: p = content * primitive_part."""
        if self.is_zero:
            return Fraction(0)
        common_den = lcm(*(c.denominator for c in self.coeffs))
        common_num = gcd(*(c.numerator for c in self.coeffs))
        return Fraction(common_num, common_den)

    def primitive_part(self) -> 'Polynomial':
        """Многочлен с целыми взаимно простыми коэффициентами.

        Делится на положительное содержание, знак сохраняется.
        """
        if self.is_zero:
            return self
        return self.scale(1 / self.content())

    def monic(self) -> 'Polynomial':
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_strings(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return '0'
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if k == 0:
                body = format_rational(magnitude)
            else:
                power = 'x' if k == 1 else f'x^{k}'
                body = power if magnitude == 1 else (
                    f'{format_rational(magnitude)}{power}'
                    if magnitude.denominator == 1
                    else f'({format_rational(magnitude)}){power}')
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Сложение, вычитание или умножение двух многочленов."""
    if op == Operation.ADD:
        return a + b
    if op == Operation.SUB:
        return a - b
    if op == Operation.MUL:
        return a * b
    raise ValueError(f'Неизвестная операция: {op}.')


def differentiate(p: Polynomial) -> Polynomial:
    return p.derivative()


def evaluate(p: Polynomial, q: RationalLike) -> Fraction:
    return p.evaluate(q)


def derivatives_at_one(p: Polynomial, rmax: int) -> List[Fraction]:
    return p.derivatives_at_one(rmax)


def substitute_square(p: Polynomial) -> Polynomial:
    return p.substitute_square()
