"""Наибольший общий делитель и бесквадратное разложение через sympy."""
from fractions import Fraction
from typing import List, Tuple

from sympy import Poly, QQ, Rational, Symbol

from .polynomial import Polynomial

X = Symbol('x')


def to_sympy(p: Polynomial) -> Poly:
    """Многочлен над QQ с теми же коэффициентами."""
    coeffs = [Rational(c.numerator, c.denominator) for c in p.coeffs]
    return Poly.from_list(coeffs[::-1] or [0], X, domain=QQ)


def from_sympy(poly: Poly) -> Polynomial:
    coeffs = [Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()]
    return Polynomial.from_coefficients(coeffs[::-1])


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Приведённый НОД двух многочленов; НОД(0, 0) = 0."""
    if a.is_zero and b.is_zero:
        return Polynomial()
    return from_sympy(to_sympy(a).gcd(to_sympy(b))).monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """Произведение различных неприводимых множителей p (приведённое)."""
    if p.is_zero:
        raise ValueError('У нулевого многочлена нет бесквадратной части.')
    if p.degree == 0:
        return Polynomial.constant(1)
    return from_sympy(to_sympy(p).sqf_part()).monic()


def squarefree_decomposition(p: Polynomial) -> List[Tuple[Polynomial, int]]:
    """
    Разложение p = lc * prod a_i^i с попарно взаимно простыми
    бесквадратными a_i.

    Возвращает:
        список пар (a_i, i) только для непостоянных a_i, a_i приведены.
    """
    if p.is_zero:
        raise ValueError('Нулевой многочлен не раскладывается.')
    _, factors = to_sympy(p).sqf_list()
    return [(from_sympy(factor).monic(), multiplicity)
            for factor, multiplicity in factors
            if factor.degree() > 0]
