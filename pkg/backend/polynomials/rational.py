"""Точные рациональные числа.

Рациональное число представлено ``fractions.Fraction``: оно всегда хранится
в несократимом виде с положительным знаменателем.
"""
from fractions import Fraction
from math import floor
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """Приводит целое, дробь или строку вида "num/den" к Fraction."""
    if isinstance(value, float):
        raise TypeError('Числа с плавающей точкой не допускаются.')
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Каноническая запись "num/den" (знаменатель 1 опускается)."""
    return str(Fraction(value))


def simplest_between(low: Fraction, high: Fraction) -> Fraction:
    """
    Возвращает простейшее рациональное число отрезка [low, high].

    Простейшее - с наименьшим знаменателем, а среди таких - с наименьшим
    модулем. Используется цепная дробь (дерево Штерна-Броко).
    """
    if low > high:
        raise ValueError('Левый конец отрезка больше правого.')
    if low <= 0 <= high:
        return Fraction(0)
    if high < 0:
        return -simplest_between(-high, -low)
    whole = floor(low)
    if whole == low:
        return Fraction(whole)
    if whole < floor(high):
        return Fraction(whole + 1)
    return whole + 1 / simplest_between(1 / (high - whole), 1 / (low - whole))
