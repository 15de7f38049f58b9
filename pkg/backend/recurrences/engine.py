"""Итерация рекуррентностей."""
import logging
from typing import List

from core.choices import Form
from core.exceptions import (ArgumentError, NegativeCoefficientError,
                             NormalizationError)
from polynomials.polynomial import Polynomial

from .families import FamilyTag, builtin
from .specs import RecurrenceSpec

logger = logging.getLogger(__name__)


def step(spec: RecurrenceSpec, prev: Polynomial, n: int) -> Polynomial:
    """
    Один шаг рекуррентности: P_n по P_{n-1}.

    Для формы с производной f_n P_{n-1} + g_n P'_{n-1} задаёт P'_n,
    а константа интегрирования выбирается так, чтобы P_n(1) совпало
    с нормировкой.
    """
    if n < 1:
        raise ArgumentError('Шаг рекуррентности определён только при n >= 1.')
    combined = (spec.f.instantiate(n) * prev
                + spec.g.instantiate(n) * prev.derivative())
    if spec.form == Form.DIRECT:
        return combined
    if spec.normalization is None:
        raise NormalizationError(
            'Для формы с производной нужна нормировка P_n(1).')
    integral = combined.antiderivative()
    return integral + (spec.normalization.value(n) - integral.evaluate(1))


def generate(spec: RecurrenceSpec, nmax: int) -> List[Polynomial]:
    """Возвращает [P_0, ..., P_nmax]."""
    if nmax < 0:
        raise ArgumentError('nmax должно быть неотрицательным.')
    sequence = [spec.p0]
    for n in range(1, nmax + 1):
        current = step(spec, sequence[-1], n)
        if spec.nonnegative and not current.has_nonnegative_coefficients():
            raise NegativeCoefficientError(
                f'{spec}: у P_{n} есть отрицательный коэффициент: {current}.')
        logger.debug('%s: P_%d имеет степень %s', spec, n, current.degree)
        sequence.append(current)
    return sequence


def verify_symmetric_reduction(nmax: int) -> bool:
    """
    Проверяет Q_n(x) = P_n(x^2) для симметричных таблиц при n <= nmax.

    Обе рекуррентности нормированы на 2^n n!.
    """
    symmetric = builtin(FamilyTag.LZ_SYMMETRIC)
    reduced = symmetric.square_reduction.spec
    squares = generate(symmetric, nmax)
    plain = generate(reduced, nmax)
    for n, (q, p) in enumerate(zip(squares, plain)):
        if q != p.substitute_square():
            logger.warning('Q_%d = %s, но P_%d(x^2) = %s',
                           n, q, n, p.substitute_square())
            return False
    return True
