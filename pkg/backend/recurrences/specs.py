"""Описание рекуррентности и правила нормировки."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from core.choices import Form, NormalizationKind
from core.exceptions import NormalizationError, SpecError
from polynomials.polynomial import Polynomial
from polynomials.rational import RationalLike, format_rational, to_rational

from .symbolic import SymbolicCoefficient


@dataclass(frozen=True)
class Normalization:
    """
    Правило нормировки P_n(1) = initial * h(1) * h(2) * ... * h(n).

    Атрибуты:
        kind (str): вид правила из NormalizationKind.
        initial (Fraction): значение при n = 0.
        factor (Polynomial): множитель h как многочлен от n.
    """

    kind: str
    initial: Fraction
    factor: Polynomial

    @classmethod
    def factorial(cls) -> 'Normalization':
        return cls(NormalizationKind.FACTORIAL, Fraction(1),
                   Polynomial.x())

    @classmethod
    def scaled_factorial(cls, scale: RationalLike) -> 'Normalization':
        scale = to_rational(scale)
        if scale <= 0:
            raise NormalizationError(
                'Масштаб нормировки должен быть больше 0.')
        return cls(NormalizationKind.SCALED_FACTORIAL, Fraction(1),
                   Polynomial.monomial(1, scale))

    @classmethod
    def constant(cls, value: RationalLike) -> 'Normalization':
        value = to_rational(value)
        if value <= 0:
            raise NormalizationError('Нормировка должна быть больше 0.')
        return cls(NormalizationKind.CONSTANT, value, Polynomial.constant(1))

    @classmethod
    def custom_product(cls, initial: RationalLike,
                       factor: Polynomial) -> 'Normalization':
        initial = to_rational(initial)
        if initial <= 0:
            raise NormalizationError(
                'Начальное значение нормировки должно быть больше 0.')
        return cls(NormalizationKind.CUSTOM_PRODUCT, initial, factor)

    @classmethod
    def from_params(cls, kind: str, params: Dict) -> 'Normalization':
        """Восстанавливает правило из сериализованных параметров."""
        try:
            if kind == NormalizationKind.FACTORIAL:
                return cls.factorial()
            if kind == NormalizationKind.SCALED_FACTORIAL:
                return cls.scaled_factorial(params['scale'])
            if kind == NormalizationKind.CONSTANT:
                return cls.constant(params['value'])
            if kind == NormalizationKind.CUSTOM_PRODUCT:
                return cls.custom_product(
                    params.get('initial', 1),
                    Polynomial.from_coefficients(params['factor']))
        except KeyError as error:
            raise NormalizationError(
                f'Для нормировки {kind} не задан параметр {error}.')
        except (TypeError, ValueError, ZeroDivisionError) as error:
            raise NormalizationError(
                f'Некорректный параметр нормировки {kind}: {error}.')
        raise NormalizationError(f'Неизвестный вид нормировки: {kind}.')

    def params(self) -> Dict:
        if self.kind == NormalizationKind.SCALED_FACTORIAL:
            return {'scale': format_rational(self.factor.coefficient(1))}
        if self.kind == NormalizationKind.CONSTANT:
            return {'value': format_rational(self.initial)}
        if self.kind == NormalizationKind.CUSTOM_PRODUCT:
            return {'initial': format_rational(self.initial),
                    'factor': self.factor.to_strings()}
        return {}

    def ratio(self, n: int) -> Fraction:
        """Отношение value(n) / value(n - 1) = h(n), строго положительное."""
        ratio = self.factor.evaluate(n)
        if ratio <= 0:
            raise NormalizationError(
                f'Множитель нормировки h({n}) = {format_rational(ratio)} '
                'должен быть больше 0.')
        return ratio

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise NormalizationError(
                'Нормировка определена только при n >= 0.')
        result = self.initial
        for k in range(1, n + 1):
            result *= self.ratio(k)
        return result


@dataclass(frozen=True)
class SquareReduction:
    """Рекуррентность для P_n с Q_n(x) = P_n(x^2) и X(Q) = factor * X(P)."""

    spec: 'RecurrenceSpec'
    factor: int = 2


@dataclass(frozen=True)
class RecurrenceSpec:
    """
    Дифференциально-разностная рекуррентность первого порядка.

    Атрибуты:
        form (str): Form.DERIVATIVE или Form.DIRECT.
        f, g (SymbolicCoefficient): коэффициенты f_n(x), g_n(x).
        p0 (Polynomial): начальный многочлен.
        normalization (Normalization): значения P_n(1); обязательна
            для формы с производной.
        nonnegative (bool): все коэффициенты P_n обязаны быть >= 0.
        square_reduction (SquareReduction): необязательная связь с
            рекуррентностью, из которой получается подстановкой x -> x^2.
        name (str): имя для вывода, в сравнении не участвует.
    """

    form: str
    f: SymbolicCoefficient
    g: SymbolicCoefficient
    p0: Polynomial
    normalization: Optional[Normalization] = None
    nonnegative: bool = True
    square_reduction: Optional[SquareReduction] = field(
        default=None, compare=False)
    name: str = field(default='', compare=False)

    def __post_init__(self):
        if self.form not in Form.values:
            raise SpecError(f'Неизвестная форма рекуррентности: {self.form}.')
        if self.p0.is_zero:
            raise SpecError('Начальный многочлен не может быть нулевым.')
        if self.form == Form.DERIVATIVE:
            if self.normalization is None:
                raise NormalizationError(
                    'Для формы с производной нужна нормировка P_n(1).')
            if self.p0.evaluate(1) != self.normalization.value(0):
                raise NormalizationError(
                    'Значение P_0(1) не совпадает с нормировкой при n = 0.')

    @property
    def g_vanishes_at_one(self) -> bool:
        """g_n(1) = 0 тождественно по n."""
        return self.g.at_one().is_zero

    def __str__(self) -> str:
        return self.name or f'{self.form} recurrence'
