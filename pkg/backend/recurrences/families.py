"""Встроенные семейства рекуррентностей."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from django.core.exceptions import ValidationError
from django.core.validators import BaseValidator, MinValueValidator
from django.db import models

from core.choices import Form
from core.constans import (DEFAULT_BE1_M, DEFAULT_HJ_A, DEFAULT_HJ_B,
                           DEFAULT_W_C, DEFAULT_W_M)
from core.exceptions import FamilyParameterError
from polynomials.polynomial import Polynomial
from polynomials.rational import RationalLike, format_rational, to_rational

from .specs import Normalization, RecurrenceSpec, SquareReduction
from .symbolic import SymbolicCoefficient


class FamilyTag(models.TextChoices):
    ABN = 'ABN', 'Диагональные клетки симметричных таблиц'
    LZ = 'LZ', 'Занятые углы древовидных таблиц'
    LZ_SYMMETRIC = 'LZ_SYMMETRIC', 'Занятые углы симметричных таблиц'
    HJ = 'HJ', 'Обобщённые многочлены Эйлера'
    EULERIAN = 'EULERIAN', 'Многочлены Эйлера'
    DHH = 'DHH', 'Многочлены DHH'
    AH = 'AH', 'Игра «мемори»'
    W = 'W', 'Многочлены W(c, m)'
    BE1 = 'BE1', 'Многочлены BE1(m)'


class PositiveValueValidator(BaseValidator):
    message = 'Значение должно быть больше %(limit_value)s.'
    code = 'min_value'

    def compare(self, a, b):
        return a <= b


PARAMETERS = {
    FamilyTag.HJ: ('a', 'b'),
    FamilyTag.W: ('c', 'm'),
    FamilyTag.BE1: ('m',),
}

DEFAULTS = {
    FamilyTag.HJ: {'a': DEFAULT_HJ_A, 'b': DEFAULT_HJ_B},
    FamilyTag.W: {'c': DEFAULT_W_C, 'm': DEFAULT_W_M},
    FamilyTag.BE1: {'m': DEFAULT_BE1_M},
}

VALIDATORS = {
    (FamilyTag.HJ, 'a'): MinValueValidator(0),
    (FamilyTag.HJ, 'b'): MinValueValidator(0),
    (FamilyTag.W, 'c'): MinValueValidator(0),
    (FamilyTag.W, 'm'): PositiveValueValidator(0),
    (FamilyTag.BE1, 'm'): MinValueValidator(1),
}


@dataclass(frozen=True)
class FamilyId:
    """
    Идентификатор встроенного семейства с его параметрами.

    Атрибуты:
        tag (str): значение FamilyTag.
        params (tuple): пары (имя, значение) параметров семейства.
    """

    tag: str
    params: tuple = ()

    @classmethod
    def parse(cls, name: str,
              **params: Optional[RationalLike]) -> 'FamilyId':
        """
        Разбирает имя семейства без учёта регистра.

        Неуказанные параметры берутся по умолчанию, лишние запрещены.
        """
        tag = name.strip().upper().replace('-', '_')
        if tag not in FamilyTag.values:
            raise FamilyParameterError(
                f'Неизвестное семейство: {name}. '
                f'Доступны: {", ".join(FamilyTag.values)}.')
        tag = FamilyTag(tag)
        allowed = PARAMETERS.get(tag, ())
        given = {key: value for key, value in params.items()
                 if value is not None}
        extra = set(given) - set(allowed)
        if extra:
            raise FamilyParameterError(
                f'Семейство {tag} не принимает параметры: '
                f'{", ".join(sorted(extra))}.')
        values = dict(DEFAULTS.get(tag, {}))
        values.update(given)
        try:
            values = {key: to_rational(value) for key, value in values.items()}
        except (TypeError, ValueError, ZeroDivisionError) as error:
            raise FamilyParameterError(
                f'Параметр семейства {tag} не является рациональным: {error}.')
        return cls(tag, tuple((key, values[key]) for key in allowed))

    @property
    def parameters(self) -> Dict[str, Fraction]:
        return dict(self.params)

    def validate(self) -> None:
        for key, value in self.params:
            validator = VALIDATORS.get((self.tag, key))
            if validator is None:
                continue
            try:
                validator(value)
            except ValidationError as error:
                raise FamilyParameterError(
                    f'{self.tag}: параметр {key}={format_rational(value)} '
                    f'недопустим. {" ".join(error.messages)}')
        if self.tag == FamilyTag.BE1 and self.parameters['m'].denominator != 1:
            raise FamilyParameterError(
                f'BE1: параметр m={format_rational(self.parameters["m"])} '
                'должен быть целым.')

    def __str__(self) -> str:
        if not self.params:
            return str(self.tag)
        inner = ','.join(format_rational(value) for _, value in self.params)
        return f'{self.tag}({inner})'


def _n_poly(*coeffs: RationalLike) -> Polynomial:
    return Polynomial.from_coefficients(coeffs)


def _coefficient(*entries: Polynomial) -> SymbolicCoefficient:
    return SymbolicCoefficient(tuple(entries))


ZERO = _n_poly()
ONE = _n_poly(1)
N = _n_poly(0, 1)


def _abn(family: FamilyId) -> RecurrenceSpec:
    return RecurrenceSpec(
        form=Form.DIRECT,
        f=_coefficient(ZERO, N, N),
        g=_coefficient(ZERO, ONE, ZERO, -ONE),
        p0=Polynomial.x(),
        name=str(family),
    )


def _lz(family: FamilyId,
        normalization: Optional[Normalization] = None) -> RecurrenceSpec:
    return RecurrenceSpec(
        form=Form.DERIVATIVE,
        f=_coefficient(N),
        g=_coefficient(_n_poly(2), _n_poly(-2)),
        p0=Polynomial.constant(1),
        normalization=normalization or Normalization.factorial(),
        name=str(family),
    )


def _lz_symmetric(family: FamilyId) -> RecurrenceSpec:
    normalization = Normalization.scaled_factorial(2)
    reduced = _lz(FamilyId(FamilyTag.LZ), normalization)
    return RecurrenceSpec(
        form=Form.DERIVATIVE,
        f=_coefficient(ZERO, 2 * N),
        g=_coefficient(_n_poly(2), ZERO, _n_poly(-2)),
        p0=Polynomial.constant(1),
        normalization=normalization,
        square_reduction=SquareReduction(reduced, 2),
        name=str(family),
    )


def _hj(family: FamilyId) -> RecurrenceSpec:
    a, b = family.parameters['a'], family.parameters['b']
    return RecurrenceSpec(
        form=Form.DIRECT,
        f=_coefficient(_n_poly(a), _n_poly(b - 1, 1)),
        g=_coefficient(ZERO, ONE, -ONE),
        p0=Polynomial.constant(1),
        name=str(family),
    )


def _eulerian(family: FamilyId) -> RecurrenceSpec:
    spec = _hj(FamilyId.parse(FamilyTag.HJ, a=1, b=0))
    return RecurrenceSpec(spec.form, spec.f, spec.g, spec.p0,
                          name=str(family))


def _dhh(family: FamilyId) -> RecurrenceSpec:
    return RecurrenceSpec(
        form=Form.DIRECT,
        f=_coefficient(ONE, _n_poly(-1, 2)),
        g=_coefficient(ZERO, _n_poly(2), _n_poly(-2)),
        p0=Polynomial.constant(1),
        name=str(family),
    )


def _ah(family: FamilyId) -> RecurrenceSpec:
    return RecurrenceSpec(
        form=Form.DIRECT,
        f=_coefficient(_n_poly(-1, 2)),
        g=_coefficient(ZERO, -ONE, ONE),
        p0=Polynomial.x(),
        name=str(family),
    )


def _w(family: FamilyId) -> RecurrenceSpec:
    c, m = family.parameters['c'], family.parameters['m']
    return RecurrenceSpec(
        form=Form.DIRECT,
        f=_coefficient(_n_poly(c), ONE),
        g=_coefficient(ZERO, _n_poly(m)),
        p0=Polynomial.constant(1),
        name=str(family),
    )


def _be1(family: FamilyId) -> RecurrenceSpec:
    m = family.parameters['m']
    return RecurrenceSpec(
        form=Form.DIRECT,
        f=_coefficient(ONE, ONE),
        g=_coefficient(ZERO, _n_poly(m), ONE),
        p0=Polynomial.constant(1),
        name=str(family),
    )


BUILDERS = {
    FamilyTag.ABN: _abn,
    FamilyTag.LZ: _lz,
    FamilyTag.LZ_SYMMETRIC: _lz_symmetric,
    FamilyTag.HJ: _hj,
    FamilyTag.EULERIAN: _eulerian,
    FamilyTag.DHH: _dhh,
    FamilyTag.AH: _ah,
    FamilyTag.W: _w,
    FamilyTag.BE1: _be1,
}


def builtin(family) -> RecurrenceSpec:
    """
    Возвращает рекуррентность встроенного семейства.

    Принимает FamilyId или имя семейства (параметры - по умолчанию).
    """
    if not isinstance(family, FamilyId):
        family = FamilyId.parse(str(family))
    family.validate()
    return BUILDERS[family.tag](family)


def builtin_families() -> Dict[str, RecurrenceSpec]:
    """Все встроенные семейства с параметрами по умолчанию."""
    return {tag: builtin(FamilyId.parse(tag)) for tag in FamilyTag.values}
