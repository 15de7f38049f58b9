"""Критерий пуассоновского предела для формы с производной."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from core.choices import Form
from core.exceptions import ArgumentError, HypothesisError
from moments.recurrence import derivative_vector_recurrence
from moments.report import check_rmax
from recurrences.specs import RecurrenceSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PoissonDiagnosis:
    """
    Таблицы условий пуассоновского предела.

    Атрибуты:
        c_estimates (tuple[Fraction]): f_n P_{n-1}(1) / P_n(1), n = 1..nmax.
        ratio_g_over_f (tuple[Fraction]): g_n / f_n, n = 1..nmax.
        factorial_moment_table (tuple): строки (n, r, E(X_n)_r).
        c_limit (float): оценка c по последнему n.
        max_deviation_at_nmax (float): max_r |E(X_nmax)_r - c^r|.
        doubling_factor (int): X = factor * Y, если диагностика шла через
            рекуррентность с подстановкой x -> x^2.
    """

    family: str
    nmax: int
    rmax: int
    c_estimates: Tuple[Fraction, ...]
    ratio_g_over_f: Tuple[Fraction, ...]
    factorial_moment_table: Tuple[Tuple[int, int, Fraction], ...]
    c_limit: float
    max_deviation_at_nmax: float
    doubling_factor: int = 1

    @property
    def c_is_constant(self) -> bool:
        return len(set(self.c_estimates)) <= 1

    @property
    def limit(self) -> str:
        c = self.c_estimates[-1]
        law = f'Pois({c})'
        if self.doubling_factor == 1:
            return law
        return f'{self.doubling_factor}×{law}'

    def factorial_moment(self, n: int, r: int) -> Optional[Fraction]:
        for row_n, row_r, value in self.factorial_moment_table:
            if row_n == n and row_r == r:
                return value
        return None


def structural_violation(spec: RecurrenceSpec) -> Optional[str]:
    """Какое условие формы P'_n = f_n P_{n-1} + g_n (x-1) P'_{n-1} нарушено."""
    if spec.form != Form.DERIVATIVE:
        return 'рекуррентность должна быть в форме с производной'
    if spec.f.x_degree > 0:
        return 'f_n не должно зависеть от x'
    entries = spec.g.entries
    if len(entries) > 2 or (entries and entries[0] != -entries[-1]):
        return 'g_n(x) должно иметь вид g_n (x - 1)'
    return None


def diagnose_poisson(spec: RecurrenceSpec, nmax: int,
                     rmax: int) -> PoissonDiagnosis:
    """
    Проверяет условия сходимости к Pois(c) и строит таблицу E(X_n)_r.

    Если сама рекуррентность не подходит, но получена подстановкой
    x -> x^2 из подходящей, диагностируется исходная, а в ответе
    записывается множитель удвоения.
    """
    if nmax < 1:
        raise ArgumentError('nmax должно быть не меньше 1.')
    check_rmax(rmax)
    doubling = 1
    reason = structural_violation(spec)
    if reason is not None and spec.square_reduction is not None:
        doubling = spec.square_reduction.factor
        target = spec.square_reduction.spec
        reason = structural_violation(target)
    else:
        target = spec
    if reason is not None:
        logger.warning('%s: %s', spec, reason)
        raise HypothesisError(f'{spec}: {reason}.')

    c_estimates, ratios = [], []
    for n in range(1, nmax + 1):
        f_n = target.f.instantiate(n).coefficient(0)
        if f_n == 0:
            raise HypothesisError(f'{spec}: f_{n} = 0.')
        g_n = target.g.instantiate(n).coefficient(1)
        c_estimates.append(f_n / target.normalization.ratio(n))
        ratios.append(g_n / f_n)

    table = derivative_vector_recurrence(target, nmax, rmax)
    rows = tuple((report.n, r, report.factorial_moment(r))
                 for report in table[1:] for r in range(1, rmax + 1))
    c_limit = float(c_estimates[-1])
    last = table[-1]
    deviation = max(abs(float(last.factorial_moment(r)) - c_limit ** r)
                    for r in range(1, rmax + 1))
    return PoissonDiagnosis(
        family=str(spec),
        nmax=nmax,
        rmax=rmax,
        c_estimates=tuple(c_estimates),
        ratio_g_over_f=tuple(ratios),
        factorial_moment_table=rows,
        c_limit=c_limit,
        max_deviation_at_nmax=deviation,
        doubling_factor=doubling,
    )
