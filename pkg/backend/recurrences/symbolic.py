"""Коэффициенты рекуррентности, полиномиальные по n."""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from polynomials.polynomial import Polynomial
from polynomials.rational import RationalLike


def _strip(entries: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
    entries = list(entries)
    while entries and entries[-1].is_zero:
        entries.pop()
    return tuple(entries)


@dataclass(frozen=True)
class SymbolicCoefficient:
    """
    Многочлен от x, коэффициенты которого - многочлены от n.

    Атрибуты:
        entries (tuple[Polynomial]): entries[k] - коэффициент при x^k
            как многочлен от n.
    """

    entries: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'entries', _strip(self.entries))

    @classmethod
    def from_rows(
        cls, rows: Iterable[Iterable[RationalLike]]
    ) -> 'SymbolicCoefficient':
        """Строит коэффициент из вложенных списков [[c0, c1, ...], ...]."""
        return cls(tuple(Polynomial.from_coefficients(row) for row in rows))

    def to_rows(self) -> List[List[str]]:
        return [entry.to_strings() for entry in self.entries]

    def instantiate(self, n: int) -> Polynomial:
        """Подставляет конкретное n и возвращает многочлен от x."""
        return Polynomial(tuple(entry.evaluate(n) for entry in self.entries))

    def at_one(self) -> Polynomial:
        """Значение при x = 1 как многочлен от n."""
        total = Polynomial()
        for entry in self.entries:
            total = total + entry
        return total

    @property
    def x_degree(self) -> int:
        return len(self.entries) - 1
