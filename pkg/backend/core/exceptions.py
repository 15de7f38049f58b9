"""Исключения вычислительного ядра."""


class PolyrecError(Exception):
    """Базовое исключение всех вычислений проекта."""


class FamilyParameterError(PolyrecError):
    """Параметры встроенного семейства вне допустимого диапазона."""


class SpecError(PolyrecError):
    """Некорректно заданная рекуррентность."""


class NormalizationError(SpecError):
    """Для формы с производной не задана нормировка P_n(1)."""


class NegativeCoefficientError(PolyrecError):
    """Отрицательный коэффициент там, где ожидается распределение."""


class DegenerateDistributionError(PolyrecError):
    """Нулевой нормирующий множитель или нулевая дисперсия."""


class HypothesisError(PolyrecError):
    """Рекуррентность не удовлетворяет структурному условию диагностики."""


class NotRealRootedError(PolyrecError):
    """Многочлен имеет невещественные корни.

    Атрибуты:
        certificate (RootCertificate): сертификат, на котором основан отказ.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class EnumerationCapError(PolyrecError):
    """Размер превышает ограничение полного перебора."""


class InvalidTableauError(PolyrecError):
    """Таблица нарушает правила древовидной таблицы."""


class ArgumentError(PolyrecError):
    """Аргумент операции вне допустимого диапазона."""
