from django.db import models


class Form(models.TextChoices):
    """Форма дифференциально-разностной рекуррентности."""

    DERIVATIVE = 'derivative', "P'_n = f_n P_{n-1} + g_n P'_{n-1}"
    DIRECT = 'direct', "P_n = f_n P_{n-1} + g_n P'_{n-1}"


class Operation(models.TextChoices):
    ADD = 'add', 'Сложение'
    SUB = 'sub', 'Вычитание'
    MUL = 'mul', 'Умножение'


class Mode(models.TextChoices):
    """Режим арифметики векторной рекуррентности."""

    EXACT = 'exact', 'Точные рациональные числа'
    FLOAT = 'float', 'Двойная точность'


class Statistic(models.TextChoices):
    OCCUPIED_CORNERS = 'occupied_corners', 'Занятые углы'
    CORNERS = 'corners', 'Углы'
    DIAGONAL_CELLS = 'diagonal_cells', 'Диагональные клетки'


class OutputFormat(models.TextChoices):
    JSON = 'json', 'JSON'
    CSV = 'csv', 'CSV'
    TEXT = 'text', 'Текст'


class NormalizationKind(models.TextChoices):
    FACTORIAL = 'factorial', 'n!'
    SCALED_FACTORIAL = 'scaled_factorial', 's^n n!'
    CONSTANT = 'constant', 'Постоянная'
    CUSTOM_PRODUCT = 'custom_product', 'initial * prod h(k)'
