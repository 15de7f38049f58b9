"""Две таблицы с рисунка: 4 угла (2 занятых) и 6 углов (4 занятых)."""
from .shapes import FerrersShape, Tableau

FIGURE_FOUR_CORNERS = Tableau(
    FerrersShape((7, 7, 5, 5, 2, 2, 1)),
    frozenset({
        (0, 0), (0, 1), (0, 3), (0, 6),
        (1, 1), (1, 5),
        (2, 1),
        (3, 0), (3, 2), (3, 4),
        (4, 1),
        (5, 0),
        (6, 0),
    }),
)

FIGURE_SIX_CORNERS = Tableau(
    FerrersShape((6, 5, 4, 3, 2, 1)),
    frozenset({
        (0, 0), (0, 1), (0, 4), (0, 5),
        (1, 0), (1, 3),
        (2, 3),
        (3, 1), (3, 2),
        (4, 0),
        (5, 0),
    }),
)
