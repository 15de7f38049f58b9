from fractions import Fraction
from math import factorial

from django.test import SimpleTestCase, override_settings

from core.exceptions import (ArgumentError, EnumerationCapError,
                             InvalidTableauError)
from tableaux.enumeration import (enumerate_symmetric, enumerate_tableaux,
                                  validate, violations)
from tableaux.figures import FIGURE_FOUR_CORNERS, FIGURE_SIX_CORNERS
from tableaux.shapes import FerrersShape, Tableau, enumerate_shapes
from tableaux.statistics import crosscheck, statistic_distribution, stats


def tableau(rows, points):
    return Tableau(FerrersShape(tuple(rows)), frozenset(points))


class ShapesTest(SimpleTestCase):

    def test_small_half_perimeters(self):
        self.assertEqual([s.row_lengths for s in enumerate_shapes(2)],
                         [(1,)])
        self.assertEqual([s.row_lengths for s in enumerate_shapes(3)],
                         [(2,), (1, 1)])

    def test_half_perimeter_five(self):
        shapes = [s.row_lengths for s in enumerate_shapes(5)]
        self.assertEqual(set(shapes), {
            (4,), (3, 3), (3, 2), (3, 1), (2, 2, 2), (2, 2, 1), (2, 1, 1),
            (1, 1, 1, 1)})
        self.assertEqual(shapes, sorted(shapes, reverse=True))

    def test_counts(self):
        for h in range(2, 11):
            with self.subTest(half_perimeter=h):
                shapes = enumerate_shapes(h)
                self.assertEqual(len(shapes), 2 ** (h - 2))
                self.assertEqual(len(set(shapes)), len(shapes))
                self.assertTrue(all(s.half_perimeter == h for s in shapes))

    def test_bad_input(self):
        with self.assertRaises(ArgumentError):
            enumerate_shapes(1)
        with self.assertRaises(InvalidTableauError):
            FerrersShape((1, 2))
        with self.assertRaises(InvalidTableauError):
            FerrersShape(())

    def test_corners_and_conjugate(self):
        shape = FerrersShape((3, 1))
        self.assertEqual(shape.corners(), [(0, 2), (1, 0)])
        self.assertEqual(shape.conjugate().row_lengths, (2, 1, 1))
        self.assertFalse(shape.is_symmetric)
        self.assertTrue(FerrersShape((3, 2, 1)).is_symmetric)
        self.assertEqual(FerrersShape((2, 2)).diagonal(), [(0, 0), (1, 1)])

    def test_text(self):
        t = tableau([2, 1], {(0, 0), (0, 1), (1, 0)})
        self.assertEqual(t.to_text(), '2 1\n••\n•')
        t = tableau([2, 2], {(0, 0), (1, 1)})
        self.assertEqual(str(t), '2 2\n•.\n.•')


class EnumerationTest(SimpleTestCase):

    def test_counts_are_factorials(self):
        for n in range(1, 8):
            with self.subTest(n=n):
                found = enumerate_tableaux(n)
                self.assertEqual(len(found), factorial(n))
                self.assertEqual(len(set(found)), len(found))

    def test_size_three(self):
        found = enumerate_tableaux(3)
        square = [t for t in found if t.shape.row_lengths == (2, 2)]
        self.assertEqual(len(square), 3)
        for t in found:
            with self.subTest(tableau=t.to_text()):
                self.assertEqual(violations(t), [])
                self.assertEqual(len(t.points), 3)

    def test_symmetric_counts(self):
        for m in range(1, 5):
            with self.subTest(n_half=m):
                found = enumerate_symmetric(m)
                self.assertEqual(len(found), 2 ** m * factorial(m))
                for t in found:
                    self.assertTrue(t.is_symmetric)
                    self.assertEqual(t.size, 2 * m + 1)
                    self.assertEqual(t.transpose().points, t.points)
                    validate(t)

    def test_caps(self):
        with self.assertRaises(EnumerationCapError):
            enumerate_tableaux(8)
        with self.assertRaises(EnumerationCapError):
            enumerate_symmetric(5)
        with self.assertRaises(ArgumentError):
            enumerate_tableaux(0)
        with override_settings(TABLEAUX_CAP_PLAIN=3):
            with self.assertRaises(EnumerationCapError):
                enumerate_tableaux(4)
            self.assertEqual(len(enumerate_tableaux(3)), 6)


class ValidatorTest(SimpleTestCase):

    def test_both_neighbours_are_rejected(self):
        t = tableau([2, 2], {(0, 0), (0, 1), (1, 0), (1, 1)})
        self.assertEqual(len(violations(t)), 1)
        with self.assertRaises(InvalidTableauError):
            validate(t)

    def test_rules(self):
        self.assertTrue(violations(tableau([2], {(0, 1)})))
        self.assertTrue(violations(tableau([2], {(0, 0)})))
        self.assertTrue(violations(tableau([1], {(0, 0), (0, 1)})))
        self.assertEqual(violations(FIGURE_FOUR_CORNERS), [])
        self.assertEqual(violations(FIGURE_SIX_CORNERS), [])


class StatsTest(SimpleTestCase):

    def test_figures(self):
        first = stats(FIGURE_FOUR_CORNERS)
        self.assertEqual((first.corners, first.occupied_corners), (4, 2))
        self.assertEqual(first.size, 13)
        second = stats(FIGURE_SIX_CORNERS)
        self.assertEqual((second.corners, second.occupied_corners), (6, 4))
        self.assertEqual(second.size, 11)

    def test_single_cell(self):
        result = stats(tableau([1], {(0, 0)}))
        self.assertEqual((result.corners, result.occupied_corners), (1, 1))
        self.assertEqual(result.size, 1)

    def test_invalid(self):
        with self.assertRaises(InvalidTableauError):
            stats(tableau([2], {(0, 0)}))

    def test_diagonal_only_for_symmetric(self):
        result = stats(tableau([2, 1], {(0, 0), (0, 1), (1, 0)}))
        self.assertEqual(result.diagonal_cells, 1)
        result = stats(tableau([2], {(0, 0), (0, 1)}))
        self.assertIsNone(result.diagonal_cells)
        with self.assertRaises(ArgumentError):
            result.value('diagonal_cells')


class DistributionTest(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(
            statistic_distribution('occupied_corners', 3).counts, (1, 4, 1))
        self.assertEqual(
            statistic_distribution('occupied-corners', 2).counts, (0, 2))
        result = statistic_distribution('diagonal_cells', 1, symmetric=True)
        self.assertEqual(result.counts, (0, 1, 1))
        self.assertEqual(result.pmf.probabilities,
                         (0, Fraction(1, 2), Fraction(1, 2)))

    def test_corners(self):
        result = statistic_distribution('corners', 4)
        self.assertEqual(result.total, 24)
        self.assertEqual(result.counts[0], 0)

    def test_bad_statistic(self):
        with self.assertRaises(ArgumentError):
            statistic_distribution('diagonal_cells', 2)
        with self.assertRaises(ArgumentError):
            statistic_distribution('peaks', 2)


class CrosscheckTest(SimpleTestCase):
    """Гистограммы совпадают с коэффициентами многочленов семейств."""

    def test_occupied_corners(self):
        for n in range(1, 8):
            with self.subTest(n=n):
                self.assertTrue(crosscheck('occupied_corners', n).match)
        self.assertEqual(str(crosscheck('occupied-corners', 3)),
                         'MATCH counts=[1,4,1]')

    def test_symmetric(self):
        for m in range(1, 5):
            with self.subTest(n_half=m):
                self.assertTrue(
                    crosscheck('diagonal_cells', m, symmetric=True).match)
                self.assertTrue(
                    crosscheck('occupied_corners', m, symmetric=True).match)
        self.assertEqual(
            crosscheck('occupied_corners', 1, symmetric=True).expected,
            (1, 0, 1))

    def test_no_oracle(self):
        with self.assertRaises(ArgumentError):
            crosscheck('corners', 3)
