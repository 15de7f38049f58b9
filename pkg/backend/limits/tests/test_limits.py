from dataclasses import replace
from fractions import Fraction
from math import gamma, pi, sqrt

from django.test import SimpleTestCase
from scipy.stats import norm

from core.choices import Mode
from core.exceptions import (ArgumentError, DegenerateDistributionError,
                             HypothesisError, NormalizationError)
from limits.clt import clt_report
from limits.local import local_limit_report
from limits.poisson import diagnose_poisson, structural_violation
from limits.scaled import (ah_third_factorial_moment_closed_form, log_grid,
                           scaled_moment_limit)
from moments.recurrence import derivative_vector_recurrence
from moments.report import pmf
from polynomials.polynomial import Polynomial
from recurrences.engine import generate
from recurrences.families import FamilyTag, builtin
from recurrences.specs import Normalization


class PoissonDiagnosisTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.lz = diagnose_poisson(builtin(FamilyTag.LZ), 50, 4)

    def test_lz_constant_c(self):
        self.assertTrue(self.lz.c_is_constant)
        self.assertEqual(set(self.lz.c_estimates), {1})
        self.assertEqual(self.lz.limit, 'Pois(1)')
        self.assertEqual(self.lz.ratio_g_over_f[9], Fraction(-2, 10))

    def test_lz_factorial_moments(self):
        self.assertEqual(self.lz.factorial_moment(50, 1), 1)
        self.assertEqual(self.lz.factorial_moment(50, 2), Fraction(48, 50))
        self.assertEqual(self.lz.factorial_moment(50, 3),
                         Fraction(46, 50) * Fraction(47, 49))

    def test_lz_convergence_rate(self):
        for n in range(8, 51):
            for r in range(1, 5):
                with self.subTest(n=n, r=r):
                    value = self.lz.factorial_moment(n, r)
                    self.assertLessEqual(abs(value - 1),
                                         Fraction(2 * r * r, n))

    def test_lz_convergence_at_200(self):
        diagnosis = diagnose_poisson(builtin(FamilyTag.LZ), 200, 5)
        for r in range(1, 6):
            with self.subTest(r=r):
                value = diagnosis.factorial_moment(200, r)
                self.assertLessEqual(abs(value - 1), Fraction(2 * r * r, 200))

    def test_symmetric_lz_is_doubled(self):
        diagnosis = diagnose_poisson(builtin(FamilyTag.LZ_SYMMETRIC), 20, 3)
        self.assertEqual(diagnosis.doubling_factor, 2)
        self.assertEqual(diagnosis.limit, '2×Pois(1/2)')
        self.assertAlmostEqual(diagnosis.c_limit, 0.5)

    def test_hypothesis_violations(self):
        for tag in (FamilyTag.W, FamilyTag.ABN, FamilyTag.AH):
            with self.subTest(family=tag):
                spec = builtin(tag)
                self.assertIsNotNone(structural_violation(spec))
                with self.assertRaises(HypothesisError):
                    diagnose_poisson(spec, 10, 2)

    def test_nonpositive_normalization(self):
        spec = replace(builtin(FamilyTag.LZ),
                       normalization=Normalization.custom_product(
                           1, Polynomial.from_coefficients([-3, 1])))
        with self.assertRaises(NormalizationError):
            diagnose_poisson(spec, 10, 2)

    def test_bad_arguments(self):
        with self.assertRaises(ArgumentError):
            diagnose_poisson(builtin(FamilyTag.LZ), 0, 2)
        with self.assertRaises(ArgumentError):
            diagnose_poisson(builtin(FamilyTag.LZ), 10, 0)


class CltReportTest(SimpleTestCase):

    def test_abn_small(self):
        report = clt_report(builtin(FamilyTag.ABN), 2)
        self.assertEqual(report.mean, Fraction(9, 4))
        self.assertEqual(report.variance, Fraction(7, 16))
        probabilities = pmf(generate(builtin(FamilyTag.ABN), 2)[2])
        self.assertEqual(probabilities.probabilities,
                         (0, Fraction(1, 8), Fraction(1, 2), Fraction(3, 8)))
        mean = Fraction(9, 4)
        third = sum(q * (k - mean) ** 3
                    for k, q in enumerate(probabilities.probabilities))
        expected = float(third) / float(report.variance) ** 1.5
        self.assertAlmostEqual(report.standardized_m3, expected)
        self.assertEqual(report.gaussian_m4, 3.0)

    def test_abn_variance_formula(self):
        report = clt_report(builtin(FamilyTag.ABN), 24)
        self.assertEqual(report.variance, Fraction(7 * 25, 48))
        self.assertTrue(report.certificate.real_rooted)

    def test_eulerian(self):
        report = clt_report(builtin(FamilyTag.EULERIAN), 25)
        self.assertTrue(report.certificate.real_rooted)
        self.assertGreater(report.variance, 2)
        lo, hi = report.decomposition.mean_bracket()
        self.assertTrue(lo <= report.mean <= hi)
        lo, hi = report.decomposition.variance_bracket()
        self.assertTrue(lo <= report.variance <= hi)
        self.assertLessEqual(report.lyapunov.lo, report.lyapunov.hi)
        self.assertLess(report.lyapunov.hi, 1)

    def test_point_mass_has_no_lyapunov_ratio(self):
        report = clt_report(builtin(FamilyTag.ABN), 0)
        self.assertEqual(report.variance, 0)
        self.assertIsNone(report.lyapunov)
        self.assertIsNone(report.standardized_m3)

    def test_lyapunov_ratio_decreases(self):
        small = clt_report(builtin(FamilyTag.ABN), 5).lyapunov
        large = clt_report(builtin(FamilyTag.ABN), 25).lyapunov
        self.assertLess(large.hi, small.lo)

    def test_negative_n(self):
        with self.assertRaises(ArgumentError):
            clt_report(builtin(FamilyTag.ABN), -1)


class LocalLimitTest(SimpleTestCase):

    def test_first_peak_polynomial(self):
        report = local_limit_report(FamilyTag.ABN, 1)
        self.assertEqual(report.mean, 1.5)
        self.assertAlmostEqual(report.variance, 7 / 24)
        density = norm.pdf([0, 1, 2], loc=1.5, scale=sqrt(7 / 24))
        expected = max(density[0], abs(0.5 - density[1]),
                       abs(0.5 - density[2]))
        self.assertAlmostEqual(report.sup_abs_error, expected)

    def test_error_decreases(self):
        errors = [local_limit_report(FamilyTag.ABN, n).sup_abs_error
                  for n in (15, 30, 60)]
        self.assertGreater(errors[0], errors[1])
        self.assertGreater(errors[1], errors[2])
        self.assertLessEqual(errors[2], 0.004)

    def test_totals(self):
        report = local_limit_report('abn', 30)
        self.assertEqual(report.pmf_total, 1)
        self.assertAlmostEqual(report.density_total, 1, places=3)

    def test_degenerate(self):
        with self.assertRaises(DegenerateDistributionError):
            local_limit_report(FamilyTag.EULERIAN, 1)
        with self.assertRaises(ArgumentError):
            local_limit_report(FamilyTag.ABN, 0)


class ScaledMomentsTest(SimpleTestCase):
    """X_n / (2 sqrt(n)) для многочленов игры «мемори»."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.report = scaled_moment_limit(
            nmax=20_000, grid=(10, 100, 1000, 10_000, 20_000))

    def test_log_grid(self):
        self.assertEqual(log_grid(10_000, 5), (1, 10, 100, 1000, 10_000))
        self.assertEqual(log_grid(1, 5), (1,))

    def test_mean_ratio(self):
        self.assertLess(abs(self.report.ratio(10_000, 1) - 1), 0.01)

    def test_variance_slope(self):
        variances = dict(self.report.variance_ratios)
        target = self.report.variance_target
        self.assertAlmostEqual(target, 4 - pi)
        self.assertLessEqual(abs(variances[10_000] - target), 0.02)
        self.assertLessEqual(abs(variances[20_000] - target) / target, 0.02)

    def test_higher_moments(self):
        for k in range(1, 5):
            with self.subTest(k=k):
                self.assertLess(abs(self.report.ratio(10_000, k) - 1), 0.02)
        entry = self.report.entered_band(4, 0.02)
        self.assertIsNotNone(entry)
        self.assertLessEqual(entry, 10_000)

    def test_first_polynomial(self):
        report = derivative_vector_recurrence(builtin(FamilyTag.AH), 1, 2)[1]
        self.assertEqual(report.factorial_moment(2), 2)
        self.assertEqual(report.variance, 0)

    def test_third_factorial_moment_closed_form(self):
        table = derivative_vector_recurrence(builtin(FamilyTag.AH), 6, 3)
        for report in table[1:]:
            with self.subTest(n=report.n):
                closed = ah_third_factorial_moment_closed_form(report.n)
                self.assertAlmostEqual(
                    float(report.factorial_moment(3)) - closed, 6, places=6)
        self.assertEqual(table[2].factorial_moment(3), 4)

    def test_third_factorial_moment_growth(self):
        n = 10_000
        report = derivative_vector_recurrence(
            builtin(FamilyTag.AH), n, 3, Mode.FLOAT, grid=[n])[0]
        ratio = report.factorial_moment(3) / (6 * sqrt(pi) * n ** 1.5)
        self.assertLessEqual(abs(ratio - 1), 0.05)

    def test_closed_form_asymptotics(self):
        n = 10_000
        scale = 8 * n ** 1.5 * gamma(2.5)
        ratio = ah_third_factorial_moment_closed_form(n) / scale
        self.assertAlmostEqual(ratio, 1 - 24 / (6 * sqrt(pi * n)),
                               delta=1e-3)

    def test_bad_arguments(self):
        with self.assertRaises(ArgumentError):
            scaled_moment_limit(nmax=0)
        with self.assertRaises(ArgumentError):
            scaled_moment_limit(nmax=10, kmax=1)
        with self.assertRaises(ArgumentError):
            scaled_moment_limit(nmax=10, grid=(5, 20))
