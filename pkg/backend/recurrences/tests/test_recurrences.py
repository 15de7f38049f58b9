from dataclasses import replace
from fractions import Fraction
from math import factorial, prod

from django.test import SimpleTestCase

from core.choices import Form, NormalizationKind
from core.exceptions import (ArgumentError, FamilyParameterError,
                             NegativeCoefficientError, NormalizationError,
                             SpecError)
from polynomials.polynomial import Polynomial
from recurrences.engine import generate, step, verify_symmetric_reduction
from recurrences.families import (FamilyId, FamilyTag, builtin,
                                  builtin_families)
from recurrences.specs import Normalization, RecurrenceSpec
from recurrences.symbolic import SymbolicCoefficient


def poly(*coeffs):
    return Polynomial.from_coefficients(coeffs)


class BuiltinFamiliesTest(SimpleTestCase):
    """Каталог встроенных семейств."""

    def test_lz_spec(self):
        spec = builtin('lz')
        self.assertEqual(spec.form, Form.DERIVATIVE)
        self.assertEqual(spec.f.instantiate(5), poly(5))
        self.assertEqual(spec.g.instantiate(5), poly(2, -2))
        self.assertEqual(spec.p0, poly(1))
        self.assertEqual(spec.normalization.kind, NormalizationKind.FACTORIAL)
        self.assertEqual(spec.normalization.value(5), 120)

    def test_abn_spec(self):
        spec = builtin(FamilyTag.ABN)
        self.assertEqual(spec.form, Form.DIRECT)
        self.assertEqual(spec.f.instantiate(3), poly(0, 3, 3))
        self.assertEqual(spec.g.instantiate(3), poly(0, 1, 0, -1))
        self.assertEqual(spec.p0, poly(0, 1))

    def test_lz_symmetric_normalization(self):
        spec = builtin('LZ_SYMMETRIC')
        self.assertEqual(spec.normalization.value(3), 2 ** 3 * 6)
        self.assertEqual(spec.square_reduction.factor, 2)

    def test_hj_one_zero_is_eulerian(self):
        hj = builtin(FamilyId.parse('HJ', a=1, b=0))
        self.assertEqual(hj, builtin('eulerian'))
        self.assertEqual(str(hj), 'HJ(1,0)')

    def test_g_vanishes_at_one(self):
        for tag, spec in builtin_families().items():
            with self.subTest(family=tag):
                expected = tag not in (FamilyTag.W, FamilyTag.BE1)
                self.assertEqual(spec.g_vanishes_at_one, expected)

    def test_parameter_ranges(self):
        bad = [
            ('HJ', {'a': -1}),
            ('HJ', {'b': '-1/2'}),
            ('W', {'c': -1}),
            ('W', {'m': 0}),
            ('BE1', {'m': 0}),
            ('BE1', {'m': '3/2'}),
        ]
        for name, params in bad:
            with self.subTest(family=name, params=params):
                with self.assertRaises(FamilyParameterError):
                    builtin(FamilyId.parse(name, **params))

    def test_unknown_family_and_parameter(self):
        with self.assertRaises(FamilyParameterError):
            FamilyId.parse('QQ')
        with self.assertRaises(FamilyParameterError):
            FamilyId.parse('ABN', a=1)

    def test_accepted_parameters(self):
        spec = builtin(FamilyId.parse('w', c='1/2', m=3))
        self.assertEqual(spec.f.instantiate(1), poly(Fraction(1, 2), 1))
        self.assertEqual(spec.g.instantiate(1), poly(0, 3))
        self.assertEqual(builtin(FamilyId.parse('be1', m=2)).g.instantiate(4),
                         poly(0, 2, 1))


class SpecValidationTest(SimpleTestCase):

    def test_derivative_form_requires_normalization(self):
        with self.assertRaises(NormalizationError):
            RecurrenceSpec(
                form=Form.DERIVATIVE,
                f=SymbolicCoefficient.from_rows([[0, 1]]),
                g=SymbolicCoefficient.from_rows([[2], [-2]]),
                p0=poly(1),
            )

    def test_zero_initial_polynomial(self):
        with self.assertRaises(SpecError):
            RecurrenceSpec(form=Form.DIRECT,
                           f=SymbolicCoefficient.from_rows([[1]]),
                           g=SymbolicCoefficient(), p0=Polynomial())

    def test_custom_product_normalization(self):
        rule = Normalization.custom_product(3, poly(1, 2))
        self.assertEqual(rule.value(0), 3)
        self.assertEqual(rule.value(2), 3 * 3 * 5)
        self.assertEqual(rule.ratio(2), 5)
        self.assertEqual(
            Normalization.from_params(rule.kind, rule.params()), rule)

    def test_nonpositive_factor_is_rejected(self):
        rule = Normalization.custom_product(1, poly(-3, 1))
        self.assertEqual(rule.value(0), 1)
        for n in (1, 2, 3):
            with self.subTest(n=n):
                with self.assertRaises(NormalizationError):
                    rule.ratio(n)
        with self.assertRaises(NormalizationError):
            rule.value(5)
        self.assertEqual(rule.ratio(4), 1)

    def test_nonpositive_factor_stops_generation(self):
        spec = replace(builtin('LZ'),
                       normalization=Normalization.custom_product(
                           1, poly(-3, 1)))
        with self.assertRaises(NormalizationError):
            generate(spec, 4)

    def test_missing_normalization_parameter(self):
        with self.assertRaises(NormalizationError):
            Normalization.from_params(NormalizationKind.SCALED_FACTORIAL, {})


class StepAndGenerateTest(SimpleTestCase):
    """Итерация рекуррентностей на малых n."""

    def test_step_examples(self):
        self.assertEqual(step(builtin('LZ'), poly(0, 2), 3), poly(1, 4, 1))
        self.assertEqual(step(builtin('ABN'), poly(0, 1), 1), poly(0, 1, 1))
        self.assertEqual(step(builtin('EULERIAN'), poly(1, 1), 3),
                         poly(1, 4, 1))

    def test_step_rejects_zero_index(self):
        with self.assertRaises(ArgumentError):
            step(builtin('LZ'), poly(1), 0)

    def test_generate_lz(self):
        self.assertEqual(generate(builtin('LZ'), 4), [
            poly(1), poly(0, 1), poly(0, 2), poly(1, 4, 1), poly(6, 12, 6)])

    def test_generate_abn(self):
        self.assertEqual(generate(builtin('ABN'), 2),
                         [poly(0, 1), poly(0, 1, 1), poly(0, 1, 4, 3)])

    def test_generate_ah(self):
        self.assertEqual(generate(builtin('AH'), 2),
                         [poly(0, 1), poly(0, 0, 1), poly(0, 0, 1, 2)])

    def test_generate_zero(self):
        for spec in builtin_families().values():
            self.assertEqual(generate(spec, 0), [spec.p0])

    def test_generate_lz_symmetric(self):
        self.assertEqual(generate(builtin('LZ_SYMMETRIC'), 2),
                         [poly(1), poly(1, 0, 1), poly(4, 0, 4)])

    def test_negative_coefficient_is_reported(self):
        spec = RecurrenceSpec(form=Form.DIRECT,
                              f=SymbolicCoefficient.from_rows([[-1]]),
                              g=SymbolicCoefficient(), p0=poly(1))
        with self.assertRaises(NegativeCoefficientError):
            generate(spec, 1)

    def test_verify_symmetric_reduction(self):
        self.assertTrue(verify_symmetric_reduction(0))
        self.assertTrue(verify_symmetric_reduction(2))
        self.assertTrue(verify_symmetric_reduction(20))


class FamilyInvariantsTest(SimpleTestCase):
    """Значения в единице, степени и неотрицательность."""

    def test_direct_form_value_at_one(self):
        for tag, spec in builtin_families().items():
            if spec.form != Form.DIRECT or not spec.g_vanishes_at_one:
                continue
            sequence = generate(spec, 12)
            for n in range(1, 13):
                with self.subTest(family=tag, n=n):
                    self.assertEqual(
                        sequence[n].evaluate(1),
                        spec.f.instantiate(n).evaluate(1)
                        * sequence[n - 1].evaluate(1))

    def test_abn_value_and_degree(self):
        for n, b in enumerate(generate(builtin('ABN'), 15)):
            self.assertEqual(b.evaluate(1), 2 ** n * factorial(n))
            self.assertEqual(b.degree, n + 1)

    def test_lz_mean_is_one(self):
        for n, p in enumerate(generate(builtin('LZ'), 15)):
            if n == 0:
                continue
            self.assertEqual(p.derivative().evaluate(1), factorial(n))

    def test_ah_double_factorial(self):
        for n, a in enumerate(generate(builtin('AH'), 15)):
            self.assertEqual(a.evaluate(1), prod(range(1, 2 * n, 2)))

    def test_all_builtins_nonnegative(self):
        for tag in FamilyTag.values:
            with self.subTest(family=tag):
                for p in generate(builtin(tag), 10):
                    self.assertTrue(p.has_nonnegative_coefficients())

    def test_eulerian_numbers(self):
        self.assertEqual(generate(builtin('EULERIAN'), 4)[4],
                         poly(1, 11, 11, 1))
