from django.test import SimpleTestCase
from sympy.polys.domains import QQ

from realpv import constants
from realpv import expressions
from realpv import field_tower
from realpv.exceptions import ExpressionSyntaxError, UnsupportedError
from realpv.field_tower import OrderingSpec
from realpv.tests.helpers import expr, random_function, seeded_random


class OrderingTests(SimpleTestCase):

    def test_parse_ordering(self):
        self.assertEqual(field_tower.parse_ordering('plus-infinity'), OrderingSpec.plus_infinity())
        self.assertEqual(field_tower.parse_ordering('minus-infinity'), OrderingSpec.minus_infinity())
        self.assertEqual(field_tower.parse_ordering('at:1/2:+'), OrderingSpec.at_point_plus(QQ(1, 2)))
        self.assertEqual(field_tower.parse_ordering('at:-3:-'), OrderingSpec.at_point_minus(-3))

    def test_parse_ordering_rejects_garbage(self):
        for text in ('infinity', 'at:0', 'at:0:*', 'at:z:+', 'at:sqrt(2):+'):
            with self.assertRaises(ValueError):
                field_tower.parse_ordering(text)

    def test_format_ordering(self):
        self.assertEqual(str(field_tower.parse_ordering('at:1/2:-')), 'at:1/2:-')
        self.assertEqual(str(OrderingSpec.plus_infinity()), 'plus-infinity')

    def test_sign_of_variable(self):
        z = field_tower.variable()
        self.assertEqual(field_tower.sign_at(z, OrderingSpec.plus_infinity()), 1)
        self.assertEqual(field_tower.sign_at(z, OrderingSpec.minus_infinity()), -1)
        self.assertEqual(field_tower.sign_at(z, OrderingSpec.at_point_plus(0)), 1)
        self.assertEqual(field_tower.sign_at(z, OrderingSpec.at_point_minus(0)), -1)

    def test_sign_at_pole(self):
        self.assertEqual(field_tower.sign_at(expr('1/z'), OrderingSpec.at_point_minus(0)), -1)
        self.assertEqual(field_tower.sign_at(expr('1/(z - 1)^2'), OrderingSpec.at_point_minus(1)), 1)
        self.assertEqual(field_tower.sign_at(expr('-1/(z - 1)^3'), OrderingSpec.at_point_minus(1)), 1)

    def test_sign_against_constants(self):
        f = expr('z^2 - 2')
        self.assertEqual(field_tower.sign_at(f, OrderingSpec.plus_infinity()), 1)
        self.assertEqual(field_tower.sign_at(f, OrderingSpec.minus_infinity()), 1)
        self.assertEqual(field_tower.sign_at(f, OrderingSpec.at_point_plus(0)), -1)
        self.assertEqual(field_tower.sign_at(field_tower.constant(0), OrderingSpec.plus_infinity()), 0)

    def test_sign_of_non_real_function(self):
        with self.assertRaises(UnsupportedError):
            field_tower.sign_at(expr('i*z', constants.FIELD_QI), OrderingSpec.plus_infinity())

    def test_sign_of_real_function_over_gaussians(self):
        f = expr('(1 + i)*(1 - i)*z', constants.FIELD_QI)
        self.assertEqual(field_tower.sign_at(f, OrderingSpec.minus_infinity()), -1)


class RealRootTests(SimpleTestCase):

    def test_sturm_count(self):
        self.assertEqual(field_tower.sturm_count([-2, 0, 1]), 2)
        self.assertEqual(field_tower.sturm_count([-2, 0, 1], lo=0), 1)
        self.assertEqual(field_tower.sturm_count([1, 0, 1]), 0)
        self.assertEqual(field_tower.sturm_count([0, -1, 0, 1], lo='-1/2', hi=2), 2)

    def test_sturm_count_ignores_multiplicity(self):
        self.assertEqual(field_tower.sturm_count([1, -2, 1]), 1)

    def test_rational_roots(self):
        self.assertEqual(field_tower.rational_roots([-1, 0, 1]), [-1, 1])
        self.assertEqual(field_tower.rational_roots([-2, 0, 1]), [])
        self.assertEqual(field_tower.rational_roots([-1, 2]), [QQ(1, 2)])

    def test_gaussian_roots(self):
        gaussian = field_tower.gaussian
        self.assertEqual(field_tower.gaussian_roots([1, 0, 1]), [gaussian(0, -1), gaussian(0, 1)])
        self.assertEqual(field_tower.gaussian_roots([-2, 0, 1]), [])
        self.assertEqual(field_tower.gaussian_roots([1, 1, 1]), [])
        # (X - 1/2)*(X^2 - 2X + 5)
        roots = field_tower.gaussian_roots([QQ(-5, 2), 6, QQ(-5, 2), 1])
        self.assertEqual(roots, [gaussian(QQ(1, 2)), gaussian(1, -2), gaussian(1, 2)])

    def test_formally_real_quotients(self):
        reducible = field_tower.is_formally_real_quotient([-1, 0, 0, 1])
        self.assertFalse(reducible.real)
        self.assertEqual(reducible.reason, field_tower.REDUCIBLE_REASON)

        complex_only = field_tower.is_formally_real_quotient([1, 1, 1])
        self.assertFalse(complex_only.real)
        self.assertEqual(complex_only.reason, field_tower.NO_REAL_EMBEDDING_REASON)

        self.assertTrue(field_tower.is_formally_real_quotient([-2, 0, 1]).real)

    def test_degree_limit(self):
        with self.assertRaises(UnsupportedError):
            field_tower.rational_roots([1] + [0] * 40 + [1])


class RationalFunctionTests(SimpleTestCase):

    def test_partial_fractions(self):
        f = expr('z + 1/z + 2/(z - 1)^2')
        fractions = field_tower.partial_fractions(f)

        self.assertEqual(expressions.format_polynomial(fractions.polynomial), 'z')
        self.assertEqual([(str(term.factor.as_expr()), term.exponent) for term in fractions.terms],
                         [('z', 1), ('z - 1', 2)])
        self.assertEqual(field_tower.recombine(fractions, constants.FIELD_Q), f)

    def test_partial_fractions_irreducible_quadratic(self):
        f = expr('(z + 3)/((z^2 + 1)*(z - 1))')
        fractions = field_tower.partial_fractions(f)
        self.assertEqual(len(fractions.terms), 2)
        self.assertEqual(field_tower.recombine(fractions, constants.FIELD_Q), f)

    def test_derivation(self):
        self.assertEqual(field_tower.derive(expr('1/z')), expr('-1/z^2'))
        self.assertEqual(field_tower.derive(expr('z^3 + z')), expr('3*z^2 + 1'))

    def test_derivation_over_gaussians(self):
        QI = constants.FIELD_QI
        self.assertEqual(field_tower.derive(expr('i*z^2', QI)), expr('2*i*z', QI))
        self.assertEqual(field_tower.derive(expr('1/(z - i)', QI)), expr('-1/(z - i)^2', QI))
        self.assertEqual(field_tower.derive(expr('(1 + i)*z/(z + 1)', QI)), expr('(1 + i)/(z + 1)^2', QI))

    def test_scalar_conjugate(self):
        self.assertEqual(field_tower.scalar_conjugate(field_tower.gaussian(1, 2)), field_tower.gaussian(1, -2))
        self.assertEqual(field_tower.scalar_conjugate(QQ(3, 4)), QQ(3, 4))
        self.assertEqual(field_tower.conjugate(expr('i*z', constants.FIELD_QI)), expr('-i*z', constants.FIELD_QI))

    def test_conjugation_and_parts(self):
        f = expr('(1 + i)/z', constants.FIELD_QI)
        self.assertEqual(field_tower.conjugate(f), expr('(1 - i)/z', constants.FIELD_QI))
        self.assertEqual(field_tower.real_part(f), expr('1/z'))
        self.assertEqual(field_tower.imag_part(f), expr('1/z'))
        self.assertFalse(field_tower.is_real(f))

    def test_conjugation_with_complex_denominator(self):
        f = expr('1/(z - i)', constants.FIELD_QI)
        self.assertEqual(field_tower.real_part(f), expr('z/(z^2 + 1)'))
        self.assertEqual(field_tower.imag_part(f), expr('1/(z^2 + 1)'))

    def test_derivation_is_a_derivation(self):
        generator = seeded_random()
        for _ in range(100):
            field = generator.choice([constants.FIELD_Q, constants.FIELD_QI])
            f = random_function(generator, field, generator.randint(0, 2))
            g = random_function(generator, field, generator.randint(0, 2))
            self.assertEqual(field_tower.derive(f * g), field_tower.derive(f) * g + f * field_tower.derive(g))
            self.assertEqual(field_tower.derive(f + g), field_tower.derive(f) + field_tower.derive(g))

    def test_conjugation_is_a_field_automorphism(self):
        generator = seeded_random()
        for _ in range(100):
            f = random_function(generator, constants.FIELD_QI, generator.randint(0, 2))
            g = random_function(generator, constants.FIELD_QI, generator.randint(0, 2))
            conjugate = field_tower.conjugate
            self.assertEqual(conjugate(f * g), conjugate(f) * conjugate(g))
            self.assertEqual(conjugate(f + g), conjugate(f) + conjugate(g))
            self.assertEqual(conjugate(conjugate(f)), f)
            self.assertEqual(conjugate(field_tower.derive(f)), field_tower.derive(conjugate(f)))
            self.assertTrue(field_tower.is_real(f * conjugate(f)))

    def test_evaluate(self):
        self.assertEqual(field_tower.evaluate(expr('(z + 1)/(z - 2)'), 3), 4)
        with self.assertRaises(ZeroDivisionError):
            field_tower.evaluate(expr('1/z'), 0)


class ExpressionTests(SimpleTestCase):

    def test_canonical_spelling(self):
        self.assertEqual(expressions.format_expression(expr('1/(2*z)')), '(1/2)/z')
        self.assertEqual(expressions.format_expression(expr('(z + 1)/(z - 1)')), '(z + 1)/(z - 1)')
        self.assertEqual(expressions.format_expression(expr('-1/(z - 1)')), '-1/(z - 1)')
        self.assertEqual(expressions.format_expression(expr('z*z - 1')), 'z^2 - 1')

    def test_spelling_parses_back(self):
        for text in ('1/(2*z)', '3*z^2/(z^2 + 1)', '-z + 1/2', '0'):
            f = expr(text)
            self.assertEqual(expr(expressions.format_expression(f)), f)

    def test_gaussian_spelling(self):
        f = expr('(1 + i)*z - i', constants.FIELD_QI)
        self.assertEqual(expressions.format_expression(f), '(1 + i)*z + (-i)')
        self.assertEqual(expr(expressions.format_expression(f), constants.FIELD_QI), f)

    def test_syntax_errors(self):
        for text in ('1//z', '', '(z', 'z^-1', 'x + 1', '1/0'):
            with self.assertRaises(ExpressionSyntaxError):
                expr(text)

    def test_imaginary_unit_needs_gaussian_field(self):
        with self.assertRaises(ExpressionSyntaxError):
            expr('i*z')

    def test_parse_scalar(self):
        self.assertEqual(expressions.parse_scalar('(1 + i)^2'), field_tower.gaussian(0, 2))
        with self.assertRaises(ExpressionSyntaxError):
            expressions.parse_scalar('z')
