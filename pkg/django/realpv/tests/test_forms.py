from django.test import SimpleTestCase

from realpv import constants
from realpv import exact_linalg
from realpv import field_tower
from realpv import forms
from realpv.exceptions import NotSemistableError
from realpv.field_tower import OrderingSpec
from realpv.forms import Signature, SymForm
from realpv.tests.helpers import expr, random_function, random_invertible, seeded_random


def function_diagonal(entries, field=constants.FIELD_Q):
    K = field_tower.rational_function_field(field)
    return SymForm(exact_linalg.diagonal([expr(entry, field) for entry in entries], K), field)


class SignatureTests(SimpleTestCase):

    def test_constant_form(self):
        F = forms.constant_form([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
        self.assertEqual(forms.signature(F, OrderingSpec.plus_infinity()), Signature(2, 1, 0))

    def test_signature_depends_on_ordering(self):
        F = function_diagonal(['1', '-1', 'z'])
        self.assertEqual(forms.signature(F, OrderingSpec.plus_infinity()).ordered, [2, 1])
        self.assertEqual(forms.signature(F, OrderingSpec.minus_infinity()).ordered, [1, 2])
        self.assertEqual(forms.signature(F, OrderingSpec.at_point_plus(0)).ordered, [2, 1])

    def test_signature_at_point(self):
        F = function_diagonal(['z^2 - 2', '1'])
        self.assertEqual(forms.signature(F, OrderingSpec.at_point_plus(0)), Signature(1, 1, 0))
        self.assertEqual(forms.signature(F, OrderingSpec.at_point_plus(2)), Signature(2, 0, 0))

    def test_hyperbolic_form(self):
        F = forms.constant_form([[0, 1], [1, 0]])
        self.assertEqual(forms.signature(F, OrderingSpec.plus_infinity()), Signature(1, 1, 0))

    def test_degenerate_form(self):
        F = forms.constant_form([[1, 1], [1, 1]])
        signature = forms.signature(F, OrderingSpec.plus_infinity())
        self.assertTrue(signature.is_degenerate)
        self.assertEqual(signature.zero, 1)

    def test_normalized_signature(self):
        F = forms.constant_form([[-1, 0, 0], [0, -1, 0], [0, 0, 1]])
        self.assertEqual(forms.signature(F, OrderingSpec.plus_infinity()).ordered, [1, 2])
        normalized = forms.normalized_signature(F, OrderingSpec.plus_infinity())
        self.assertEqual(normalized.ordered, [2, 1])
        self.assertEqual(normalized.label, "SO(2,1)")
        self.assertEqual(normalized.unordered, (2, 1))

    def test_unordered_signature_ignores_scaling(self):
        F = function_diagonal(['1', '1', '-1', 'z'])
        ordering = OrderingSpec.at_point_minus(0)
        for scalar in ('1', '-1', 'z', '-3/(z - 1)'):
            scaled = F.scaled(expr(scalar))
            self.assertEqual(forms.signature(scaled, ordering).unordered, (2, 2))

    def test_signature_is_a_congruence_invariant(self):
        generator = seeded_random()
        K = field_tower.rational_function_field(constants.FIELD_Q)
        for _ in range(100):
            n = generator.randint(2, 3)
            entries = [[None] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    entries[i][j] = entries[j][i] = random_function(generator, degree=generator.randint(0, 1))
            S = exact_linalg.matrix(entries, K)
            P = exact_linalg.constant_matrix(random_invertible(generator, n), constants.FIELD_Q)
            ordering = generator.choice([OrderingSpec.plus_infinity(), OrderingSpec.minus_infinity(),
                                         OrderingSpec.at_point_plus(generator.randint(-3, 3)),
                                         OrderingSpec.at_point_minus(generator.randint(-3, 3))])
            self.assertEqual(forms.signature(SymForm(P.transpose() * S * P), ordering),
                             forms.signature(SymForm(S), ordering))

    def test_non_symmetric_matrix(self):
        with self.assertRaises(ValueError):
            forms.constant_form([[1, 2], [0, 1]])


class RealificationTests(SimpleTestCase):

    def test_proportional_forms(self):
        F = function_diagonal(['1', 'z'])
        G = F.scaled(expr('3/z'))
        self.assertEqual(forms.is_proportional(F, G), expr('3/z'))
        self.assertIsNone(forms.is_proportional(F, function_diagonal(['1', '1'])))

    def test_realify_imaginary_form(self):
        F = function_diagonal(['i', 'i', 'i'], constants.FIELD_QI)
        realification = forms.realify(F)
        self.assertEqual(realification.scalar, expr('2*i', constants.FIELD_QI))
        self.assertEqual(realification.form, function_diagonal(['-2', '-2', '-2']))

    def test_realify_gaussian_multiple(self):
        F = function_diagonal(['1 + i', '(1 + i)*z'], constants.FIELD_QI)
        realification = forms.realify(F)
        self.assertEqual(realification.form, function_diagonal(['2', '2*z']))

    def test_realify_real_form(self):
        F = function_diagonal(['1', '-z'], constants.FIELD_QI)
        realification = forms.realify(F)
        self.assertEqual(realification.form, function_diagonal(['2', '-2*z']))

    def test_not_semistable(self):
        with self.assertRaisesMessage(NotSemistableError, forms.NOT_SEMISTABLE_MESSAGE):
            forms.realify(function_diagonal(['1', 'i'], constants.FIELD_QI))

    def test_clear_denominators(self):
        F = function_diagonal(['1/z', '1/(z - 1)'])
        self.assertEqual(forms.clear_denominators(F), function_diagonal(['z - 1', 'z']))
