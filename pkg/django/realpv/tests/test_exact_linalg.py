import random

from django.test import SimpleTestCase
from sympy.polys.domains import QQ, QQ_I

from realpv import constants
from realpv import exact_linalg
from realpv import field_tower
from realpv.tests.helpers import expr, gaussian_matrix, rational_matrix, seeded_random


class KernelTests(SimpleTestCase):

    def test_kernel_of_rank_one_matrix(self):
        M = rational_matrix([[1, 2, 3], [2, 4, 6]])
        basis = exact_linalg.kernel(M)
        self.assertEqual(len(basis), 2)
        for vector in basis:
            self.assertTrue(exact_linalg.is_zero(M * exact_linalg.column(vector, QQ)))

    def test_kernel_of_invertible_matrix(self):
        self.assertEqual(exact_linalg.kernel(rational_matrix([[1, 1], [0, 1]])), [])

    def test_kernel_over_rational_functions(self):
        K = field_tower.rational_function_field(constants.FIELD_Q)
        M = exact_linalg.matrix([[expr('z'), expr('1')], [expr('z^2'), expr('z')]], K)
        (vector,) = exact_linalg.kernel(M)
        self.assertTrue(exact_linalg.is_zero(M * exact_linalg.column(vector, K)))


class EigenvalueTests(SimpleTestCase):

    def test_integer_eigenvalues(self):
        M = exact_linalg.diagonal([QQ(1), QQ(2), QQ(1, 2)], QQ)
        self.assertEqual(exact_linalg.integer_eigenvalues(M), [1, 2])

    def test_rotation_has_no_integer_eigenvalues(self):
        self.assertEqual(exact_linalg.integer_eigenvalues(rational_matrix([[0, -1], [1, 0]])), [])

    def test_integer_eigenvalues_over_gaussians(self):
        M = gaussian_matrix([['i', 0], [0, 3]])
        self.assertEqual(exact_linalg.integer_eigenvalues(M), [3])

    def test_charpoly(self):
        poly = exact_linalg.charpoly(rational_matrix([[0, -1], [1, 0]]))
        self.assertEqual(poly.all_coeffs(), [1, 0, 1])


class CongruenceTests(SimpleTestCase):

    def test_diagonal_form(self):
        D, T = exact_linalg.congruence_diagonalize(rational_matrix([[1, 0], [0, -3]]))
        self.assertEqual(D, [1, -3])

    def test_hyperbolic_plane(self):
        S = rational_matrix([[0, 1], [1, 0]])
        D, T = exact_linalg.congruence_diagonalize(S)
        self.assertEqual(D, [QQ(2), QQ(-1, 2)])
        self.assertEqual(T.transpose() * S * T, exact_linalg.diagonal(D, QQ))

    def test_degenerate_form(self):
        D, _ = exact_linalg.congruence_diagonalize(rational_matrix([[1, 1], [1, 1]]))
        self.assertEqual(D, [1, 0])

    def test_random_forms(self):
        generator = random.Random(7)
        for _ in range(20):
            entries = [[0] * 4 for _ in range(4)]
            for i in range(4):
                for j in range(i, 4):
                    entries[i][j] = entries[j][i] = generator.randint(-3, 3)
            S = rational_matrix(entries)
            D, T = exact_linalg.congruence_diagonalize(S)
            self.assertEqual(T.transpose() * S * T, exact_linalg.diagonal(D, QQ))
            self.assertEqual(sum(1 for d in D if d), exact_linalg.rank(S))

    def test_over_rational_functions(self):
        K = field_tower.rational_function_field(constants.FIELD_Q)
        S = exact_linalg.matrix([[expr('0'), expr('z')], [expr('z'), expr('1')]], K)
        D, T = exact_linalg.congruence_diagonalize(S)
        self.assertEqual(D, [expr('1'), expr('-z^2')])


class SymmetricSquareTests(SimpleTestCase):

    def test_index_and_dimension(self):
        self.assertEqual(exact_linalg.sym_square_index(2), [(0, 0), (0, 1), (1, 1)])
        self.assertEqual(exact_linalg.sym_square_dimension(4), 10)

    def test_coordinates(self):
        S = rational_matrix([[1, 2], [2, 3]])
        vector = exact_linalg.sym_square_coordinates(S)
        self.assertEqual(vector, [1, 2, 3])
        self.assertEqual(exact_linalg.symmetric_from_coordinates(vector, 2, QQ), S)

    def test_group_action_is_multiplicative(self):
        g = rational_matrix([[1, 2, 0], [0, 1, 3], [1, 0, 1]])
        h = rational_matrix([[2, 0, 1], [1, 1, 0], [0, -1, 1]])
        self.assertEqual(exact_linalg.sym_square_basis_map(g * h),
                         exact_linalg.sym_square_basis_map(g) * exact_linalg.sym_square_basis_map(h))

    def test_random_group_action_is_multiplicative(self):
        generator = seeded_random()
        for _ in range(100):
            n = generator.randint(2, 4)
            g, h = (rational_matrix([[QQ(generator.randint(-4, 4), generator.randint(1, 3)) for _ in range(n)]
                                     for _ in range(n)]) for _ in range(2))
            self.assertEqual(exact_linalg.sym_square_basis_map(g * h),
                             exact_linalg.sym_square_basis_map(g) * exact_linalg.sym_square_basis_map(h))

    def test_derivation_map(self):
        N = rational_matrix([[1, 2], [0, -1]])
        X = rational_matrix([[1, 1], [1, 0]])
        image = exact_linalg.sym_square_derivation_map(N) * exact_linalg.column(
            exact_linalg.sym_square_coordinates(X), QQ)
        expected = exact_linalg.sym_square_coordinates(N * X + X * N.transpose())
        self.assertEqual(exact_linalg.column_entries(image), expected)


class MiscTests(SimpleTestCase):

    def test_kronecker(self):
        A = rational_matrix([[1, 2], [3, 4]])
        B = exact_linalg.identity(2, QQ)
        product = exact_linalg.kronecker(A, B)
        self.assertEqual(product.shape, (4, 4))
        self.assertEqual(exact_linalg.rows(product)[2][0], 3)
        self.assertEqual(exact_linalg.rows(product)[3][1], 3)

    def test_scalar_matrix(self):
        self.assertEqual(exact_linalg.is_scalar_matrix(exact_linalg.diagonal([QQ(2)] * 3, QQ)), 2)
        self.assertIsNone(exact_linalg.is_scalar_matrix(rational_matrix([[1, 0], [0, 2]])))

    def test_constructors_compare_with_built_matrices(self):
        swap = rational_matrix([[0, 1], [1, 0]])
        self.assertEqual(swap * swap, exact_linalg.identity(2, QQ))
        self.assertEqual(exact_linalg.zeros(2, 3, QQ), rational_matrix([[0, 0, 0], [0, 0, 0]]))
        self.assertEqual(exact_linalg.identity(2, QQ_I), gaussian_matrix([[1, 0], [0, 1]]))

    def test_inverse_of_singular_matrix(self):
        with self.assertRaises(ValueError):
            exact_linalg.inverse(rational_matrix([[1, 2], [2, 4]]))

    def test_conjugate_matrix(self):
        M = gaussian_matrix([['1 + i', '2'], ['-i', '0']])
        self.assertEqual(exact_linalg.conjugate_matrix(M), gaussian_matrix([['1 - i', '2'], ['i', '0']]))
        self.assertEqual(exact_linalg.real_part_matrix(M), rational_matrix([[1, 2], [0, 0]]))
