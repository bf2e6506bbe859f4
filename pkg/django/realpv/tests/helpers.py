"""Share builders between the test modules"""

import random

from sympy.polys.domains import QQ, QQ_I

from realpv import constants
from realpv import exact_linalg
from realpv import expressions
from realpv import field_tower
from realpv import settings
from realpv.diffmod import DiffModule


def expr(text, field=constants.FIELD_Q):
    return expressions.parse_expression(text, field)


def module(rows, field=constants.FIELD_Q):
    """Build a module from rows of expression strings"""
    K = field_tower.rational_function_field(field)
    return DiffModule(exact_linalg.matrix(expressions.parse_matrix(rows, field), K), field)


def gaussian_matrix(rows):
    """Build a matrix over QQ_I from rows of scalar strings"""
    return exact_linalg.matrix([[expressions.parse_scalar(str(entry)) for entry in row] for row in rows], QQ_I)


def rational_matrix(rows):
    return exact_linalg.matrix(rows, QQ)


def cayley(p, q, r):
    """Return (I - K)*(I + K)^-1 for the antisymmetric K with entries p, q, r above the diagonal

    The result lies in SO(3) over Q(i) whenever I + K is invertible.
    """
    zero = '0'
    K = gaussian_matrix([[zero, p, q], ['-({})'.format(p), zero, r], ['-({})'.format(q), '-({})'.format(r), zero]])
    identity = exact_linalg.identity(3, QQ_I)
    return (identity - K) * exact_linalg.inverse(identity + K)


def seeded_random():
    """Return a generator seeded from REALPV_DEFAULT_SEED"""
    return random.Random(settings.DEFAULT_SEED)


def random_function(generator, field=constants.FIELD_Q, degree=1):
    """Return a quotient of polynomials with small integer or Gaussian integer coefficients

    The denominator is monic of the given degree, so it is never zero.
    """
    K = field_tower.rational_function_field(field)
    z = K.gens[0]

    def coefficient():
        im = generator.randint(-3, 3) if field == constants.FIELD_QI else 0
        return field_tower.constant(field_tower.gaussian(generator.randint(-3, 3), im), field)

    numer = sum((coefficient() * z ** k for k in range(degree + 1)), K.zero)
    denom = z ** degree + sum((coefficient() * z ** k for k in range(degree)), K.zero)
    return numer / denom


def random_invertible(generator, n):
    """Return an invertible n x n matrix over QQ with entries in [-2, 2]"""
    while True:
        P = rational_matrix([[generator.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if exact_linalg.determinant(P):
            return P
