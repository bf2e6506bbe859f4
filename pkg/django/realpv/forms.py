"""Define symmetric bilinear forms over Q(z) and their signatures

A form is only pinned down up to a scalar by the differential module it
comes from, so two signatures are reported: the ordered one, normalized so
that the first nonzero diagonal entry of the diagonalization is positive,
and the unordered pair, which does not depend on the scalar at all.
"""

import logging
from collections import namedtuple

from sympy.polys.domains import QQ, QQ_I

from realpv import constants
from realpv import exact_linalg
from realpv import field_tower
from realpv.exceptions import CertificateError, NotSemistableError

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)

NOT_SEMISTABLE_MESSAGE = "not conjugation-semistable"


# region Types

class SymForm:
    """Hold a symmetric matrix over Q(z) or Q(i)(z)"""

    def __init__(self, matrix, field=None):
        if field is None:
            field = field_tower.field_of_domain(matrix.domain)
        matrix = exact_linalg.to_function_matrix(matrix, field)
        if not exact_linalg.is_symmetric(matrix):
            raise ValueError("a symmetric form needs a symmetric matrix")
        self.matrix = matrix
        self.field = field

    @property
    def dim(self):
        return self.matrix.shape[0]

    def scaled(self, c):
        return SymForm(exact_linalg.scale(self.matrix, c), self.field)

    def conjugate(self):
        return SymForm(exact_linalg.conjugate_matrix(self.matrix), self.field)

    def is_real(self):
        return self.field == constants.FIELD_Q or self.matrix == exact_linalg.conjugate_matrix(self.matrix)

    def __eq__(self, other):
        return isinstance(other, SymForm) and self.field == other.field and self.matrix == other.matrix

    def __repr__(self):
        return "SymForm(field={!r}, dim={})".format(self.field, self.dim)


class Signature(namedtuple('Signature', ['plus', 'minus', 'zero'])):
    """Count positive, negative and zero diagonal entries of a diagonalized form"""

    @property
    def dim(self):
        return self.plus + self.minus + self.zero

    @property
    def ordered(self):
        return [self.plus, self.minus]

    @property
    def unordered(self):
        """Return the pair {plus, minus} as a tuple, larger count first"""
        return tuple(sorted((self.plus, self.minus), reverse=True))

    @property
    def is_degenerate(self):
        return self.zero > 0

    def swapped(self):
        return Signature(self.minus, self.plus, self.zero)

    @property
    def label(self):
        return "SO({},{})".format(self.plus, self.minus)


# endregion


# region Signatures

def _as_form(F):
    return F if isinstance(F, SymForm) else SymForm(F)


def _real_matrix(F):
    """Return the matrix of a form as a matrix over Q(z)"""
    F = _as_form(F)
    if F.field == constants.FIELD_QI and not F.is_real():
        raise ValueError("signature needs a form over Q(z)")
    return exact_linalg.lift_matrix(F.matrix, constants.FIELD_Q)


def diagonal_signs(F, ordering):
    """Return the signs of the congruence-diagonalized form under an ordering"""
    D, _ = exact_linalg.congruence_diagonalize(_real_matrix(F))
    return [field_tower.sign_at(entry, ordering) for entry in D]


def _count(signs):
    return Signature(signs.count(1), signs.count(-1), signs.count(0))


def signature(F, ordering):
    """Return the signature of a symmetric form over Q(z) under an ordering"""
    return _count(diagonal_signs(F, ordering))


def normalized_signature(F, ordering):
    """Return the signature of c*F with c chosen so the first nonzero diagonal sign is +1"""
    signs = diagonal_signs(F, ordering)
    result = _count(signs)
    leading = next((sign for sign in signs if sign), 1)
    return result if leading > 0 else result.swapped()


# endregion


# region Proportionality and Realification

def is_proportional(F, G):
    """Return the unique c with G = c*F, or None"""
    F, G = _as_form(F), _as_form(G)
    if F.dim != G.dim:
        raise ValueError("forms of different dimensions")

    field = field_tower.join_fields(F.field, G.field)
    f = exact_linalg.lift_matrix(F.matrix, field)
    g = exact_linalg.lift_matrix(G.matrix, field)

    f_entries, g_entries = exact_linalg.rows(f), exact_linalg.rows(g)
    pivot = next(((i, j) for i, row in enumerate(f_entries) for j, entry in enumerate(row) if entry), None)
    if pivot is None:
        return None

    i, j = pivot
    c = g_entries[i][j] / f_entries[i][j]
    return c if exact_linalg.scale(f, c) == g else None


Realification = namedtuple('Realification', ['form', 'scalar'])


def realify(F):
    """Return (a*F over Q(z), a) with sigma(a*F) = a*F

    Purpose:
        An invariant form found over Q(i)(z) is unique up to a scalar, so
        sigma(F) = c*F, and c*sigma(c) = 1 follows. Then a = 1 + c (or 2i
        when c = -1) satisfies sigma(a*F) = a*F.
    """
    F = _as_form(F)
    F = SymForm(exact_linalg.lift_matrix(F.matrix, constants.FIELD_QI), constants.FIELD_QI)

    c = is_proportional(F, F.conjugate())
    if c is None:
        raise NotSemistableError(NOT_SEMISTABLE_MESSAGE)

    K = F.matrix.domain
    minus_one = -K.one
    if c != minus_one:
        a = K.one + c
    else:
        a = field_tower.constant(field_tower.imaginary_unit(), constants.FIELD_QI) * (K.one - c)

    scaled = F.scaled(a)
    if not scaled.is_real():
        raise CertificateError("realified form is not sigma-fixed")
    real = SymForm(exact_linalg.lift_matrix(scaled.matrix, constants.FIELD_Q), constants.FIELD_Q)
    return Realification(real, a)


def clear_denominators(F):
    """Return the form multiplied by the lcm of its entry denominators"""
    F = _as_form(F)
    ring = F.matrix.domain.field.ring
    common = ring.one
    for row in exact_linalg.rows(F.matrix):
        for entry in row:
            if entry:
                common = common.lcm(entry.denom)
    return F.scaled(F.matrix.domain.field.new(common, ring.one))


def constant_form(rows, field=constants.FIELD_Q):
    """Build a form from rows of QQ (or QQ_I) values"""
    domain = QQ_I if field == constants.FIELD_QI else QQ
    return SymForm(exact_linalg.matrix(rows, domain), field)

# endregion
