"""Describe matrix groups and build equations whose matrices lie in their Lie algebras

Purpose:
    A `GroupSpec` names one of the supported groups GL(n), SL(n), Sp(n)
    (n even), SO(S), O(S) or the realified SU(2). For each we know the
    defining conditions of the group and of its Lie algebra, a basis of the
    Lie algebra, and how to build a "general" equation A(z) = sum f_j*B_j
    with A(z) in the Lie algebra over Q(z).

Implementation Notes:
    - SO(S) and O(S) take S nondegenerate symmetric over Q; their Lie basis
      is S^-1*(E_ji - E_ij) over the index pairs (i, i + k mod n), k = 1, 2, ...
    - Sp(n) uses J = [[0, I], [-I, 0]].
    - SU(2) acts on the quaternions by left multiplication in the basis
      (1, i, j, k); only the Lie condition and the span are materialized.
"""

import logging
import random
from collections import namedtuple

from sympy.polys.domains import QQ, QQ_I

from realpv import constants
from realpv import exact_linalg
from realpv import field_tower
from realpv.diffmod import DiffModule
from realpv.exceptions import CoefficientCountError

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)

LieVerdict = namedtuple('LieVerdict', ['member', 'condition'])

# Left multiplication by i, j and k on the quaternion basis (1, i, j, k)
_QUATERNION_UNITS = (
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
    [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
)


# region Group Specifications

class GroupSpec:
    """Describe one of the supported linear algebraic groups"""

    def __init__(self, variant, n, form=None):
        if variant not in constants.GROUP_TYPES:
            raise ValueError("unknown group type {!r}".format(variant))
        if n < 1:
            raise ValueError("group size must be positive")
        if variant == constants.GROUP_SP and n % 2:
            raise ValueError("Sp needs an even size, got {}".format(n))
        if variant == constants.GROUP_SU2 and n != constants.SU2_SIZE:
            raise ValueError("SU2 is realified as 4x4 matrices")

        if variant in (constants.GROUP_SO, constants.GROUP_O):
            if form is None:
                form = exact_linalg.identity(n, QQ)
            if form.shape != (n, n) or not exact_linalg.is_symmetric(form):
                raise ValueError("the form of {} must be a symmetric {}x{} matrix".format(variant, n, n))
            if not exact_linalg.determinant(form):
                raise ValueError("the form of {} must be nondegenerate".format(variant))

        self.variant = variant
        self.n = n
        self.form = form

    # Constructors

    @classmethod
    def gl(cls, n):
        return cls(constants.GROUP_GL, n)

    @classmethod
    def sl(cls, n):
        return cls(constants.GROUP_SL, n)

    @classmethod
    def sp(cls, n):
        return cls(constants.GROUP_SP, n)

    @classmethod
    def so(cls, form):
        form = _rational_form(form)
        return cls(constants.GROUP_SO, form.shape[0], form)

    @classmethod
    def o(cls, form):
        form = _rational_form(form)
        return cls(constants.GROUP_O, form.shape[0], form)

    @classmethod
    def su2(cls):
        return cls(constants.GROUP_SU2, constants.SU2_SIZE)

    # Properties

    @property
    def is_orthogonal(self):
        return self.variant in (constants.GROUP_SO, constants.GROUP_O)

    @property
    def symplectic_form(self):
        return symplectic_form(self.n, QQ)

    @property
    def lie_dimension(self):
        n = self.n
        return {
            constants.GROUP_GL: n * n,
            constants.GROUP_SL: n * n - 1,
            constants.GROUP_SP: (n // 2) * (n + 1),
            constants.GROUP_SO: n * (n - 1) // 2,
            constants.GROUP_O: n * (n - 1) // 2,
            constants.GROUP_SU2: 3,
        }[self.variant]

    def __str__(self):
        if self.is_orthogonal:
            diagonal = [self.form[i, i].element for i in range(self.n)]
            if self.form == exact_linalg.diagonal(diagonal, QQ):
                return "{}(diag({}))".format(self.variant, ', '.join(str(c) for c in diagonal))
            return "{}(S)".format(self.variant)
        if self.variant == constants.GROUP_SU2:
            return "SU2"
        return "{}({})".format(self.variant, self.n)

    def __repr__(self):
        return "GroupSpec({})".format(self)


def _rational_form(form):
    if isinstance(form, (list, tuple)):
        if form and not isinstance(form[0], (list, tuple)):
            return exact_linalg.diagonal(list(form), QQ)
        return exact_linalg.matrix(form, QQ)
    return form


def symplectic_form(n, domain):
    """Return J = [[0, I], [-I, 0]] of size n"""
    m = n // 2
    return exact_linalg.matrix([[domain.one if j == i + m else -domain.one if i == j + m else domain.zero
                                 for j in range(n)] for i in range(n)], domain)


def quaternion_units(domain=QQ):
    return [exact_linalg.matrix(rows, domain) for rows in _QUATERNION_UNITS]


# endregion


# region Lie Bases

def _orthogonal_pairs(n):
    """Yield the index pairs (i, i + k mod n) without repeating an unordered pair"""
    for k in range(1, n // 2 + 1):
        for i in range(n):
            if 2 * k == n and i >= k:
                continue
            yield i, (i + k) % n


def lie_basis(spec):
    """Return a basis over Q of the Lie algebra of a group, as matrices over QQ

    Purpose:
        Equations y' = Ay whose matrix lies in the Lie algebra have their
        differential Galois group inside the group.
    """
    n = spec.n
    unit = lambda i, j: exact_linalg.unit(n, i, j, QQ)

    if spec.variant == constants.GROUP_GL:
        return [unit(i, j) for i in range(n) for j in range(n)]

    if spec.variant == constants.GROUP_SL:
        off_diagonal = [unit(i, j) for i in range(n) for j in range(n) if i != j]
        diagonal = [unit(i, i) - unit(i + 1, i + 1) for i in range(n - 1)]
        return off_diagonal + diagonal

    if spec.is_orthogonal:
        inverse = exact_linalg.inverse(spec.form)
        return [inverse * (unit(j, i) - unit(i, j)) for i, j in _orthogonal_pairs(n)]

    if spec.variant == constants.GROUP_SP:
        m = n // 2
        basis = [unit(i, j) - unit(m + j, m + i) for i in range(m) for j in range(m)]
        for i in range(m):
            for j in range(i, m):
                upper = unit(i, m + j)
                lower = unit(m + i, j)
                if i != j:
                    upper = upper + unit(j, m + i)
                    lower = lower + unit(m + j, i)
                basis.extend([upper, lower])
        return basis

    return quaternion_units(QQ)


def _span_coefficients(A, basis):
    """Return [c_j] with A = sum c_j*B_j over the domain of A, or None"""
    domain = A.domain
    if domain in (QQ, QQ_I):
        basis = [B.convert_to(domain) for B in basis]
    else:
        basis = [exact_linalg.to_function_matrix(B, field_tower.field_of_domain(domain)) for B in basis]

    # Columns: vec(B_1), ..., vec(B_r), vec(A)
    vectors = [[entry for row in exact_linalg.rows(M) for entry in row] for M in basis + [A]]
    system = exact_linalg.matrix([list(row) for row in zip(*vectors)], domain)
    for vector in exact_linalg.kernel(system):
        if vector[-1]:
            return [-c / vector[-1] for c in vector[:-1]]
    return None


# endregion


# region Membership

def _function_matrix(M):
    return exact_linalg.to_function_matrix(M, field_tower.field_of_domain(M.domain))


def lie_violation(A, spec):
    """Return the Lie algebra condition that A violates, or None"""
    n = spec.n
    if A.shape != (n, n):
        return "size {}x{} ≠ {}x{}".format(A.shape[0], A.shape[1], n, n)

    A = _function_matrix(A)
    field = field_tower.field_of_domain(A.domain)

    if spec.variant == constants.GROUP_GL:
        return None
    if spec.variant == constants.GROUP_SL:
        return None if not exact_linalg.trace(A) else "trace ≠ 0"
    if spec.is_orthogonal:
        S = exact_linalg.constant_matrix(spec.form, field)
        return None if exact_linalg.is_zero(A.transpose() * S + S * A) else "BᵀS + SB ≠ 0"
    if spec.variant == constants.GROUP_SP:
        J = exact_linalg.constant_matrix(spec.symplectic_form, field)
        return None if exact_linalg.is_zero(A.transpose() * J + J * A) else "BᵀJ + JB ≠ 0"

    basis = [exact_linalg.constant_matrix(B, field) for B in quaternion_units()]
    if _span_coefficients(A, basis) is None:
        return "not in span(B_i, B_j, B_k)"
    return None


def lie_membership(A, spec):
    """Decide whether A(z) lies in the Lie algebra of the group over Q(z)"""
    condition = lie_violation(A, spec)
    return LieVerdict(condition is None, condition)


def group_violation(a, spec):
    """Return the defining condition of the group that a scalar matrix violates, or None"""
    n = spec.n
    if a.shape != (n, n):
        return "size {}x{} ≠ {}x{}".format(a.shape[0], a.shape[1], n, n)

    a = exact_linalg.to_gaussian(a)
    identity = exact_linalg.identity(n, QQ_I)
    det = exact_linalg.determinant(a)

    if not det:
        return "det = 0"
    if spec.variant in (constants.GROUP_SL, constants.GROUP_SO) and det != QQ_I.one:
        return "det ≠ 1"
    if spec.is_orthogonal:
        S = exact_linalg.to_gaussian(spec.form)
        if a.transpose() * S * a != S:
            return "aᵀSa ≠ S"
    if spec.variant == constants.GROUP_SP:
        J = symplectic_form(n, QQ_I)
        if a.transpose() * J * a != J:
            return "aᵀJa ≠ J"
    if spec.variant == constants.GROUP_SU2:
        span = [identity] + quaternion_units(QQ_I)
        if _span_coefficients(a, span) is None:
            return "not a quaternion"
        if a.transpose() * a != identity:
            return "quaternion norm ≠ 1"
    return None


# endregion


# region Equations

def default_coefficients(count, seed=None, field=constants.FIELD_Q):
    """Return f_j = c_j/(z - j), j = 1..count, with c_j = 1 or seeded nonzero integers in [-3, 3]"""
    z = field_tower.variable(field)
    generator = random.Random(seed) if seed is not None else None
    coefficients = []
    for j in range(1, count + 1):
        c = 1 if generator is None else generator.choice([-3, -2, -1, 1, 2, 3])
        coefficients.append(field_tower.constant(c, field) / (z - field_tower.constant(j, field)))
    return coefficients


def generate_equation(spec, coeffs=None, seed=None):
    """Return the module with A(z) = sum f_j*B_j over the Lie basis of a group

    `coeffs` defaults to `default_coefficients`; its field decides the base
    field of the result.
    """
    basis = lie_basis(spec)
    if coeffs is None:
        coeffs = default_coefficients(len(basis), seed)
    if len(coeffs) != len(basis):
        raise CoefficientCountError("coefficient count mismatch: {} needs {} coefficients, got {}".format(
            spec, len(basis), len(coeffs)))

    field = field_tower.join_fields(*(field_tower.field_of(c) for c in coeffs)) if coeffs else constants.FIELD_Q
    K = field_tower.rational_function_field(field)
    A = exact_linalg.zeros(spec.n, spec.n, K)
    for f, B in zip(coeffs, basis):
        A = A + exact_linalg.scale(exact_linalg.constant_matrix(B, field), field_tower.lift(f, field))

    module = DiffModule(A, field)
    logger.debug("generated {}-dimensional equation for {}".format(module.dim, spec))
    return module

# endregion
