"""Define differential modules y' = Ay and their rational flat sections

Purpose:
    A differential module is a square matrix A over Q(z) or Q(i)(z). A
    coordinate vector v is horizontal when v' = A*v, so the columns of a
    fundamental matrix are horizontal. Linear-algebra constructions (dual,
    tensor product, symmetric square, gauge transformation) produce new
    modules, and `rational_solutions` finds every horizontal vector whose
    entries are rational functions.

Usage:
    - `DiffModule(matrix, field)` or `DiffModule.from_rows(rows, field)`.
    - `rational_solutions(B)` returns a `FlatBasis`; pass `SolverBounds`
      when the system is not Fuchsian with rational poles.
    - `invariant_symmetric_forms(M)` returns the symmetric S with
      S' + A^t*S + S*A = 0.

Implementation Notes:
    - The dual module carries -A^t, so the pairing of a horizontal vector
      of M with one of the dual is constant.
    - Tensor products use the Kronecker basis, index i*q + k for e_i ⊗ f_k.
"""

import logging
from collections import namedtuple

from sympy import Poly

from realpv import constants
from realpv import exact_linalg
from realpv import field_tower
from realpv import loggers
from realpv.exceptions import CertificateError, UnsupportedError

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)

UNSUPPORTED_POLE_MESSAGE = "unsupported: higher-order or irrational pole — supply bounds"


# region Modules

class DiffModule:
    """Represent the differential module y' = Ay over Q(z) or Q(i)(z)"""

    def __init__(self, matrix, field=None):
        if not exact_linalg.is_square(matrix):
            raise ValueError("a differential module needs a square matrix")
        if field is None:
            field = field_tower.field_of_domain(matrix.domain)
        self.field = field
        self.matrix = exact_linalg.to_function_matrix(matrix, field)

    @classmethod
    def from_rows(cls, rows, field=constants.FIELD_Q):
        K = field_tower.rational_function_field(field)
        return cls(exact_linalg.matrix(rows, K), field)

    @classmethod
    def trivial(cls, dim, field=constants.FIELD_Q):
        K = field_tower.rational_function_field(field)
        return cls(exact_linalg.zeros(dim, dim, K), field)

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def domain(self):
        return self.matrix.domain

    def __eq__(self, other):
        return isinstance(other, DiffModule) and self.field == other.field and self.matrix == other.matrix

    def __repr__(self):
        return "DiffModule(field={!r}, dim={})".format(self.field, self.dim)


def _common_field(*modules):
    return field_tower.join_fields(*(module.field for module in modules))


def dual(M):
    """Return the dual module, with matrix -A^t"""
    return DiffModule(-M.matrix.transpose(), M.field)


def tensor(M, N):
    """Return M ⊗ N, with matrix A ⊗ I + I ⊗ B"""
    field = _common_field(M, N)
    A = exact_linalg.lift_matrix(M.matrix, field)
    B = exact_linalg.lift_matrix(N.matrix, field)
    K = A.domain
    matrix = (exact_linalg.kronecker(A, exact_linalg.identity(N.dim, K))
              + exact_linalg.kronecker(exact_linalg.identity(M.dim, K), B))
    return DiffModule(matrix, field)


def sym_square(M):
    """Return the symmetric square, acting on e_i ⊙ e_j by the product rule"""
    return DiffModule(exact_linalg.sym_square_derivation_map(M.matrix), M.field)


def end_module(M):
    """Return End(M) = M ⊗ dual(M); the identity is always horizontal in it"""
    return tensor(M, dual(M))


def gauge_transform(M, T):
    """Return the module with matrix T^-1*A*T - T^-1*T'

    A horizontal vector v of M gives the horizontal vector T^-1*v of the
    result.
    """
    T = exact_linalg.to_function_matrix(T, M.field)
    T_inverse = exact_linalg.inverse(T)
    matrix = T_inverse * M.matrix * T - T_inverse * exact_linalg.derive_matrix(T)
    return DiffModule(matrix, M.field)


def is_flat(B, vector):
    """Return whether v' = B*v for a column vector given as a list"""
    v = exact_linalg.column(vector, B.domain)
    return exact_linalg.derive_matrix(v) == B * v


def identity_section(dim, field=constants.FIELD_Q):
    """Return the identity endomorphism as a vector of End(M)"""
    K = field_tower.rational_function_field(field)
    return [K.one if i == j else K.zero for i in range(dim) for j in range(dim)]


# endregion


# region Rational Solutions

FlatBasis = namedtuple('FlatBasis', ['vectors', 'complete'])


class SolverBounds:
    """Hold user-supplied bounds for `rational_solutions`

    `pole_orders` maps monic polynomials in z (`Poly` objects) to the
    largest pole order allowed along them; `degree` bounds the degree of the
    numerator once the common denominator is cleared.
    """

    def __init__(self, pole_orders=None, degree=None):
        self.pole_orders = {factor.monic(): order for factor, order in (pole_orders or {}).items()}
        self.degree = degree

    def order_for(self, factor):
        for candidate, order in self.pole_orders.items():
            if candidate.as_expr() == factor.as_expr():
                return order
        return None

    def __bool__(self):
        return bool(self.pole_orders) or self.degree is not None

    def __repr__(self):
        orders = ', '.join('{}: {}'.format(factor.as_expr(), order) for factor, order in self.pole_orders.items())
        return "SolverBounds(pole_orders={{{}}}, degree={})".format(orders, self.degree)


def residue_matrix(B, point):
    """Return lim (z - point)*B(z) as a scalar matrix"""
    field = field_tower.field_of_domain(B.domain)
    z = field_tower.variable(field)
    shift = z - field_tower.constant(point, field)
    return exact_linalg.apply(B, lambda entry: field_tower.evaluate(entry * shift, point), B.domain.domain)


def residue_at_infinity(B):
    """Return lim z*B(z) as a scalar matrix; B must vanish at infinity"""
    field = field_tower.field_of_domain(B.domain)
    domain = B.domain.domain

    def limit(entry):
        if not entry or field_tower.degree(entry) < -1:
            return domain.zero
        numer, denom = field_tower.numer_denom(entry)
        return field_tower.coerce(numer.LC(), domain) / field_tower.coerce(denom.LC(), domain)

    return exact_linalg.apply(B, limit, domain)


def _linear_root(factor, domain):
    """Return the root of a monic linear `Poly`"""
    return -field_tower.coerce(factor.nth(0), domain)


def _pole_exponent(R):
    eigenvalues = exact_linalg.integer_eigenvalues(R)
    if not eigenvalues:
        return 0
    return max(0, -min(eigenvalues))


def _unsupported(detail):
    return UnsupportedError("{} ({})".format(UNSUPPORTED_POLE_MESSAGE, detail))


def _denominator_bound(B, field, bounds):
    """Return [(factor, order)] bounding the denominator of every flat section"""
    domain = field_tower.constant_domain(field)

    common = Poly(1, field_tower.Z, domain=domain)
    for row in exact_linalg.rows(B):
        for entry in row:
            if entry:
                common = common.lcm(field_tower.numer_denom(entry)[1])

    pole_bounds = []
    seen = set()
    for factor, multiplicity in field_tower.monic_factors(common):
        seen.add(factor.as_expr())
        override = bounds.order_for(factor) if bounds else None
        if override is not None:
            pole_bounds.append((factor, override))
            continue
        if factor.degree() != 1 or multiplicity != 1:
            raise _unsupported("pole along {} of order {}".format(factor.as_expr(), multiplicity))

        point = _linear_root(factor, domain)
        pole_bounds.append((factor, _pole_exponent(residue_matrix(B, point))))

    # Overrides along factors that are not poles of B still widen the ansatz
    if bounds:
        for factor, order in bounds.pole_orders.items():
            if factor.as_expr() not in seen:
                pole_bounds.append((Poly(factor.as_expr(), field_tower.Z, domain=domain), order))

    return pole_bounds


def _numerator_bound(B, denominator_degree, bounds):
    """Return the numerator degree bound, or None when no flat section can exist"""
    if bounds and bounds.degree is not None:
        return bounds.degree

    for row in exact_linalg.rows(B):
        for entry in row:
            if entry and field_tower.degree(entry) > -1:
                raise _unsupported("pole at infinity: z*B is unbounded")

    eigenvalues = exact_linalg.integer_eigenvalues(residue_at_infinity(B))
    if not eigenvalues:
        return None
    bound = denominator_degree + max(eigenvalues)
    return bound if bound >= 0 else None


def _solve_ansatz(B, denominator, degree):
    """Return the constant coefficient vectors of P with (P/D)' = B*(P/D), deg P <= degree

    The identity is cleared to L*(P'*D - P*D') - D*(L*B)*P = 0 with L the
    common denominator of B.
    """
    K = B.domain
    ring = K.field.ring
    domain = K.domain
    z = ring.gens[0]
    d = B.shape[0]
    entries = exact_linalg.rows(B)

    common = ring.one
    for row in entries:
        for entry in row:
            if entry:
                common = common.lcm(entry.denom)
    cleared = [[(entry.numer * common.exquo(entry.denom)) if entry else ring.zero for entry in row]
               for row in entries]

    D = field_tower.from_poly(denominator, field_tower.field_of_domain(K))
    D_prime = D.diff(z)

    # One column per unknown coefficient (component k, power r)
    unknowns = [(k, r) for k in range(d) for r in range(degree + 1)]
    columns = []
    for k, r in unknowns:
        monomial = z ** r
        images = []
        for i in range(d):
            image = -D * cleared[i][k] * monomial
            if i == k:
                derivative = r * z ** (r - 1) if r else ring.zero
                image += common * (derivative * D - monomial * D_prime)
            images.append(image)
        columns.append(images)

    # Rows are indexed by (component, power of z)
    top = max((image.degree() for images in columns for image in images if image), default=0)
    system = [[domain.zero] * len(unknowns) for _ in range(d * (top + 1))]
    for c, images in enumerate(columns):
        for i, image in enumerate(images):
            for (power,), coeff in image.items():
                system[i * (top + 1) + power][c] = coeff

    kernel = exact_linalg.kernel(exact_linalg.matrix(system, domain))
    solutions = []
    for vector in kernel:
        numerators = [ring.from_dict({(r,): vector[index] for index, (k2, r) in enumerate(unknowns)
                                      if k2 == k and vector[index]})
                      for k in range(d)]
        solutions.append([K.field.new(numerator, D) for numerator in numerators])
    return solutions


def rational_solutions(B, bounds=None):
    """Return a basis of the rational vectors v with v' = B*v

    Purpose:
        Flat sections of a differential module over the base field,
        including invariant forms (through the symmetric square of the dual).

    Usage:
        `B` is a square `DomainMatrix` over Q(z) or Q(i)(z). `bounds` is an
        optional `SolverBounds`; the result is marked incomplete when it is
        given.

    Implementation Notes:
        - Every finite pole must be simple and rational (a root in the
          constants), and z*B must stay bounded at infinity, unless bounds
          cover the offending places.
        - At a pole p with residue R_p a flat section has pole order at most
          -min(integer eigenvalues of R_p). At infinity its degree is at most
          max(integer eigenvalues of lim z*B). Non-integer eigenvalues never
          contribute.
        - Every returned vector is checked against v' = B*v.
    """
    if not exact_linalg.is_square(B):
        raise ValueError("rational_solutions needs a square matrix")

    K = B.domain
    field = field_tower.field_of_domain(K)
    d = B.shape[0]
    complete = not bounds

    if exact_linalg.is_zero(B):
        vectors = [[K.one if i == j else K.zero for i in range(d)] for j in range(d)]
        return FlatBasis(vectors, complete)

    entries = exact_linalg.rows(B)
    pole_bounds = _denominator_bound(B, field, bounds)

    domain = field_tower.constant_domain(field)
    denominator = Poly(1, field_tower.Z, domain=domain)
    for factor, order in pole_bounds:
        denominator *= factor ** order

    degree = _numerator_bound(B, denominator.degree(), bounds)
    loggers.log_solver_bounds(d, pole_bounds, degree, complete)
    if degree is None:
        return FlatBasis([], complete)

    vectors = _solve_ansatz(B, denominator, degree)
    for vector in vectors:
        if not is_flat(B, vector):
            raise CertificateError("rational solution failed v' = Bv")
    return FlatBasis(vectors, complete)


def flat_sections(M, bounds=None):
    return rational_solutions(M.matrix, bounds)


# endregion


# region Invariant Forms

def invariant_form_system(M):
    """Return the matrix of sym^2(dual(M)) acting on symmetric-square coordinates"""
    return exact_linalg.sym_square_derivation_map(-M.matrix.transpose())


def invariant_symmetric_forms(M, bounds=None):
    """Return a basis of the symmetric S with S' + A^t*S + S*A = 0"""
    basis = rational_solutions(invariant_form_system(M), bounds)
    return [exact_linalg.symmetric_from_coordinates(vector, M.dim, M.domain) for vector in basis.vectors]


def is_invariant_form(M, S):
    A = M.matrix
    return exact_linalg.is_zero(exact_linalg.derive_matrix(S) + A.transpose() * S + S * A)

# endregion
