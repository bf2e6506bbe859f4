"""Define exact matrix operations over Q, Q(i) and their rational function fields

Purpose:
    Matrices are sympy `DomainMatrix` objects over one of the domains QQ,
    QQ_I, Q(z) or Q(i)(z) (see `realpv.field_tower`). This module adds the
    operations the differential-module and cohomology code needs on top of
    them: kernels, characteristic polynomials, integer eigenvalues,
    congruence diagonalization, Kronecker products and the two maps induced
    on symmetric squares.

Usage:
    - Build matrices with `matrix(rows, domain)`, `identity(n, domain)` or
      `diagonal(entries, domain)` and read them back with `rows(M)`.
    - Column vectors are plain lists of domain elements.

Implementation Notes:
    - Symmetric squares use the coordinates X[i][j], i <= j, in lexicographic
      order; the basis matrix of coordinate (i, j) is E_ii when i = j and
      E_ij + E_ji otherwise. Every module shares `sym_square_index`.
    - Pivot ties are broken by the lowest index everywhere.
"""

import logging
from itertools import product

from sympy import Poly, gcd
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from realpv import constants
from realpv import field_tower
from realpv.exceptions import CertificateError

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)


# region Construction

def matrix(rows, domain):
    """Build a `DomainMatrix` from rows of values convertible into `domain`"""
    rows = [[field_tower.coerce(entry, domain) for entry in row] for row in rows]
    cols = len(rows[0]) if rows else 0
    if any(len(row) != cols for row in rows):
        raise ValueError("rows of unequal length")
    return DomainMatrix(rows, (len(rows), cols), domain)


def identity(n, domain):
    return DomainMatrix.eye(n, domain).to_dense()


def zeros(n, m, domain):
    return DomainMatrix.zeros((n, m), domain).to_dense()


def diagonal(entries, domain):
    n = len(entries)
    return matrix([[entries[i] if i == j else domain.zero for j in range(n)] for i in range(n)], domain)


def unit(n, i, j, domain):
    """Return the matrix unit E_ij (zero-based indices)"""
    return matrix([[domain.one if (r, c) == (i, j) else domain.zero for c in range(n)]
                   for r in range(n)], domain)


def rows(M):
    """Return the entries of a matrix as a list of rows of domain elements"""
    n, m = M.shape
    return [[M[i, j].element for j in range(m)] for i in range(n)]


def column(vector, domain):
    return matrix([[entry] for entry in vector], domain)


def column_entries(M):
    return [row[0] for row in rows(M)]


def is_square(M):
    return M.shape[0] == M.shape[1]


def is_symmetric(M):
    return is_square(M) and M == M.transpose()


def is_zero(M):
    return all(not entry for row in rows(M) for entry in row)


def is_scalar_matrix(M):
    """Return the scalar c when M = c*I, else None"""
    entries = rows(M)
    n = M.shape[0]
    c = entries[0][0]
    for i, j in product(range(n), repeat=2):
        if entries[i][j] != (c if i == j else M.domain.zero):
            return None
    return c


# endregion


# region Entrywise Maps

def apply(M, function, domain=None):
    return M.applyfunc(function, domain or M.domain)


def scale(M, c):
    return apply(M, lambda entry: entry * c)


def conjugate_matrix(M):
    """Apply sigma entrywise to a matrix over QQ_I or Q(i)(z)"""
    if M.domain == QQ_I:
        return apply(M, field_tower.scalar_conjugate)
    if M.domain == QQ:
        return M
    return apply(M, field_tower.conjugate)


def derive_matrix(M):
    return apply(M, field_tower.derive)


def lift_matrix(M, field):
    """Move a matrix of rational functions into the field with the given tag"""
    K = field_tower.rational_function_field(field)
    if M.domain == K:
        return M
    return apply(M, lambda entry: field_tower.lift(entry, field), K)


def constant_matrix(M, field):
    """Embed a scalar matrix over QQ or QQ_I into Q(z) or Q(i)(z)"""
    K = field_tower.rational_function_field(field)
    return apply(M, lambda entry: field_tower.constant(entry, field), K)


def to_function_matrix(M, field):
    """Return a scalar or rational function matrix as a matrix over the given rational function field"""
    if M.domain in (QQ, QQ_I):
        return constant_matrix(M, field)
    return lift_matrix(M, field)


def scalar_matrix(M):
    """Return a matrix of constant rational functions as a matrix over QQ or QQ_I"""
    domain = M.domain.domain
    return apply(M, field_tower.constant_value, domain)


def to_gaussian(M):
    """Return a scalar matrix over QQ_I"""
    return M if M.domain == QQ_I else M.convert_to(QQ_I)


def real_part_matrix(M):
    if M.domain == QQ:
        return M
    return apply(M, field_tower.scalar_real_part, QQ)


# endregion


# region Determinants, Inverses and Products

def determinant(M):
    return M.det()


def inverse(M):
    """Return the inverse of a square matrix, raising ValueError when singular"""
    if not determinant(M):
        raise ValueError("matrix is singular")
    return M.inv()


def kronecker(A, B):
    """Return the Kronecker product with (A ⊗ B)[i*p + k][j*q + l] = A[i][j]*B[k][l]"""
    n, m = A.shape
    p, q = B.shape
    a, b = rows(A), rows(B)
    entries = [[a[i][j] * b[k][l] for j in range(m) for l in range(q)]
               for i in range(n) for k in range(p)]
    return DomainMatrix(entries, (n * p, m * q), A.domain)


def trace(M):
    entries = rows(M)
    total = M.domain.zero
    for i in range(M.shape[0]):
        total += entries[i][i]
    return total


def bracket(A, B):
    return A * B - B * A


# endregion


# region Kernels and Eigenvalues

def kernel(M):
    """Return a basis of the right kernel of M as a list of column vectors

    The basis is read off the reduced row echelon form: one vector per
    non-pivot column, carrying a 1 in that column.
    """
    n, m = M.shape
    domain = M.domain
    if n == 0:
        return [[domain.one if i == j else domain.zero for i in range(m)] for j in range(m)]

    echelon, pivots = M.rref()
    echelon = rows(echelon)
    basis = []
    for free in (j for j in range(m) if j not in pivots):
        vector = [domain.zero] * m
        vector[free] = domain.one
        for row, pivot in enumerate(pivots):
            vector[pivot] = -echelon[row][free]
        basis.append(vector)
    return basis


def rank(M):
    return M.rank()


def charpoly(M):
    """Return the monic characteristic polynomial of a scalar matrix as a `Poly` in X"""
    if not is_square(M):
        raise ValueError("charpoly needs a square matrix")
    return Poly(M.charpoly(), field_tower.X, domain=M.domain)


def _integer_roots(poly):
    roots = set()
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            root = -b / a
            if root.is_Integer:
                roots.add(int(root))
    return roots


def integer_eigenvalues(M):
    """Return the sorted integer eigenvalues of a matrix over QQ or QQ_I

    Over QQ_I an integer t is an eigenvalue iff it is a common root of the
    real and imaginary parts of the characteristic polynomial.
    """
    if not is_square(M):
        raise ValueError("integer_eigenvalues needs a square matrix")
    coeffs = M.charpoly()
    if M.domain == QQ_I:
        real = Poly([field_tower.scalar_real_part(c) for c in coeffs], field_tower.X, domain=QQ)
        imag = Poly([field_tower.scalar_imag_part(c) for c in coeffs], field_tower.X, domain=QQ)
        poly = real if imag.is_zero else gcd(real, imag)
    else:
        poly = Poly(coeffs, field_tower.X, domain=QQ)

    if poly.degree() < 1:
        return []
    return sorted(_integer_roots(poly))


# endregion


# region Congruence Diagonalization

def congruence_diagonalize(S):
    """Return (D, T) with T^t*S*T = diag(D) for a symmetric matrix S over a field

    Purpose:
        Signatures of symmetric forms are read off the diagonal entries.

    Implementation Notes:
        - A zero pivot is replaced by a later nonzero diagonal entry (lowest
          index first). When the whole remaining diagonal vanishes but an
          off-diagonal entry W[k][j] = b does not, the basis vector e_k is
          replaced by e_k + e_j; the new pivot is 2b and the eliminated
          entry becomes -b/2, so the hyperbolic plane contributes one entry
          of each sign.
        - The identity T^t*S*T = diag(D) is checked before returning.
    """
    if not is_symmetric(S):
        raise ValueError("congruence_diagonalize needs a symmetric matrix")

    domain = S.domain
    n = S.shape[0]
    W = rows(S)
    T = rows(identity(n, domain))

    def swap(k, j):
        W[k], W[j] = W[j], W[k]
        for row in W:
            row[k], row[j] = row[j], row[k]
        for row in T:
            row[k], row[j] = row[j], row[k]

    def add_to(k, j, factor):
        """Replace e_k by e_k + factor*e_j"""
        for c in range(n):
            W[k][c] += factor * W[j][c]
        for r in range(n):
            W[r][k] += factor * W[r][j]
        for r in range(n):
            T[r][k] += factor * T[r][j]

    for k in range(n):
        if not W[k][k]:
            later = next((j for j in range(k + 1, n) if W[j][j]), None)
            if later is not None:
                swap(k, later)
            else:
                partner = next((j for j in range(k + 1, n) if W[k][j]), None)
                if partner is None:
                    continue
                add_to(k, partner, domain.one)

        pivot = W[k][k]
        for j in range(k + 1, n):
            if W[j][k]:
                add_to(j, k, -W[j][k] / pivot)

    D = [W[k][k] for k in range(n)]
    T = DomainMatrix(T, (n, n), domain)
    if T.transpose() * S * T != diagonal(D, domain):
        raise CertificateError("congruence diagonalization failed its check")
    return D, T


# endregion


# region Symmetric Squares

def sym_square_index(d):
    """Return the coordinate pairs (i, j), i <= j, in lexicographic order"""
    return [(i, j) for i in range(d) for j in range(i, d)]


def sym_square_dimension(d):
    return d * (d + 1) // 2


def symmetric_basis_matrix(d, i, j, domain):
    """Return E_ii, or E_ij + E_ji for i != j"""
    basis = unit(d, i, j, domain)
    if i != j:
        basis = basis + unit(d, j, i, domain)
    return basis


def sym_square_coordinates(X):
    """Return the coordinates of a symmetric matrix in the symmetric-square basis"""
    entries = rows(X)
    return [entries[i][j] for i, j in sym_square_index(X.shape[0])]


def symmetric_from_coordinates(vector, d, domain):
    """Return the symmetric matrix with the given symmetric-square coordinates"""
    entries = [[domain.zero] * d for _ in range(d)]
    for (i, j), value in zip(sym_square_index(d), vector):
        entries[i][j] = value
        entries[j][i] = value
    return DomainMatrix(entries, (d, d), domain)


def _induced_map(d, domain, action):
    index = sym_square_index(d)
    images = [sym_square_coordinates(action(symmetric_basis_matrix(d, k, l, domain)))
              for k, l in index]

    # The images are columns
    size = len(index)
    return DomainMatrix([[images[c][r] for c in range(size)] for r in range(size)], (size, size), domain)


def sym_square_basis_map(g):
    """Return the matrix of X -> g*X*g^t on the symmetric-square coordinates

    This is the group action on e_i ⊙ e_j, and sym_square_basis_map(A*B)
    = sym_square_basis_map(A) * sym_square_basis_map(B).
    """
    gt = g.transpose()
    return _induced_map(g.shape[0], g.domain, lambda X: g * X * gt)


def sym_square_derivation_map(N):
    """Return the matrix of X -> N*X + X*N^t on the symmetric-square coordinates

    This is the action of a derivation (product rule on e_i ⊙ e_j).
    """
    Nt = N.transpose()
    return _induced_map(N.shape[0], N.domain, lambda X: N * X + X * Nt)

# endregion
