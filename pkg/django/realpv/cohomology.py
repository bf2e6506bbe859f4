"""Compute with 1-cocycles of the group {1, sigma} acting on Q(i) by conjugation

Purpose:
    A cocycle is a matrix a over Q(i) in a group G with a*sigma(a) = 1. It is
    trivial when a = h*sigma(h)^-1 for some h in G(Q(i)). This module
    validates cocycles, constructs Hilbert 90 certificates in GL and SL,
    classifies orthogonal cocycles by the signature of the twisted form,
    lifts projective cocycles of odd SO(n) and twists automorphisms.

Usage:
    - `validate(a, spec)` returns a `Cocycle` or raises.
    - Certificate searches take a seed and are deterministic given it.

Implementation Notes:
    - Every certificate is checked against its defining identity before it
      is returned; a failure raises `CertificateError`.
    - Verdicts are statements over the real closure of Q: signatures do not
      change under that extension, while norm-type obstructions do vanish.
"""

import logging
import random
from collections import namedtuple

from sympy.polys.domains import QQ, QQ_I

from realpv import constants
from realpv import exact_linalg
from realpv import field_tower
from realpv import forms
from realpv import loggers
from realpv import settings
from realpv.exceptions import (
    CertificateError, ExtendConstantsError, GroupMembershipError, LiftInconsistencyError,
    NoRescalingError, NotCocycleError, UnsupportedError,
)
from realpv.inverse_problem import GroupSpec, group_violation

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)

NOT_COCYCLE_MESSAGE = "not a cocycle: aσ(a) ≠ 1"
NOT_IN_GROUP_MESSAGE = "not in group: {}"
EXTEND_CONSTANTS_MESSAGE = "nth root of det not in ℚ(i) — extend constants"
LIFT_INCONSISTENCY_MESSAGE = "lift inconsistency: Aσ(A) ≠ 1"
NO_RESCALING_MESSAGE = "no rescaling in ℚ(i)"

# Roots of unity of Q(i)
_GAUSSIAN_ROOTS_OF_UNITY = ((1, 0), (-1, 0), (0, 1), (0, -1))


# region Types

class Cocycle(namedtuple('Cocycle', ['group', 'a'])):
    """Hold a validated cocycle; build it with `validate`"""

    @property
    def n(self):
        return self.group.n


class ProjectiveCocycle(namedtuple('ProjectiveCocycle', ['group', 'a_rep'])):
    """Hold a representative of a cocycle modulo scalar matrices"""

    @property
    def n(self):
        return self.group.n


Certificate = namedtuple('Certificate', ['h', 'g', 'attempts'])
SLCertificate = namedtuple('SLCertificate', ['g', 'needs_extension', 'gl'])
TwistedForm = namedtuple('TwistedForm', ['form', 'signature', 'base_signature', 'trivial', 'certificate'])
InjectivityVerdict = namedtuple('InjectivityVerdict', ['equivalent', 'witness', 'rescaling'])
TrivialityReport = namedtuple('TrivialityReport',
                              ['group', 'trivial', 'certificate', 'twisted', 'needs_extension', 'note'])


# endregion


# region Helpers

def _gaussian(M):
    return exact_linalg.to_gaussian(M)


def _sigma(M):
    return exact_linalg.conjugate_matrix(_gaussian(M))


def _identity(n):
    return exact_linalg.identity(n, QQ_I)


def _random_gaussian_matrix(generator, n, entry_range):
    return exact_linalg.matrix(
        [[field_tower.gaussian(generator.randint(-entry_range, entry_range),
                               generator.randint(-entry_range, entry_range))
          for _ in range(n)] for _ in range(n)],
        QQ_I)


def _check(condition, message):
    if not condition:
        raise CertificateError(message)


# endregion


# region Validation

def is_cocycle_matrix(a):
    a = _gaussian(a)
    return exact_linalg.is_square(a) and a * _sigma(a) == _identity(a.shape[0])


def validate(a, spec):
    """Return the checked cocycle of a matrix over Q(i) in a group"""
    a = _gaussian(a)
    if not exact_linalg.is_square(a):
        raise NotCocycleError("not a cocycle: matrix is not square")
    if not exact_linalg.determinant(a):
        raise NotCocycleError("not a cocycle: matrix is singular")
    if not is_cocycle_matrix(a):
        raise NotCocycleError(NOT_COCYCLE_MESSAGE)

    condition = group_violation(a, spec)
    if condition is not None:
        raise GroupMembershipError(NOT_IN_GROUP_MESSAGE.format(condition))
    return Cocycle(spec, a)


def conjugate_cocycle(c):
    """Return the cocycle sigma(a), which is also a^-1"""
    return Cocycle(c.group, _sigma(c.a))


# endregion


# region Hilbert 90

def gl_coboundary_certificate(c, seed=None):
    """Return h with a = h*sigma(h)^-1 and g = h^-1 with a = g^-1*sigma(g)

    Implementation Notes:
        - h = x + a*sigma(x) satisfies a*sigma(h) = h for every x, so any
          invertible draw is a certificate.
        - x has Gaussian-integer entries; a real x can never work for
          a = -I since then h = 0.
        - The entry range doubles after every `HILBERT90_MAX_ATTEMPTS`
          singular draws.
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    generator = random.Random(seed)
    a = c.a
    n = a.shape[0]
    entry_range = settings.HILBERT90_ENTRY_RANGE

    attempts = 0
    while True:
        attempts += 1
        x = _random_gaussian_matrix(generator, n, entry_range)
        h = x + a * _sigma(x)
        if exact_linalg.determinant(h):
            break
        if attempts % settings.HILBERT90_MAX_ATTEMPTS == 0:
            entry_range *= 2
            loggers.log_singular_draws(attempts, entry_range)

    g = exact_linalg.inverse(h)
    _check(a == h * exact_linalg.inverse(_sigma(h)), "a ≠ h·σ(h)⁻¹")
    _check(a == exact_linalg.inverse(g) * _sigma(g), "a ≠ g⁻¹·σ(g)")

    loggers.log_certificate('GL', attempts, entry_range)
    return Certificate(h, g, attempts)


def sl_coboundary_certificate(c, seed=None):
    """Return g of determinant 1 with a = g^-1*sigma(g)

    A GL certificate g is rescaled by the real matrix diag(det(g)^-1, 1, ...).
    That matrix is real exactly when det(g) is; otherwise the GL certificate
    is returned with `needs_extension` set.
    """
    gl = gl_coboundary_certificate(c, seed)
    g = gl.g
    det = exact_linalg.determinant(g)
    if field_tower.scalar_imag_part(det):
        return SLCertificate(g, True, gl)

    n = g.shape[0]
    scaling = exact_linalg.diagonal([QQ_I.one / det] + [QQ_I.one] * (n - 1), QQ_I)
    g = scaling * g
    _check(exact_linalg.determinant(g) == QQ_I.one, "det(g) ≠ 1")
    _check(c.a == exact_linalg.inverse(g) * _sigma(g), "a ≠ g⁻¹·σ(g)")

    loggers.log_certificate('SL', gl.attempts, None)
    return SLCertificate(g, False, gl)


def are_cohomologous(c1, c2, B):
    """Return whether B^-1*a1*sigma(B) = a2"""
    B = _gaussian(B)
    return exact_linalg.inverse(B) * c1.a * _sigma(B) == c2.a


def coboundary(h):
    """Return the trivial cocycle matrix h*sigma(h)^-1"""
    h = _gaussian(h)
    return h * exact_linalg.inverse(_sigma(h))


# endregion


# region Orthogonal Cocycles

_CONSTANT_ORDERING = field_tower.OrderingSpec.plus_infinity()


def twisted_form(c, seed=None):
    """Return the twisted form S_a = T^t*S*T with a = T*sigma(T)^-1 and the triviality verdict

    S_a is sigma-fixed because a lies in O(S). The cocycle is trivial over
    the real closure iff S_a and S have the same unordered signature.
    """
    if not c.group.is_orthogonal:
        raise UnsupportedError("twisted form needs an orthogonal group, got {}".format(c.group))

    certificate = gl_coboundary_certificate(c, seed)
    T = certificate.h
    S = _gaussian(c.group.form)
    twisted = T.transpose() * S * T
    _check(twisted == _sigma(twisted), "σ(S_a) ≠ S_a")

    form = exact_linalg.real_part_matrix(twisted)
    signature = forms.signature(forms.SymForm(form), _CONSTANT_ORDERING)
    base_signature = forms.signature(forms.SymForm(c.group.form), _CONSTANT_ORDERING)
    trivial = signature.unordered == base_signature.unordered
    return TwistedForm(form, signature, base_signature, trivial, certificate)


def project(c):
    """Forget the scaling of a cocycle"""
    return ProjectiveCocycle(c.group, c.a)


def _norm_polynomial(delta, n):
    """Return the coefficients (lowest first) of (X^n - delta)*(X^n - sigma(delta)) over Q"""
    trace = field_tower.scalar_real_part(delta) * 2
    norm = field_tower.scalar_real_part(delta * field_tower.scalar_conjugate(delta))
    coefficients = [QQ.zero] * (2 * n + 1)
    coefficients[0] = norm
    coefficients[n] = -trace
    coefficients[2 * n] = QQ.one
    return coefficients


def center_lift(p):
    """Lift a projective cocycle of SO(S), n odd, to a cocycle of SO(S)

    Implementation Notes:
        - mu with mu^n*det(a_rep) = 1 is searched among the Gaussian roots of
          the norm polynomial (X^n - delta)*(X^n - sigma(delta)),
          delta = det(a_rep)^-1. Without one the constants must be extended.
        - A = mu*a_rep then satisfies A*sigma(A) = 1 for valid input, since
          mu_n of the constants is trivial for odd n.
    """
    n = p.n
    if p.group.variant != constants.GROUP_SO or n % 2 == 0:
        raise UnsupportedError("center lift needs SO(S) with n odd, got {}".format(p.group))

    a_rep = _gaussian(p.a_rep)
    if exact_linalg.is_scalar_matrix(a_rep * _sigma(a_rep)) is None:
        raise NotCocycleError("not a projective cocycle: aσ(a) is not scalar")
    det = exact_linalg.determinant(a_rep)
    if not det:
        raise NotCocycleError("not a projective cocycle: matrix is singular")

    delta = QQ_I.one / det
    mu = next((root for root in field_tower.gaussian_roots(_norm_polynomial(delta, n))
               if root ** n == delta), None)
    if mu is None:
        raise ExtendConstantsError(EXTEND_CONSTANTS_MESSAGE)

    A = exact_linalg.scale(a_rep, mu)
    if A * _sigma(A) != _identity(n):
        raise LiftInconsistencyError(LIFT_INCONSISTENCY_MESSAGE)
    return validate(A, p.group)


def center_lift_injectivity_check(c1, c2, B, x):
    """Turn B with B^-1*a1*sigma(B) = x*a2, x in mu_n, into an SO witness y*B

    The rescaling y in mu_n(Q(i)) must satisfy x*y^-1*sigma(y) = 1; then
    (y*B)^-1*a1*sigma(y*B) = a2.
    """
    n = c1.n
    B = _gaussian(B)
    x = field_tower.coerce(x, QQ_I)

    condition = group_violation(B, c1.group)
    if condition is not None:
        raise GroupMembershipError(NOT_IN_GROUP_MESSAGE.format(condition))
    if x ** n != QQ_I.one:
        raise ValueError("x is not an nth root of unity")
    if exact_linalg.inverse(B) * c1.a * _sigma(B) != exact_linalg.scale(c2.a, x):
        raise LiftInconsistencyError("not a witness: B⁻¹·a₁·σ(B) ≠ x·a₂")

    for re, im in _GAUSSIAN_ROOTS_OF_UNITY:
        y = field_tower.gaussian(re, im)
        if y ** n == QQ_I.one and x * field_tower.scalar_conjugate(y) / y == QQ_I.one:
            witness = exact_linalg.scale(B, y)
            _check(are_cohomologous(c1, c2, witness), "(yB)⁻¹·a₁·σ(yB) ≠ a₂")
            return InjectivityVerdict(True, witness, y)

    raise NoRescalingError(NO_RESCALING_MESSAGE)


# endregion


# region Twisting

def twist_automorphism(c, g):
    """Return a*g*a^-1"""
    g = _gaussian(g)
    return c.a * g * exact_linalg.inverse(c.a)


# endregion


# region Triviality

def triviality_report(c, seed=None):
    """Decide triviality over the real closure, attaching certificates where they exist"""
    variant = c.group.variant

    if variant == constants.GROUP_GL:
        certificate = gl_coboundary_certificate(c, seed)
        return TrivialityReport(c.group, True, certificate.g, None, False, "Hilbert 90 certificate")

    if variant == constants.GROUP_SL:
        certificate = sl_coboundary_certificate(c, seed)
        note = "trivial over the real closure; the PV field is unique"
        return TrivialityReport(c.group, True, certificate.g, None, certificate.needs_extension, note)

    if variant == constants.GROUP_SP:
        certificate = gl_coboundary_certificate(c, seed)
        note = "trivial over the real closure; GL certificate attached"
        return TrivialityReport(c.group, True, certificate.g, None, False, note)

    if c.group.is_orthogonal:
        twisted = twisted_form(c, seed)
        note = "twisted form signature {} vs {}".format(
            list(twisted.signature.unordered), list(twisted.base_signature.unordered))
        return TrivialityReport(c.group, twisted.trivial, twisted.certificate.g, twisted, False, note)

    note = "trivial over the real closure; no constructive certificate for SU2"
    return TrivialityReport(c.group, True, None, None, False, note)

# endregion
