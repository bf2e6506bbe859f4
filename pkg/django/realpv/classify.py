"""Identify real forms end to end

Purpose:
    Two pipelines live here. The orthogonal one finds the invariant
    symmetric form of a differential module, makes it real, and names the
    real form SO(p,q) of the automorphism group of the real Picard-Vessiot
    field by the form's signature. The rank-1 one takes y' = r*y with a
    radical solution, lists the candidate fields K(t), t^m = +-u, and checks
    which of them admit an ordering extending a given ordering of Q(z).

Usage:
    - `classify_orthogonal(module, ordering)` returns an `OrthogonalReport`.
    - `compare_real_pv(rank1_analyze(r), ordering)` returns one verdict per
      candidate.
"""

import logging
from collections import namedtuple
from math import lcm

from sympy import Poly

from realpv import constants
from realpv import diffmod
from realpv import exact_linalg
from realpv import expressions
from realpv import field_tower
from realpv import forms
from realpv import loggers
from realpv.exceptions import CertificateError, ClassificationError, NotRadicalError

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)

NO_FORM_MESSAGE = "no invariant form"
NOT_UNIQUE_MESSAGE = "invariant form not unique"
DEGENERATE_MESSAGE = "degenerate form"

POLYNOMIAL_PART_MESSAGE = "not radical: polynomial part nonzero"
HIGHER_ORDER_POLE_MESSAGE = "not radical: higher-order pole"
IRRATIONAL_RESIDUE_MESSAGE = "not radical: irrational residue"

UNIQUE_REAL_FIELD_COMMENTARY = ("the real Picard-Vessiot field is unique; its differential automorphism group "
                                "is {}")
RATIONAL_SOLUTION_COMMENTARY = "rational solution: the Picard-Vessiot extension is trivial"
ISOMORPHIC_COMMENTARY = ("candidates compatible with the same ordering of K are isomorphic over K "
                         "as real Picard-Vessiot fields")


# region Orthogonal Classification

OrthogonalReport = namedtuple('OrthogonalReport', [
    'flat_dim', 'form', 'signature', 'signature_unordered', 'form_label', 'ordering', 'realify_scalar',
    'commentary',
])


def classify_orthogonal(M, ordering, bounds=None):
    """Name the real form of an orthogonal differential module by the signature of its invariant form

    Implementation Notes:
        - The invariant form is pinned down up to a scalar only; over Q(i)
          it is first made sigma-fixed, then its denominators are cleared
          and the sign is normalized under the ordering.
        - The unordered signature does not depend on either scalar.
    """
    found = diffmod.invariant_symmetric_forms(M, bounds)
    flat_dim = len(found)
    if flat_dim == 0:
        raise ClassificationError(NO_FORM_MESSAGE)
    if flat_dim > 1:
        raise ClassificationError("{} (dimension {})".format(NOT_UNIQUE_MESSAGE, flat_dim))

    form = forms.SymForm(found[0], M.field)
    realify_scalar = None
    if M.field == constants.FIELD_QI:
        realification = forms.realify(form)
        form, realify_scalar = realification.form, realification.scalar
    form = forms.clear_denominators(form)

    if not exact_linalg.determinant(form.matrix):
        raise ClassificationError(DEGENERATE_MESSAGE)
    signature = forms.normalized_signature(form, ordering)
    if signature.is_degenerate:
        raise ClassificationError(DEGENERATE_MESSAGE)

    label = signature.label
    report = OrthogonalReport(
        flat_dim=flat_dim,
        form=form,
        signature=signature,
        signature_unordered=signature.unordered,
        form_label=label,
        ordering=ordering,
        realify_scalar=realify_scalar,
        commentary=UNIQUE_REAL_FIELD_COMMENTARY.format(label),
    )
    loggers.log_classification(report)
    return report


# endregion


# region Rank 1

class Candidate(namedtuple('Candidate', ['radicand', 'constrained'])):
    """One candidate field K(t) with t^m equal to the radicand

    A constrained candidate (m even) needs the radicand positive in any
    ordering of the field.
    """

    def description(self, m):
        return "t^{} = {}".format(m, expressions.format_expression(self.radicand))


class RadicalReport(namedtuple('RadicalReport', ['r', 'm', 'u', 'candidates'])):
    """Describe the radical solutions t, t^m = +-u, of y' = r*y"""

    @property
    def is_rational(self):
        return self.m == 1

    @property
    def pv_description(self):
        if self.is_rational:
            return "K, y = {}".format(expressions.format_expression(self.u))
        sign = '±' if len(self.candidates) > 1 else ''
        return "K(t), t^{} = {}{}".format(self.m, sign, expressions.format_expression(self.u))


def residue(numerator, factor):
    """Return the rational c with numerator = c*factor', or None

    The term numerator/factor has residue numerator(a)/factor'(a) at every
    root a of the factor; it is one rational constant iff the two
    polynomials are proportional.
    """
    derivative = factor.diff()
    if numerator.degree() != derivative.degree():
        return None
    c = numerator.LC() / derivative.LC()
    if numerator != derivative * c:
        return None
    return field_tower.coerce(c, field_tower.constant_domain(constants.FIELD_Q))


def rank1_analyze(r):
    """Decide whether y' = r*y has a radical solution and list the candidate fields

    Purpose:
        y = prod(q^c_q) solves y' = r*y when r = sum(c_q*q'/q). With m the
        common denominator of the c_q, t = y has t^m = u = prod(q^(c_q*m)).
        For even m the equation t^m = -u gives a second field, generated by
        a constant multiple of a solution.
    """
    r = field_tower.lift(r, constants.FIELD_Q)
    fractions = field_tower.partial_fractions(r)
    if not fractions.polynomial.is_zero:
        raise NotRadicalError(POLYNOMIAL_PART_MESSAGE)

    residues = []
    for term in fractions.terms:
        if term.exponent > 1:
            raise NotRadicalError(HIGHER_ORDER_POLE_MESSAGE)
        c = residue(term.numerator, term.factor)
        if c is None:
            raise NotRadicalError(IRRATIONAL_RESIDUE_MESSAGE)
        residues.append((term.factor, c))

    m = lcm(*(c.denominator for _, c in residues)) if residues else 1
    one = Poly(1, field_tower.Z, domain=field_tower.constant_domain(constants.FIELD_Q))
    u = field_tower.from_numer_denom(one, one, constants.FIELD_Q)
    for factor, c in residues:
        u *= field_tower.from_numer_denom(factor, one, constants.FIELD_Q) ** (c.numerator * (m // c.denominator))

    if field_tower.derive(u) / (u * m) != r:
        raise CertificateError("u'/(m*u) ≠ r")

    if m % 2 == 0:
        candidates = [Candidate(u, True), Candidate(-u, True)]
    else:
        candidates = [Candidate(u, False)]

    report = RadicalReport(r, m, u, candidates)
    loggers.log_rank1(report)
    return report


CandidateVerdict = namedtuple('CandidateVerdict', ['candidate', 'compatible', 'sign'])
Comparison = namedtuple('Comparison', ['ordering', 'verdicts', 'commentary'])


def compare_real_pv(report, ordering):
    """Decide, per candidate, whether some ordering of K(t) extends the ordering of K

    With m even, t^m = radicand forces the radicand positive, and a positive
    radicand always admits such an extension. With m odd there is no
    constraint.
    """
    verdicts = []
    for candidate in report.candidates:
        sign = field_tower.sign_at(candidate.radicand, ordering)
        compatible = sign > 0 if candidate.constrained else True
        verdicts.append(CandidateVerdict(candidate, compatible, sign))

    compatible_count = sum(1 for verdict in verdicts if verdict.compatible)
    if report.is_rational:
        commentary = RATIONAL_SOLUTION_COMMENTARY
    elif compatible_count == 1:
        commentary = "exactly one candidate is compatible with {}".format(ordering)
    elif compatible_count:
        commentary = ISOMORPHIC_COMMENTARY
    else:
        commentary = "no candidate is compatible with {}".format(ordering)

    logger.debug("{} of {} candidates compatible with {}".format(compatible_count, len(verdicts), ordering))
    return Comparison(ordering, verdicts, commentary)

# endregion
