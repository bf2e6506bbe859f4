"""Define exact arithmetic for Q, Q(i), polynomials and rational functions in z

Purpose:
    Every other module computes with the elements defined here: constants in
    Q or Q(i), polynomials over them, and rational functions of the
    differentiation variable z. The rational function fields carry the
    derivation d/dz and the conjugation sigma (i -> -i). The field Q(z) is
    ordered by one of four families of orderings, and signs of elements are
    computed with respect to them.

Usage:
    - `rational_function_field(tag)` returns the sympy domain K = Q(z) or
      K(i) = Q(i)(z); its elements (sympy `FracElement`s) are the RatFunc
      values used everywhere. They are immutable and always stored reduced.
    - Polynomials exchanged with callers are `sympy.Poly` objects in the
      generator `X` (for polynomials in an auxiliary variable) or `z`.
    - Scalars are elements of the sympy domains `QQ` and `QQ_I`.

Implementation Notes:
    - Statements computed here (signs, Sturm counts, exact identities) do not
      change when the constants are extended to a real closure, so results
      are read as statements over the real closure.
    - Denominators are presented monic by `numer_denom`; sympy's internal
      normalization (primitive integer denominator) is never exposed.
"""

import logging
from collections import namedtuple
from functools import lru_cache

from sympy import Poly, Rational, Symbol, integer_nthroot
from sympy.polys.domains import QQ, QQ_I

from realpv import constants
from realpv import settings
from realpv.exceptions import UnsupportedError

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)

Z = Symbol(constants.VARIABLE_NAME)
X = Symbol('X')

_CONSTANT_DOMAINS = {
    constants.FIELD_Q: QQ,
    constants.FIELD_QI: QQ_I,
}


# region Fields

@lru_cache(maxsize=None)
def rational_function_field(field):
    """Return the sympy domain Q(z) or Q(i)(z) for a field tag"""
    return constant_domain(field).frac_field(Z)


def constant_domain(field):
    try:
        return _CONSTANT_DOMAINS[field]
    except KeyError:
        raise ValueError("unknown field tag {!r}".format(field))


def field_of(f):
    """Return the field tag of a rational function"""
    return constants.FIELD_QI if f.field.domain == QQ_I else constants.FIELD_Q


def field_of_domain(domain):
    """Return the field tag of QQ, QQ_I or one of the rational function fields"""
    if domain == QQ_I or getattr(domain, "domain", None) == QQ_I:
        return constants.FIELD_QI
    return constants.FIELD_Q


def join_fields(*fields):
    return constants.FIELD_QI if constants.FIELD_QI in fields else constants.FIELD_Q


def variable(field=constants.FIELD_Q):
    return rational_function_field(field).gens[0]


def constant(value, field=constants.FIELD_Q):
    """Embed an int, a QQ element or a QQ_I element into a rational function field"""
    K = rational_function_field(field)
    return K.field.ground_new(lift_scalar(value, field))


def gaussian(re, im=0):
    """Return re + im*i as a QQ_I element"""
    return QQ_I(QQ.convert(re), QQ.convert(im))


def imaginary_unit():
    return gaussian(0, 1)


def lift(f, field):
    """Move a rational function into the field with the given tag

    Moving Q(i)(z) -> Q(z) is only allowed for real functions (see `to_real`).
    """
    if field_of(f) == field:
        return f
    if field == constants.FIELD_Q:
        return to_real(f)
    K = rational_function_field(field)
    numer = f.numer.set_ring(K.field.ring)
    denom = f.denom.set_ring(K.field.ring)
    return K.field.new(numer, denom)


def coerce(value, domain):
    """Convert an int, a QQ element or a QQ_I element into QQ, QQ_I or another domain"""
    if domain.of_type(value):
        return value
    if domain == QQ and QQ_I.of_type(value):
        if value.y:
            raise ValueError("{} is not rational".format(value))
        return value.x
    if domain in (QQ, QQ_I):
        for source in (QQ, QQ_I):
            if source.of_type(value):
                return domain.convert_from(value, source)
    return domain.convert(value)


def lift_scalar(c, field):
    return coerce(c, constant_domain(field))


# endregion


# region Gaussian parts

def scalar_conjugate(c):
    """Apply sigma to a QQ or QQ_I element"""
    if QQ_I.of_type(c):
        return QQ_I(c.x, -c.y)
    return c


def scalar_real_part(c):
    return c.x if QQ_I.of_type(c) else c


def scalar_imag_part(c):
    return c.y if QQ_I.of_type(c) else QQ.zero


def _map_coefficients(p, function, ring):
    return ring.from_dict({monom: function(coeff) for monom, coeff in p.items()})


def real_part(f):
    """Return (f + sigma(f))/2 as an element of Q(z)"""
    return _gaussian_part(f, scalar_real_part)


def imag_part(f):
    """Return (f - sigma(f))/(2i) as an element of Q(z)"""
    return _gaussian_part(f, scalar_imag_part)


def _gaussian_part(f, part):
    if field_of(f) == constants.FIELD_Q:
        return f if part is scalar_real_part else rational_function_field(constants.FIELD_Q).zero

    # Make the denominator real by multiplying with its conjugate
    denom = f.denom * _map_coefficients(f.denom, scalar_conjugate, f.denom.ring)
    numer = f.numer * _map_coefficients(f.denom, scalar_conjugate, f.denom.ring)

    KQ = rational_function_field(constants.FIELD_Q)
    ring = KQ.field.ring
    return KQ.field.new(_map_coefficients(numer, part, ring),
                        _map_coefficients(denom, scalar_real_part, ring))


def is_real(f):
    return field_of(f) == constants.FIELD_Q or not imag_part(f)


def to_real(f):
    """Return f as an element of Q(z), failing if it has an imaginary part"""
    if field_of(f) == constants.FIELD_Q:
        return f
    if imag_part(f):
        raise ValueError("{} is not sigma-fixed".format(to_expression_hint(f)))
    return real_part(f)


def to_expression_hint(f):
    return str(f.as_expr())


# endregion


# region Derivation and Conjugation

def derive(f):
    """Return df/dz, fully reduced

    Quotient rule on the numerator and denominator polynomials; the
    frac-field `diff` rejects non-polynomial elements over QQ_I.
    """
    z = f.field.ring.gens[0]
    numer, denom = f.numer, f.denom
    return f.field.new(numer.diff(z) * denom - numer * denom.diff(z), denom ** 2)


def conjugate(f):
    """Apply sigma coefficientwise (the identity on Q(z))"""
    if field_of(f) == constants.FIELD_Q:
        return f
    ring = f.field.ring
    return f.field.new(_map_coefficients(f.numer, scalar_conjugate, ring),
                       _map_coefficients(f.denom, scalar_conjugate, ring))


# endregion


# region Numerators, Denominators and Evaluation

def to_poly(p, gen=Z):
    """Convert a sympy `PolyElement` to a `Poly` in `gen`"""
    return Poly(p.as_expr().subs(Z, gen), gen, domain=p.ring.domain)


def from_poly(poly, field):
    """Convert a `Poly` in z to the polynomial ring underlying a field"""
    ring = rational_function_field(field).field.ring
    return ring.from_dict({monom: lift_scalar(coeff, field)
                           for monom, coeff in poly.as_dict(native=True).items()})


def numer_denom(f):
    """Return (numerator, denominator) as `Poly`s in z with a monic denominator"""
    numer, denom = to_poly(f.numer), to_poly(f.denom)
    return numer.quo_ground(f.denom.LC), denom.monic()


def from_numer_denom(numer, denom, field):
    """Build the reduced rational function numer/denom from two `Poly`s in z"""
    K = rational_function_field(field)
    return K.field.new(from_poly(numer, field), from_poly(denom, field))


def is_constant(f):
    return f.numer.is_ground and f.denom.is_ground


def constant_value(f):
    """Return the scalar of a constant rational function"""
    if not is_constant(f):
        raise ValueError("{} is not constant".format(to_expression_hint(f)))
    domain = f.field.domain
    return domain.quo(f.numer.LC if f.numer else domain.zero, f.denom.LC)


def evaluate(f, point):
    """Evaluate f at a scalar point that is not a pole"""
    domain = f.field.domain
    point = coerce(point, domain)
    x = f.field.ring.gens[0]
    denom = f.denom.evaluate(x, point)
    if not denom:
        raise ZeroDivisionError("pole at {}".format(point))
    return domain.quo(f.numer.evaluate(x, point), denom)


def degree(f):
    """Return deg(numerator) - deg(denominator); None for zero"""
    if not f:
        return None
    return f.numer.degree() - f.denom.degree()


# endregion


# region Orderings

class OrderingSpec(namedtuple('OrderingSpec', ['variant', 'center'])):
    """Represent one of the four families of orderings of Q(z)

    `PLUS_INFINITY` makes z larger than every constant, `MINUS_INFINITY`
    smaller; `AT_POINT_PLUS(a)` makes z - a a positive infinitesimal and
    `AT_POINT_MINUS(a)` a negative one.
    """

    PLUS_INFINITY = 'plus-infinity'
    MINUS_INFINITY = 'minus-infinity'
    AT_POINT_PLUS = 'at-point-plus'
    AT_POINT_MINUS = 'at-point-minus'

    @classmethod
    def plus_infinity(cls):
        return cls(cls.PLUS_INFINITY, None)

    @classmethod
    def minus_infinity(cls):
        return cls(cls.MINUS_INFINITY, None)

    @classmethod
    def at_point_plus(cls, center):
        return cls(cls.AT_POINT_PLUS, QQ.convert(center))

    @classmethod
    def at_point_minus(cls, center):
        return cls(cls.AT_POINT_MINUS, QQ.convert(center))

    @property
    def is_at_point(self):
        return self.variant in (self.AT_POINT_PLUS, self.AT_POINT_MINUS)

    def __str__(self):
        return format_ordering(self)


def parse_ordering(text):
    """Parse `plus-infinity`, `minus-infinity`, `at:<rational>:+` or `at:<rational>:-`"""
    text = text.strip()
    if text == constants.PLUS_INFINITY_TOKEN:
        return OrderingSpec.plus_infinity()
    if text == constants.MINUS_INFINITY_TOKEN:
        return OrderingSpec.minus_infinity()

    parts = text.split(':')
    if len(parts) != 3 or parts[0] != constants.AT_POINT_PREFIX or parts[2] not in ('+', '-'):
        raise ValueError("invalid ordering {!r}".format(text))
    try:
        center = Rational(parts[1])
    except (TypeError, ValueError):
        raise ValueError("invalid ordering center {!r}".format(parts[1]))
    if not center.is_Rational:
        raise ValueError("invalid ordering center {!r}".format(parts[1]))

    center = QQ.from_sympy(center)
    if parts[2] == '+':
        return OrderingSpec.at_point_plus(center)
    return OrderingSpec.at_point_minus(center)


def format_ordering(ordering):
    if ordering.variant == OrderingSpec.PLUS_INFINITY:
        return constants.PLUS_INFINITY_TOKEN
    if ordering.variant == OrderingSpec.MINUS_INFINITY:
        return constants.MINUS_INFINITY_TOKEN
    side = '+' if ordering.variant == OrderingSpec.AT_POINT_PLUS else '-'
    return '{}:{}:{}'.format(constants.AT_POINT_PREFIX, ordering.center, side)


def _scalar_sign(c):
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0


def _poly_sign(p, ordering):
    """Return the sign of a nonzero polynomial (a `PolyElement` over QQ) under an ordering"""

    if ordering.variant == OrderingSpec.PLUS_INFINITY:
        return _scalar_sign(p.LC)
    if ordering.variant == OrderingSpec.MINUS_INFINITY:
        return _scalar_sign(p.LC) * (-1) ** p.degree()

    # Expand around the center; the lowest surviving coefficient decides
    x = p.ring.gens[0]
    shifted = p.compose(x, x + ordering.center)
    (order,) = min(shifted.keys())
    sign = _scalar_sign(shifted[(order,)])
    if ordering.variant == OrderingSpec.AT_POINT_MINUS:
        sign *= (-1) ** order
    return sign


def sign_at(f, ordering):
    """Return the sign (-1, 0 or +1) of f in Q(z) under an ordering

    Implementation Notes:
        - Poles at the center are fine: the sign of (z - a)^(-m) at a+ is the
          sign of its Laurent leading coefficient, so the function is total.
        - Elements of Q(i)(z) are accepted when they are real.
    """
    if not f:
        return 0
    if field_of(f) == constants.FIELD_QI:
        try:
            f = to_real(f)
        except ValueError:
            raise UnsupportedError("sign_at needs a real function, got {}".format(to_expression_hint(f)))
    return _poly_sign(f.numer, ordering) * _poly_sign(f.denom, ordering)


# endregion


# region Real Roots

def as_x_poly(poly):
    """Return a polynomial given as `Poly`, expression or coefficient list as a `Poly` in X over QQ

    Coefficient lists are lowest degree first.
    """
    if isinstance(poly, Poly):
        return Poly(poly.as_expr().subs(poly.gen, X), X, domain=QQ)
    if isinstance(poly, (list, tuple)):
        return Poly(list(reversed([QQ.convert(c) for c in poly])), X, domain=QQ)
    return Poly(poly, X, domain=QQ)


def _sign_changes(sequence, point, side):
    """Count sign changes of a Sturm sequence at a point; None means infinity on the given side"""
    if point is None:
        values = [poly.LC() * (side ** poly.degree()) for poly in sequence]
    else:
        values = [poly.eval(point) for poly in sequence]

    nonzero = [value for value in values if value != 0]
    return sum(1 for left, right in zip(nonzero, nonzero[1:]) if (left > 0) != (right > 0))


def _to_rational(value):
    if isinstance(value, (int, str, Rational)):
        return Rational(value)
    return QQ.to_sympy(QQ.convert(value))


def sturm_count(poly, lo=None, hi=None):
    """Return the number of distinct real roots of a polynomial over Q in (lo, hi]

    `lo=None` means minus infinity and `hi=None` plus infinity. The
    polynomial is replaced by its squarefree part first.
    """
    poly = as_x_poly(poly)
    if poly.is_zero:
        raise ValueError("sturm_count of the zero polynomial")
    poly = poly.sqf_part()
    if poly.degree() < 1:
        return 0

    lo = None if lo is None else _to_rational(lo)
    hi = None if hi is None else _to_rational(hi)
    sequence = poly.sturm()
    return _sign_changes(sequence, lo, -1) - _sign_changes(sequence, hi, 1)


def rational_roots(poly):
    """Return the sorted distinct rational roots of a polynomial over Q"""
    poly = as_x_poly(poly)
    if poly.is_zero:
        raise ValueError("rational_roots of the zero polynomial")
    _check_degree(poly)

    roots = set()
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            roots.add(QQ.from_sympy(-b / a))
    return sorted(roots)


def _rational_sqrt(q):
    """Return the nonnegative rational square root of q, or None"""
    if q < 0:
        return None
    numer, exact_numer = integer_nthroot(int(q.numerator), 2)
    denom, exact_denom = integer_nthroot(int(q.denominator), 2)
    return QQ(numer, denom) if exact_numer and exact_denom else None


def gaussian_roots(poly):
    """Return the distinct roots in Q(i) of a polynomial over Q

    A Gaussian root outside Q has minimal polynomial (X - x)^2 + y^2 over Q,
    so only linear and quadratic irreducible factors contribute.
    """
    poly = as_x_poly(poly)
    if poly.is_zero:
        raise ValueError("gaussian_roots of the zero polynomial")

    roots = []
    for factor, _ in monic_factors(poly):
        coeffs = [QQ.from_sympy(c) for c in factor.all_coeffs()]
        if factor.degree() == 1:
            roots.append(gaussian(-coeffs[1]))
        elif factor.degree() == 2:
            x = -coeffs[1] / 2
            y = _rational_sqrt(coeffs[2] - x * x)
            if y is not None:
                roots.extend([gaussian(x, y), gaussian(x, -y)])
    return sorted(roots, key=lambda root: (root.x, root.y))


RealityVerdict = namedtuple('RealityVerdict', ['real', 'reason'])

REDUCIBLE_REASON = "reducible: zero divisors"
NO_REAL_EMBEDDING_REASON = "no real embedding"
REAL_REASON = "formally real field"


def is_formally_real_quotient(poly):
    """Decide whether Q[X]/(f) is a formally real field

    It is iff f is irreducible over Q and has a real root; otherwise the
    verdict carries the reason.
    """
    poly = as_x_poly(poly)
    if poly.degree() < 1:
        raise ValueError("is_formally_real_quotient needs a nonconstant polynomial")
    _check_degree(poly)

    if not poly.is_irreducible:
        return RealityVerdict(False, REDUCIBLE_REASON)
    if sturm_count(poly) == 0:
        return RealityVerdict(False, NO_REAL_EMBEDDING_REASON)
    return RealityVerdict(True, REAL_REASON)


# endregion


# region Factorization and Partial Fractions

def _check_degree(poly):
    if poly.degree() > settings.MAX_FACTOR_DEGREE:
        raise UnsupportedError("unsupported degree {} (at most {})".format(
            poly.degree(), settings.MAX_FACTOR_DEGREE))


def monic_factors(poly):
    """Return [(monic irreducible factor, multiplicity)] of a nonzero `Poly` over its domain"""
    _check_degree(poly)
    _, factors = poly.factor_list()
    factors = [(factor.monic(), multiplicity) for factor, multiplicity in factors
               if factor.degree() > 0]
    return sorted(factors, key=lambda item: (item[0].degree(), str(item[0].as_expr())))


PartialFractionTerm = namedtuple('PartialFractionTerm', ['factor', 'exponent', 'numerator'])
PartialFractions = namedtuple('PartialFractions', ['polynomial', 'terms'])


def partial_fractions(f):
    """Decompose f = polynomial + sum(numerator / factor^exponent)

    Factors are the monic irreducible factors of the denominator over the
    base field; every numerator has smaller degree than its factor and is
    nonzero. Terms are ordered by factor and then by exponent.
    """
    numer, denom = numer_denom(f)
    polynomial, remainder = numer.div(denom)

    terms = []
    for factor, multiplicity in monic_factors(denom):
        block = factor ** multiplicity
        cofactor = denom.exquo(block)

        # The part of remainder/denom with poles along this factor
        local = (remainder * cofactor.invert(block)).rem(block)

        # Expand in powers of the factor: local = sum(digit_l * factor^l)
        exponent = multiplicity
        while exponent > 0:
            local, digit = local.div(factor)
            if not digit.is_zero:
                terms.append(PartialFractionTerm(factor, exponent, digit))
            exponent -= 1

    terms.sort(key=lambda term: (term.factor.degree(), str(term.factor.as_expr()), term.exponent))
    return PartialFractions(polynomial, terms)


def recombine(fractions, field):
    """Return the rational function of a `PartialFractions` decomposition"""
    total = from_numer_denom(fractions.polynomial, Poly(1, Z, domain=constant_domain(field)), field)
    for term in fractions.terms:
        total += from_numer_denom(term.numerator, term.factor ** term.exponent, field)
    return total

# endregion
