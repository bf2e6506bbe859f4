"""Parse and serialize rational-function expressions

Purpose:
    Input files and command-line arguments spell scalars and rational
    functions as short expressions such as `1/(2*z)` or `(1 + i)*z^2 - 3`.
    This module turns them into elements of Q(z) or Q(i)(z) and back.

Usage:
    - `parse_expression(text, field)` returns a rational function.
    - `parse_scalar(text, field)` additionally requires a constant.
    - `format_expression(f)` emits the canonical spelling: an expanded
      numerator over a monic denominator, terms by descending degree.

Implementation Notes:
    - The grammar (whitespace ignored):

          expression := term (('+' | '-') term)*
          term       := unary (('*' | '/') unary)*
          unary      := '-' unary | power
          power      := atom ('^' integer)?
          atom       := integer | 'z' | 'i' | '(' expression ')'

      `i` is only accepted when parsing over Q(i).
    - The parser is a plain recursive descent over a token list.
"""

import logging
import re
from collections import namedtuple

from realpv import constants
from realpv import field_tower
from realpv.exceptions import ExpressionSyntaxError

logger = logging.getLogger(constants.BASE_LOGGER_NAME + '.' + __name__)

Token = namedtuple('Token', ['kind', 'text', 'position'])

INTEGER = 'integer'
NAME = 'name'
OPERATOR = 'operator'
LEFT_PAREN = 'left_paren'
RIGHT_PAREN = 'right_paren'
EOF = 'eof'

_TOKEN_PATTERN = re.compile(r'\s*(?:(?P<integer>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<operator>[-+*/^])'
                            r'|(?P<left_paren>\()|(?P<right_paren>\)))')


# region Tokenizer

def tokenize(text):
    """Split an expression into tokens, ending with an EOF token"""
    tokens = []
    position = 0
    stripped_length = len(text.rstrip())

    while position < stripped_length:
        match = _TOKEN_PATTERN.match(text, position)
        if not match:
            raise ExpressionSyntaxError("unexpected character {!r} at position {} in {!r}".format(
                text[position:].lstrip()[:1], position, text))
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()

    tokens.append(Token(EOF, '', stripped_length))
    return tokens


# endregion


# region Parser

class Parser:
    """Recursive descent parser producing elements of a rational function field"""

    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.tokens = tokenize(text)
        self.index = 0

    # Token stream

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1
        return token

    def error(self, message, token=None):
        token = token or self.current
        found = "end of input" if token.kind == EOF else repr(token.text)
        return ExpressionSyntaxError("{} at position {} (found {}) in {!r}".format(
            message, token.position, found, self.text))

    def expect(self, kind, message):
        if self.current.kind != kind:
            raise self.error(message)
        return self.advance()

    def at_operator(self, *symbols):
        return self.current.kind == OPERATOR and self.current.text in symbols

    # Grammar rules

    def parse(self):
        if self.current.kind == EOF:
            raise self.error("empty expression")
        value = self.expression()
        if self.current.kind != EOF:
            raise self.error("unexpected token")
        return value

    def expression(self):
        value = self.term()
        while self.at_operator('+', '-'):
            operator = self.advance().text
            right = self.term()
            value = value + right if operator == '+' else value - right
        return value

    def term(self):
        value = self.unary()
        while self.at_operator('*', '/'):
            operator = self.advance()
            right = self.unary()
            if operator.text == '*':
                value = value * right
            elif not right:
                raise self.error("division by zero", operator)
            else:
                value = value / right
        return value

    def unary(self):
        if self.at_operator('-'):
            self.advance()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_operator('^'):
            self.advance()
            exponent = self.expect(INTEGER, "expected a nonnegative integer exponent")
            base = base ** int(exponent.text)
        return base

    def atom(self):
        token = self.current

        if token.kind == INTEGER:
            self.advance()
            return field_tower.constant(int(token.text), self.field)

        if token.kind == NAME:
            self.advance()
            if token.text == constants.VARIABLE_NAME:
                return field_tower.variable(self.field)
            if token.text == constants.IMAGINARY_UNIT_NAME:
                if self.field != constants.FIELD_QI:
                    raise self.error("'i' is only allowed over Q(i)", token)
                return field_tower.constant(field_tower.imaginary_unit(), self.field)
            raise self.error("unknown name", token)

        if token.kind == LEFT_PAREN:
            self.advance()
            value = self.expression()
            self.expect(RIGHT_PAREN, "expected ')'")
            return value

        raise self.error("expected a number, 'z', 'i' or '('")


def parse_expression(text, field=constants.FIELD_Q):
    """Parse an expression into an element of Q(z) or Q(i)(z)"""
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            text = str(text)
        else:
            raise ExpressionSyntaxError("expected an expression string, got {!r}".format(text))
    return Parser(text, field).parse()


def parse_scalar(text, field=constants.FIELD_QI):
    """Parse an expression that must not involve z and return the scalar"""
    value = parse_expression(text, field)
    if not field_tower.is_constant(value):
        raise ExpressionSyntaxError("expected a constant, got {!r}".format(text))
    return field_tower.constant_value(value)


# endregion


# region Serialization

def _format_rational(c):
    if c.denominator == 1:
        return str(c.numerator)
    return '{}/{}'.format(c.numerator, c.denominator)


def _format_gaussian(c):
    """Spell a non-real Gaussian rational as `(a + b*i)`, `(b*i)` or `(-i)`"""
    re_part, im_part = c.x, c.y
    magnitude = abs(im_part)
    imaginary = 'i' if magnitude == 1 else '{}*i'.format(_format_rational(magnitude))

    if not re_part:
        return '({}{})'.format('-' if im_part < 0 else '', imaginary)
    return '({} {} {})'.format(_format_rational(re_part), '-' if im_part < 0 else '+', imaginary)


def _format_monomial(exponent):
    if exponent == 0:
        return ''
    if exponent == 1:
        return constants.VARIABLE_NAME
    return '{}^{}'.format(constants.VARIABLE_NAME, exponent)


def _format_terms(poly):
    """Return [(negative, text)] for the terms of a `Poly` in z, by descending degree"""
    terms = []
    for (exponent,), coeff in sorted(poly.as_dict(native=True).items(), reverse=True):
        monomial = _format_monomial(exponent)

        real = field_tower.scalar_imag_part(coeff) == 0
        if real:
            coeff = field_tower.scalar_real_part(coeff)
            negative = coeff < 0
            magnitude = abs(coeff)
            if not monomial:
                text = _format_rational(magnitude)
            elif magnitude == 1:
                text = monomial
            else:
                text = '{}*{}'.format(_format_rational(magnitude), monomial)
        else:
            negative = False
            text = _format_gaussian(coeff)
            if monomial:
                text = '{}*{}'.format(text, monomial)

        terms.append((negative, text))
    return terms


def format_polynomial(poly):
    terms = _format_terms(poly)
    if not terms:
        return '0'

    negative, text = terms[0]
    pieces = ['-' + text if negative else text]
    for negative, text in terms[1:]:
        pieces.append(('- ' if negative else '+ ') + text)
    return ' '.join(pieces)


def format_expression(f):
    """Serialize a rational function canonically"""
    numer, denom = field_tower.numer_denom(f)
    numer_text = format_polynomial(numer)
    if denom.degree() == 0:
        return numer_text

    if len(_format_terms(numer)) > 1 or '/' in numer_text:
        numer_text = '({})'.format(numer_text)
    denom_text = format_polynomial(denom)
    if len(_format_terms(denom)) > 1:
        denom_text = '({})'.format(denom_text)
    return '{}/{}'.format(numer_text, denom_text)


def format_scalar(c):
    """Serialize a QQ or QQ_I element in the expression grammar"""
    if field_tower.scalar_imag_part(c) == 0:
        return _format_rational(field_tower.scalar_real_part(c))
    return _format_gaussian(c)


def format_matrix(matrix):
    """Serialize a matrix given as rows of rational functions"""
    return [[format_expression(entry) for entry in row] for row in matrix]


def parse_matrix(rows, field):
    """Parse a matrix given as rows of expression strings"""
    return [[parse_expression(entry, field) for entry in row] for row in rows]

# endregion
