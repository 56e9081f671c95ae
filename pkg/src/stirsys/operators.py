# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


import operator
import re
from dataclasses import dataclass
from typing import Any

from toolz.functoolz import compose, curry, identity

from .util import pairwise, const, decrement
from .polyring import XYZ, MultiPoly


# The following parser is based on the paper "Top Down Operator Precedence"
# by Vaughan R. Pratt (1973). See https://tdop.github.io
#
# It reads the canonical text form of polynomials, "c * x^i y^j z^k" terms
# joined by + and -, and more generally any expression built from rationals,
# generator names, parentheses, + - * / ^ and juxtaposition (2x y means
# 2 * x * y).

class ParseError(ValueError):
    pass


parse_error = compose(ParseError, '{} at position {} in {!r}'.format)


@dataclass(frozen=True)
class Token:

    left_rank: int
    right_rank: int
    node: Any
    position: int = 0

    def at(self, position):
        return type(self)(self.left_rank, self.right_rank, self.node, position)

    @classmethod
    @curry
    def fixity(cls, left, right, rank, node):
        return cls(left(rank), right(rank), node)

    def nud(self, parser):
        raise parser.unexpected(self)

    def led(self, left, parser):
        raise parser.unexpected(self)


class Nofix(Token):

    __slots__ = ()

    def nud(self, parser):
        return self.node


class Prefix(Token):

    __slots__ = ()

    def nud(self, parser):
        return self.node(parser.parse(self.right_rank))


class Infix(Token):

    __slots__ = ()

    def led(self, left, parser):
        return parser.apply(self, left, parser.parse(self.right_rank))


class Group(Token):

    __slots__ = ()

    def nud(self, parser):
        inner = parser.parse(0)
        parser.expect(')')
        return inner


class Close(Token):

    __slots__ = ()


f = Nofix.fixity(identity, identity)
fy = Prefix.fixity(identity, decrement)
xfy = Infix.fixity(identity, decrement)
yfx = Infix.fixity(decrement, identity)
group = Group.fixity(const(0), const(0))
close = Close.fixity(const(0), const(0))


def divide(left, right):
    return left / (right.constant_term if right.is_constant else right)


def raise_to(base, exponent):
    if not exponent.is_constant or not isinstance(exponent.constant_term, int):
        raise ArithmeticError(f'Exponent {exponent} is not an integer')
    if exponent.constant_term < 0:
        raise ArithmeticError(f'Negative exponent {exponent}')
    return base ** exponent.constant_term


POLY_FIXITIES = {
    '+': yfx(50, operator.add),
    '-': yfx(50, operator.sub),
    '*': yfx(60, operator.mul),
    '/': yfx(60, divide),
    '^': xfy(80, raise_to),
    '(': group(None, '('),
    ')': close(None, ')'),
}

PREFIX_FIXITIES = {
    '-': fy(70, operator.neg),
    '+': fy(70, operator.pos),
}

# juxtaposition binds like *, so 2 x^2 y reads 2 * (x^2) * y
JUXTAPOSE = POLY_FIXITIES['*']

NON_OP = f(0)
END = NON_OP(None)


TOKEN_PATTERN = re.compile(
    r'\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()])|(?P<bad>\S))')


def tokenize(text, gens=XYZ):
    """
    Yield positioned tokens. An operator is read as prefix when it does not
    follow an operand, and a multiplication is inserted between two adjacent
    operands.
    """
    after_operand = False
    for match in TOKEN_PATTERN.finditer(text):
        kind = match.lastgroup
        lexeme = match[kind]
        position = match.start(kind)
        if kind == 'bad':
            raise parse_error(f'Unexpected character {lexeme!r}', position, text)
        if kind in ('number', 'name') or lexeme == '(':
            if after_operand:
                yield JUXTAPOSE.at(position)
        if kind == 'number':
            yield NON_OP(MultiPoly.constant(int(lexeme), gens)).at(position)
            after_operand = True
        elif kind == 'name':
            if lexeme not in gens:
                raise parse_error(
                    f'Unknown variable {lexeme!r}', position, text)
            yield NON_OP(MultiPoly.var(lexeme, gens)).at(position)
            after_operand = True
        elif not after_operand and lexeme in PREFIX_FIXITIES:
            yield PREFIX_FIXITIES[lexeme].at(position)
        else:
            yield POLY_FIXITIES[lexeme].at(position)
            after_operand = lexeme == ')'


class PrattParser:

    def __init__(self, text, gens=XYZ):
        self.text = text
        self.gens = gens
        self.token_pairs = pairwise(tokenize(text, gens), fillvalue=END)
        self.token = None

    def error(self, message, token):
        position = len(self.text) if token is END else token.position
        return parse_error(message, position, self.text)

    def unexpected(self, token):
        return self.error(f'Unexpected {self.text[token.position]!r}', token)

    def advance(self):
        try:
            current, self.token = next(self.token_pairs)
        except StopIteration:
            raise parse_error('Unexpected end of input', len(self.text), self.text)
        return current

    def parse(self, right_rank):
        current = self.advance()
        left = current.nud(self)
        while right_rank < self.token.left_rank:
            current = self.advance()
            left = current.led(left, self)
        return left

    def expect(self, lexeme):
        if self.token is END or self.token.node != lexeme:
            raise self.error(f'Expected {lexeme!r}', self.token)
        self.advance()

    def apply(self, token, left, right):
        try:
            return token.node(left, right)
        except ArithmeticError as exc:
            raise self.error(str(exc), token) from exc

    def __call__(self):
        if self.token is None and self.text.strip() == '':
            raise parse_error('Empty polynomial', 0, self.text)
        result = self.parse(0)
        if self.token is not END:
            raise self.unexpected(self.token)
        return result


def parse_poly(text, gens=XYZ):
    "Parse the text form of a polynomial over gens."
    return PrattParser(text, tuple(gens))()
