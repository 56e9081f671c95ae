# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


__all__ = [
    'XYZ',
    'TZ',
    'RingMismatch',
    'NotDivisible',
    'MultiPoly',
    'UniPoly',
    'TruncSeries',
    'Case',
    'QuotientRel',
    'promote',
    'add',
    'sub',
    'mul',
    'neg',
    'power',
    'exquo',
    'substitute',
    'evaluate',
    'reduce_mod',
    'format_poly',
    'to_json',
    'from_json',
    'bareiss',
]


import enum
import functools
import math
import numbers
import operator
import re
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from toolz.functoolz import flip

from .util import binomial, rpartial


XYZ = ('x', 'y', 'z')
TZ = ('t', 'z')


class RingMismatch(TypeError):
    pass


class NotDivisible(ArithmeticError):
    pass


def normalize(c):
    "Rationals with denominator 1 are stored as int."
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return normalize(Fraction(a) / b)


class MultiPoly:

    """
    A sparse polynomial with exact rational coefficients over a fixed tuple
    of generator names.

    The term mapping sends exponent tuples (one entry per generator) to
    nonzero coefficients.  It is kept sorted lexicographically by exponent
    tuple and coefficients with denominator 1 are kept as int, so two
    polynomials are equal iff their term mappings are.  MultiPoly objects
    are never mutated after construction.
    """

    __slots__ = 'terms', 'gens', '_hash'

    def __init__(self, terms=(), gens=XYZ):
        acc = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != len(gens):
                raise ValueError(
                    f'Exponent tuple {exps} does not match generators {gens}')
            if any(e < 0 for e in exps):
                raise ValueError(f'Negative exponent in {exps}')
            if not isinstance(coeff, numbers.Rational):
                raise TypeError(f'Coefficient {coeff!r} is not rational')
            acc[exps] = acc.get(exps, 0) + coeff
        _init(self, acc, tuple(gens))

    @classmethod
    def constant(cls, c, gens=XYZ):
        return _make({(0,) * len(gens): c}, tuple(gens))

    @classmethod
    def zero(cls, gens=XYZ):
        return _make({}, tuple(gens))

    @classmethod
    def one(cls, gens=XYZ):
        return cls.constant(1, gens)

    @classmethod
    def var(cls, name, gens=XYZ):
        if name not in gens:
            raise ValueError(f'Unknown variable {name!r}, expected one of {gens}')
        exps = tuple(int(name == each) for each in gens)
        return _make({exps: 1}, tuple(gens))

    @property
    def is_constant(self):
        return not self.terms or (
            len(self.terms) == 1 and not any(next(iter(self.terms))))

    @property
    def constant_term(self):
        return self.terms.get((0,) * len(self.gens), 0)

    @property
    def is_integral(self):
        return all(isinstance(c, int) for c in self.terms.values())

    @property
    def degree(self):
        "Total degree, -1 for the zero polynomial."
        return max((sum(exps) for exps in self.terms), default=-1)

    def degree_in(self, name):
        i = self.gens.index(name)
        return max((exps[i] for exps in self.terms), default=-1)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def items(self):
        return self.terms.items()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, numbers.Rational):
            return self.is_constant and self.constant_term == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant:
                # equal to its constant term, so it hashes like one
                self._hash = hash(self.constant_term)
            else:
                self._hash = hash((self.gens, tuple(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f'MultiPoly({format_poly(self)!r}, gens={self.gens})'

    def __str__(self):
        return format_poly(self)


def _init(poly, acc, gens):
    poly.terms = {e: normalize(c) for e, c in sorted(acc.items()) if c}
    poly.gens = gens
    poly._hash = None
    return poly


def _make(acc, gens):
    return _init(object.__new__(MultiPoly), acc, gens)


# Any exact number is turned into a constant polynomial over the given
# generators:

@functools.singledispatch
def promote(obj, gens=XYZ):
    raise TypeError(f'Cannot use {obj!r} as a polynomial')


@promote.register(MultiPoly)
def _(obj, gens=XYZ):
    return obj


@promote.register(numbers.Rational)
def _(obj, gens=XYZ):
    return MultiPoly.constant(obj, gens)


def coerce(p, q):
    gens = p.gens if isinstance(p, MultiPoly) else q.gens
    p, q = promote(p, gens), promote(q, gens)
    if p.gens != q.gens:
        raise RingMismatch(f'Polynomials over {p.gens} and {q.gens} do not mix')
    return p, q


# The following functions are the ring operations. They are bound to the
# MultiPoly class below as operator methods, the reflected ones via flip.

def add(p, q):
    p, q = coerce(p, q)
    acc = dict(p.terms)
    for exps, c in q.terms.items():
        acc[exps] = acc.get(exps, 0) + c
    return _make(acc, p.gens)


def neg(p):
    return _make({exps: -c for exps, c in p.terms.items()}, p.gens)


def sub(p, q):
    p, q = coerce(p, q)
    return add(p, neg(q))


def mul(p, q):
    p, q = coerce(p, q)
    if len(p.terms) > len(q.terms):
        p, q = q, p
    acc = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            exps = tuple(map(operator.add, e1, e2))
            acc[exps] = acc.get(exps, 0) + c1 * c2
    return _make(acc, p.gens)


def scale(p, c):
    return _make({exps: d * c for exps, d in p.terms.items()}, p.gens)


def power(p, n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f'Exponent must be an integer, not {n!r}')
    if n < 0:
        raise ValueError(f'Negative exponent {n} in polynomial power')
    result = MultiPoly.one(p.gens)
    base = p
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def exquo(p, q):
    """
    Exact division p / q. Raises NotDivisible if q does not divide p.

    Repeatedly cancels the lexicographically largest remaining term against
    the leading term of q. If q divides p the remainder stays a multiple of q
    throughout, so a leading term that q's does not divide proves there is a
    remainder.
    """
    p, q = coerce(p, q)
    if not q:
        raise ZeroDivisionError('Polynomial division by zero')
    if q.is_constant:
        c = q.constant_term
        return p if c == 1 else _make(
            {exps: _div(d, c) for exps, d in p.terms.items()}, p.gens)
    lead = max(q.terms)
    lc = q.terms[lead]
    rem = dict(p.terms)
    quot = {}
    while rem:
        top = max(rem)
        shift = tuple(map(operator.sub, top, lead))
        if any(s < 0 for s in shift):
            raise NotDivisible(f'{q} does not divide {p}')
        c = _div(rem[top], lc)
        quot[shift] = c
        for exps, d in q.terms.items():
            key = tuple(map(operator.add, shift, exps))
            value = rem.get(key, 0) - c * d
            if value:
                rem[key] = value
            else:
                rem.pop(key, None)
    return _make(quot, p.gens)


def truediv(p, q):
    if isinstance(q, numbers.Rational):
        if not q:
            raise ZeroDivisionError('Polynomial division by zero')
        return scale(p, Fraction(1, 1) / q)
    return exquo(p, q)


MultiPoly.__add__ = add
MultiPoly.__radd__ = flip(add)
MultiPoly.__sub__ = sub
MultiPoly.__rsub__ = flip(sub)
MultiPoly.__mul__ = mul
MultiPoly.__rmul__ = flip(mul)
MultiPoly.__truediv__ = truediv
MultiPoly.__pow__ = power
MultiPoly.__neg__ = neg
MultiPoly.__pos__ = promote


def substitute(p, mapping, gens=None):
    """
    Replace generators of p by the polynomials in mapping, giving a
    polynomial over gens (default: p's own generators). Generators that are
    not mapped must also be generators of the target ring.
    """
    gens = tuple(gens or p.gens)
    images = [
        promote(mapping[name], gens) if name in mapping
        else MultiPoly.var(name, gens)
        for name in p.gens
    ]
    powers = [{0: MultiPoly.one(gens)} for _ in images]

    def image_power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = mul(image_power(i, e - 1), images[i])
        return cache[e]

    result = {}
    for exps, c in p.terms.items():
        term = MultiPoly.constant(c, gens)
        for i, e in enumerate(exps):
            if e:
                term = mul(term, image_power(i, e))
        for key, d in term.terms.items():
            result[key] = result.get(key, 0) + d
    return _make(result, gens)


def evaluate(p, point):
    """
    The exact rational value of p at point, which is either a mapping from
    generator names to rationals or a sequence aligned with p.gens. Values
    are only needed for generators that actually occur in p.
    """
    if not isinstance(point, Mapping):
        point = dict(zip(p.gens, point))
    total = Fraction(0)
    for exps, c in p.terms.items():
        term = Fraction(c)
        for name, e in zip(p.gens, exps):
            if e:
                if name not in point:
                    raise ValueError(f'No value given for {name!r}')
                term *= Fraction(point[name]) ** e
        total += term
    return normalize(total)


def format_term(exps, c, gens):
    monomial = ' '.join(f'{name}^{e}' for name, e in zip(gens, exps) if e)
    return f'{c} * {monomial}' if monomial else f'{c}'


def format_poly(p):
    if not p:
        return '0'
    parts = []
    for exps, c in p.terms.items():
        text = format_term(exps, abs(c), p.gens)
        if not parts:
            parts.append('-' + text if c < 0 else text)
        else:
            parts.append((' - ' if c < 0 else ' + ') + text)
    return ''.join(parts)


def to_json(p):
    return [[*exps, str(c)] for exps, c in p.terms.items()]


def from_json(records, gens=XYZ):
    return MultiPoly(
        ((record[:-1], normalize(Fraction(record[-1]))) for record in records),
        gens)


class UniPoly:

    """
    A polynomial in s whose coefficients are MultiPoly values over a common
    generator tuple, stored from s^0 upward with trailing zeros trimmed.
    """

    __slots__ = 'coeffs', 'gens'

    def __init__(self, coeffs, gens=XYZ):
        gens = tuple(gens)
        coeffs = [promote(c, gens) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.gens = gens

    @classmethod
    def from_roots(cls, roots, mults=None, gens=XYZ):
        "The monic polynomial with the given roots and multiplicities."
        roots = [promote(root, gens) for root in roots]
        mults = [1] * len(roots) if mults is None else list(mults)
        if len(roots) != len(mults):
            raise ValueError(
                f'{len(roots)} roots but {len(mults)} multiplicities')
        if any(m < 0 for m in mults):
            raise ValueError(f'Negative multiplicity in {mults}')
        coeffs = [MultiPoly.one(gens)]
        for root, mult in zip(roots, mults):
            for _ in range(mult):
                coeffs = _times_linear(coeffs, root)
        return cls(coeffs, gens)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return MultiPoly.zero(self.gens)

    def padded(self, length):
        "The coefficient list extended by zeros to the given length."
        if length < len(self.coeffs):
            raise ValueError(
                f'Cannot fit degree {self.degree} into {length} coefficients')
        zero = MultiPoly.zero(self.gens)
        return list(self.coeffs) + [zero] * (length - len(self.coeffs))

    def map(self, func, gens=None):
        coeffs = [func(c) for c in self.coeffs]
        if gens is None:
            gens = coeffs[0].gens if coeffs else self.gens
        return UniPoly(coeffs, gens)

    def __call__(self, s):
        s = promote(s, self.gens)
        value = MultiPoly.zero(self.gens)
        for c in reversed(self.coeffs):
            value = value * s + c
        return value

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.map(rpartial(mul, other), self.gens)
        acc = [MultiPoly.zero(self.gens)] * (len(self.coeffs) + len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            for j, d in enumerate(other.coeffs):
                acc[i + j] = acc[i + j] + c * d
        return UniPoly(acc, self.gens)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.gens == other.gens and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.gens, self.coeffs))

    def __repr__(self):
        return f'UniPoly({[str(c) for c in self.coeffs]!r}, gens={self.gens})'

    def __str__(self):
        if not self.coeffs:
            return '0'
        return ' + '.join(
            f'({c}) * s^{k}'
            for k, c in reversed(list(enumerate(self.coeffs))) if c)


def _times_linear(coeffs, root):
    "Multiply the coefficient list of a polynomial in s by (s - root)."
    shifted = [MultiPoly.zero(root.gens)] + coeffs
    return [
        shifted[k] - root * coeffs[k] if k < len(coeffs) else shifted[k]
        for k in range(len(shifted))
    ]


class TruncSeries:

    """
    A power series in t truncated after t^order, stored in the exponential
    convention: coeffs[m] is the coefficient of t^m/m!.
    """

    __slots__ = 'order', 'coeffs', 'gens'

    def __init__(self, coeffs, order, gens=XYZ):
        gens = tuple(gens)
        coeffs = [promote(c, gens) for c in coeffs]
        if order < 0:
            raise ValueError(f'Negative truncation order {order}')
        if len(coeffs) > order + 1:
            raise ValueError(
                f'{len(coeffs)} coefficients do not fit order {order}')
        coeffs += [MultiPoly.zero(gens)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)
        self.gens = gens

    @classmethod
    def exp_t(cls, c, order, gens=XYZ):
        "e^(c t) truncated after t^order."
        c = promote(c, gens)
        return cls([c ** m for m in range(order + 1)], order, c.gens)

    @classmethod
    def constant(cls, c, order, gens=XYZ):
        return cls([c], order, gens)

    def coefficient(self, m):
        return self.coeffs[m]

    def _lift(self, other):
        if isinstance(other, TruncSeries):
            if other.order != self.order:
                raise ValueError(
                    f'Series of orders {self.order} and {other.order} do not mix')
            return other
        return TruncSeries.constant(other, self.order, self.gens)

    def __add__(self, other):
        other = self._lift(other)
        return TruncSeries(
            map(operator.add, self.coeffs, other.coeffs), self.order, self.gens)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(map(neg, self.coeffs), self.order, self.gens)

    def __sub__(self, other):
        return self + -self._lift(other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        u, v = self.coeffs, other.coeffs
        return TruncSeries(
            (
                sum(
                    (binomial(m, i) * u[i] * v[m - i] for i in range(m + 1)),
                    MultiPoly.zero(self.gens))
                for m in range(self.order + 1)
            ),
            self.order,
            self.gens)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError(f'Negative exponent {n} in series power')
        result = TruncSeries.constant(1, self.order, self.gens)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f'TruncSeries({[str(c) for c in self.coeffs]!r}, {self.order})'


class Case(enum.Enum):
    POS = 'pos'
    NEG = 'neg'
    X_ZERO = 'x_zero'
    Y_ZERO = 'y_zero'


REL_PATTERN = re.compile(
    r'^(?P<a>[+-]?\d*)\*?x(?:(?P<sign>[+-])(?P<b>\d*)\*?y)?$'
    r'|^(?P<c>[+-]?\d*)\*?y$')


def _int_coefficient(text):
    if text in ('', '+'):
        return 1
    if text == '-':
        return -1
    return int(text)


@dataclass(frozen=True)
class QuotientRel:

    """
    A linear relation defining the quotient ring. For Case.POS the relation is
    a*x + b*y = 0, for Case.NEG it is a*x - b*y = 0, with a, b > 0 in both.
    The axis cases are stored as (1, 0) for x = 0 and (0, 1) for y = 0.
    """

    a: int
    b: int
    case: Case

    def __post_init__(self):
        if self.case in (Case.POS, Case.NEG):
            if self.a <= 0 or self.b <= 0:
                raise ValueError(
                    f'{self.case.value} relation needs a, b > 0, '
                    f'got ({self.a}, {self.b})')
        elif (self.a, self.b) != {Case.X_ZERO: (1, 0), Case.Y_ZERO: (0, 1)}[self.case]:
            raise ValueError(f'Malformed axis relation ({self.a}, {self.b})')

    @classmethod
    def pos(cls, a, b):
        return cls(a, b, Case.POS)

    @classmethod
    def neg(cls, a, b):
        return cls(a, b, Case.NEG)

    @classmethod
    def x_zero(cls):
        return cls(1, 0, Case.X_ZERO)

    @classmethod
    def y_zero(cls):
        return cls(0, 1, Case.Y_ZERO)

    @classmethod
    def from_coefficients(cls, a, b):
        "The relation a*x + b*y = 0 for arbitrary integers, not both zero."
        if a == 0 and b == 0:
            raise ValueError('The relation 0 = 0 defines no quotient')
        if b == 0:
            return cls.x_zero()
        if a == 0:
            return cls.y_zero()
        if a < 0:
            a, b = -a, -b
        return cls.pos(a, b) if b > 0 else cls.neg(a, -b)

    @classmethod
    def parse(cls, text):
        "Parse 'ax+by', 'ax-by', 'x' or 'y', optionally followed by '=0'."
        source = re.sub(r'\s+', '', text)
        if source.endswith('=0'):
            source = source[:-2]
        match = REL_PATTERN.match(source)
        if not match:
            raise ValueError(f'Malformed relation {text!r}')
        if match['c'] is not None:
            return cls.from_coefficients(0, _int_coefficient(match['c']))
        a = _int_coefficient(match['a'])
        if match['sign'] is None:
            return cls.from_coefficients(a, 0)
        b = _int_coefficient(match['b'])
        return cls.from_coefficients(a, b if match['sign'] == '+' else -b)

    @property
    def step(self):
        "The primitive lattice step (a, b) / gcd(a, b)."
        g = math.gcd(self.a, self.b)
        return self.a // g, self.b // g

    def primitive(self):
        return QuotientRel(*self.step, self.case)

    @property
    def normal_gens(self):
        return TZ if self.case in (Case.POS, Case.NEG) else XYZ

    def linear_form(self):
        x, y = MultiPoly.var('x'), MultiPoly.var('y')
        if self.case is Case.NEG:
            return self.a * x - self.b * y
        return self.a * x + self.b * y

    def substitution(self):
        "Images of x and y parametrizing the line the relation cuts out."
        if self.case is Case.X_ZERO:
            return {'x': 0}
        if self.case is Case.Y_ZERO:
            return {'y': 0}
        t = MultiPoly.var('t', TZ)
        x_image = -self.b * t if self.case is Case.POS else self.b * t
        return {'x': x_image, 'y': self.a * t}

    def __str__(self):
        if self.case is Case.X_ZERO:
            return 'x'
        if self.case is Case.Y_ZERO:
            return 'y'
        a = '' if self.a == 1 else self.a
        b = '' if self.b == 1 else self.b
        sign = '+' if self.case is Case.POS else '-'
        return f'{a}x{sign}{b}y'


def reduce_mod(p, rel):
    "The normal form of p in the quotient ring defined by rel."
    return substitute(p, rel.substitution(), rel.normal_gens)


def bareiss(matrix, gens=XYZ):
    """
    Determinant of a square matrix of polynomials by fraction-free
    elimination. Every division is by the previous pivot and is exact.
    """
    m = [[promote(entry, gens) for entry in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError('Determinant of a non-square matrix')
    if n == 0:
        return MultiPoly.one(gens)
    sign = 1
    previous = MultiPoly.one(gens)
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(gens)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exquo(pivot * m[i][j] - m[i][k] * m[k][j], previous)
        previous = pivot
    return sign * m[n - 1][n - 1]
