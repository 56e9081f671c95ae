# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


__all__ = [
    'Point',
    'PointSet',
    'CMatrix',
    'NotStaircase',
    'VerificationFailed',
    'staircases',
    'is_staircase',
    'cpoly',
    'cpoly_egf',
    'root_form',
    'build_matrix',
    'b_R',
    'root_polynomial',
    'residual',
    'solve',
    'lemma_comb_check',
    'vanishing_check',
    'det_bareiss',
    'det_closed_form',
    'closed_form_factors',
    'orientation_sign',
    'verify_counterexample',
    'necessity_witness',
    'uniqueness_spot_check',
]


import functools
import logging
import math
import re
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .util import partitions, product
from .polyring import (
    XYZ, MultiPoly, UniPoly, TruncSeries, bareiss, evaluate, promote, to_json,
)
from .operators import parse_poly
from .stirling import stirling2


log = logging.getLogger(__name__)


class NotStaircase(ValueError):

    def __init__(self, point, missing):
        super().__init__(
            f'Point {tuple(point)} has no predecessor {tuple(missing)}, '
            f'the set does not satisfy the monomial condition')
        self.point = point
        self.missing = missing


class VerificationFailed(AssertionError):
    pass


class Point(NamedTuple):
    i: int
    j: int

    def shifted(self, di, dj):
        return Point(self.i + di, self.j + dj)

    @property
    def weight(self):
        return self.i + self.j


def graded_key(point):
    return point.i + point.j, -point.i


POINTS_PATTERN = re.compile(r'^\s*(-?\d+)\s*,\s*(-?\d+)\s*$')


class PointSet:

    """
    A finite ordered set of lattice points in the first quadrant. The order
    is the row order of every matrix built from the set.
    """

    __slots__ = 'points', '_members'

    def __init__(self, points):
        points = tuple(Point(*map(int, p)) for p in points)
        for p in points:
            if p.i < 0 or p.j < 0:
                raise ValueError(f'Point {tuple(p)} has a negative coordinate')
        members = frozenset(points)
        if len(members) != len(points):
            raise ValueError(f'Duplicate points in {[tuple(p) for p in points]}')
        self.points = points
        self._members = members

    @classmethod
    def parse(cls, text):
        "Read 'i,j;i,j;...'."
        points = []
        for chunk in text.split(';'):
            match = POINTS_PATTERN.match(chunk)
            if not match:
                raise ValueError(f'Malformed point {chunk!r} in {text!r}')
            points.append((int(match[1]), int(match[2])))
        return cls(points)

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not all(
                isinstance(p, list) and len(p) == 2 for p in data):
            raise ValueError('A point set is a JSON array of [i, j] pairs')
        return cls(data)

    @classmethod
    def staircase(cls, shape):
        """
        The staircase whose row j has shape[j] points, for a weakly
        decreasing shape, in graded order.
        """
        points = [(i, j) for j, length in enumerate(shape) for i in range(length)]
        return cls(points).graded()

    def graded(self):
        return PointSet(sorted(self.points, key=graded_key))

    def to_json(self):
        return [[p.i, p.j] for p in self.points]

    def missing_predecessor(self):
        "The first (point, missing predecessor) pair, or None for a staircase."
        for p in self.points:
            if p.i > 0 and (p.i - 1, p.j) not in self._members:
                return p, Point(p.i - 1, p.j)
            if p.j > 0 and (p.i, p.j - 1) not in self._members:
                return p, Point(p.i, p.j - 1)
        return None

    @property
    def is_staircase(self):
        return self.missing_predecessor() is None

    def require_staircase(self):
        witness = self.missing_predecessor()
        if witness is not None:
            raise NotStaircase(*witness)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, index):
        return self.points[index]

    def __contains__(self, point):
        return tuple(point) in self._members

    def __eq__(self, other):
        if isinstance(other, PointSet):
            return self.points == other.points
        return NotImplemented

    def __hash__(self):
        return hash(self.points)

    def as_set(self):
        return self._members

    def __repr__(self):
        return f'PointSet({[tuple(p) for p in self.points]})'

    def __str__(self):
        return ';'.join(f'{p.i},{p.j}' for p in self.points)


def is_staircase(points):
    return points.is_staircase


def staircases(r):
    "All staircases with r points, one per partition of r."
    for shape in partitions(r):
        yield PointSet.staircase(shape)


def _check_indices(*indices):
    if any(k < 0 for k in indices):
        raise ValueError(f'Negative index in {indices}')


@functools.lru_cache(maxsize=None)
def cpoly(k1, k2, ell):
    "C(k1, k2, ell) from its defining double sum over Stirling numbers."
    _check_indices(k1, k2, ell)
    terms = {}
    for i1 in range(k1, ell + 1):
        for i2 in range(k2, ell - i1 + 1):
            c = (math.comb(ell, i1) * math.comb(ell - i1, i2)
                 * stirling2(i1, k1) * stirling2(i2, k2))
            if c:
                terms[i1, i2, ell - i1 - i2] = c
    return MultiPoly(terms)


def cpoly_egf(k1, k2, ell):
    "C(k1, k2, ell) read off the exponential generating function."
    _check_indices(k1, k2, ell)
    x, y, z = map(MultiPoly.var, XYZ)
    series = (
        (TruncSeries.exp_t(x, ell) - 1) ** k1
        * (TruncSeries.exp_t(y, ell) - 1) ** k2
        * TruncSeries.exp_t(z, ell))
    return series.coefficient(ell) / (math.factorial(k1) * math.factorial(k2))


def root_form(point):
    "A_ij = i x + j y + z."
    i, j = point
    return MultiPoly({(1, 0, 0): i, (0, 1, 0): j, (0, 0, 1): 1})


@dataclass(frozen=True)
class CMatrix:

    points: PointSet
    ell: int
    entries: tuple = field(repr=False)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return self.ell + 1

    def row(self, point):
        return self.entries[self.points.points.index(Point(*point))]

    def to_json(self):
        return [[to_json(entry) for entry in row] for row in self.entries]


def build_matrix(points, ell):
    "M_{R,ell}: the row of (k1, k2) is C(k1, k2, 0), ..., C(k1, k2, ell)."
    if ell < 0:
        raise ValueError(f'Negative length {ell}')
    entries = tuple(
        tuple(cpoly(p.i, p.j, c) for c in range(ell + 1)) for p in points)
    return CMatrix(points, ell, entries)


def b_R(points):
    return UniPoly.from_roots([root_form(p) for p in points])


def as_multiplicity(points, mults):
    """
    Turn mults into a mapping Point -> int over all of points. A sequence is
    read in the order of points, None means multiplicity 1 everywhere.
    """
    if mults is None:
        return {p: 1 for p in points}
    if isinstance(mults, Mapping):
        mults = {Point(*p): n for p, n in mults.items()}
        stray = [p for p in mults if p not in points]
        if stray:
            raise ValueError(f'Multiplicities given for points not in the set: {stray}')
        return {p: mults.get(p, 0) for p in points}
    mults = list(mults)
    if len(mults) != len(points):
        raise ValueError(
            f'{len(points)} points but {len(mults)} multiplicities')
    return dict(zip(points, mults))


def root_polynomial(points, mults=None):
    "The product of (s - A_ij)^n_ij, without any checks on the n_ij."
    mults = as_multiplicity(points, mults)
    return UniPoly.from_roots(
        [root_form(p) for p in points], [mults[p] for p in points])


def residual(points, coeffs):
    """
    M_{R,ell} applied to the coefficient vector coeffs of length ell + 1. All
    entries vanish iff coeffs solves the homogenized system.
    """
    coeffs = [promote(c) for c in coeffs]
    return tuple(
        sum(
            (cpoly(p.i, p.j, c) * coeffs[c]
             for c in range(p.i + p.j, len(coeffs)) if coeffs[c]),
            MultiPoly.zero())
        for p in points)


def solve(points, mults=None):
    """
    The root-encoded solution prod (s - A_ij)^n_ij of the system over a
    staircase, verified against M_{R,ell} with ell = sum of the n_ij.
    """
    points.require_staircase()
    mults = as_multiplicity(points, mults)
    for p, n in mults.items():
        if n <= 0:
            raise ValueError(f'Multiplicity of {tuple(p)} must be positive, got {n}')
    b = root_polynomial(points, mults)
    log.debug('solving over %s with ell=%d', points, b.degree)
    if any(residual(points, b.coeffs)):
        raise VerificationFailed(f'Nonzero residual for {points} with {mults}')
    return b


def _grid(k1, k2):
    return [(i, j) for i in range(k1 + 1) for j in range(k2 + 1)]


def c_coeff(k1, k2, i, j):
    return math.comb(k1, i) * math.comb(k2, j) * (-1) ** (k1 + k2 - i - j)


def d_coeff(k1, k2, i, j):
    return (math.comb(k1, i) * math.comb(k2, j)
            * math.factorial(i) * math.factorial(j))


def _c_side(k1, k2, ell, cells):
    return sum(
        (c_coeff(k1, k2, i, j) * root_form((i, j)) ** ell for i, j in cells),
        MultiPoly.zero())


def _d_side(k1, k2, ell, cells):
    return sum(
        (d_coeff(k1, k2, i, j) * cpoly(i, j, ell) for i, j in cells),
        MultiPoly.zero())


def vanishing_check(k1, k2, ell=None):
    "sum c_ij A_ij^ell over the full grid vanishes for every ell < k1 + k2."
    if ell is None:
        ell = k1 + k2 - 1
    if not 0 <= ell < k1 + k2:
        raise ValueError(f'Need 0 <= ell < k1 + k2, got ell={ell}')
    return not _c_side(k1, k2, ell, _grid(k1, k2))


def lemma_comb_check(k1, k2, ell, part):
    """
    The inversion formulas between the C(i, j, ell) and the powers A_ij^ell
    over the grid [0, k1] x [0, k2]:

      i          sum d_ij C(i, j, ell) = A_{k1 k2}^ell
      ii         k1! k2! C(k1, k2, ell) = sum c_ij A_ij^ell
      iii        both sums restricted to the grid without its corner agree
                 up to sign
      vanishing  sum c_ij A_ij^ell = 0 for ell < k1 + k2
    """
    _check_indices(k1, k2, ell)
    grid = _grid(k1, k2)
    if part == 'i':
        return _d_side(k1, k2, ell, grid) == root_form((k1, k2)) ** ell
    if part == 'ii':
        scale = math.factorial(k1) * math.factorial(k2)
        return scale * cpoly(k1, k2, ell) == _c_side(k1, k2, ell, grid)
    if part == 'iii':
        punctured = [cell for cell in grid if cell != (k1, k2)]
        return _c_side(k1, k2, ell, punctured) == -_d_side(k1, k2, ell, punctured)
    if part == 'vanishing':
        return vanishing_check(k1, k2, ell)
    raise ValueError(f'Unknown part {part!r}')


def det_bareiss(points):
    "det M_R by fraction-free elimination, rows in the order of points."
    r = len(points)
    if r == 0:
        return MultiPoly.one()
    log.debug('Bareiss determinant of a %d x %d matrix', r, r)
    return bareiss(build_matrix(points, r - 1).entries)


def orientation_sign(r):
    "The sign relating pair products taken in opposite orientations."
    return -1 if (r * (r - 1) // 2) % 2 else 1


CONVENTIONS = ('rows', 'reversed')


def closed_form_factors(points, convention='rows'):
    """
    The rational prefactor and the linear factors of the closed-form
    determinant. With convention 'rows' the factor for rows p before q is
    A_q - A_p, which is the determinant of the matrix with rows in the given
    order; with 'reversed' it is A_p - A_q.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f'Unknown convention {convention!r}')
    prefactor = Fraction(1, product(
        math.factorial(p.i) * math.factorial(p.j) for p in points))
    roots = [root_form(p) for p in points]
    factors = [
        (roots[q] - roots[p]) if convention == 'rows' else (roots[p] - roots[q])
        for p in range(len(roots)) for q in range(p + 1, len(roots))
    ]
    return prefactor, factors


def det_closed_form(points, convention='rows'):
    if len(points) < 2:
        return det_bareiss(points)
    points.require_staircase()
    prefactor, factors = closed_form_factors(points, convention)
    det = product(factors, MultiPoly.one()) * prefactor
    if not det.is_integral:
        raise VerificationFailed(f'Closed-form determinant {det} is not integral')
    return det


COUNTEREXAMPLE = PointSet([(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (0, 4)])
COUNTEREXAMPLE_BASE = PointSet(COUNTEREXAMPLE.points[:6])
COUNTEREXAMPLE_DET = (
    '-2 x^6 y^7 (2x - y)(3x - y)(x - 2y)(3x - 2y)(x - y)^2 '
    '(11x^2 - 42x y + 37y^2)')
COUNTEREXAMPLE_ROOT = (
    '11s x^2 - 42s x y + 37s y^2 + 6x^3 - 175y^3 - 11x^2 z - 77x^2 y '
    '+ 42x y z - 37y^2 z + 222x y^2')
COUNTEREXAMPLE_QUADRATIC = '11x^2 - 42x y + 37y^2'
COUNTEREXAMPLE_REMAINDER = '(3x - 7y)(2x^2 - 21x y + 25y^2)'


def split_variable(p, name):
    "View p, a polynomial over XYZ plus name, as a polynomial in name."
    k = p.gens.index(name)
    coeffs = {}
    for exps, c in p.items():
        rest = exps[:k] + exps[k + 1:]
        coeffs.setdefault(exps[k], {})[rest] = c
    return UniPoly(
        [MultiPoly(coeffs.get(e, {})) for e in range(p.degree_in(name) + 1)])


@dataclass(frozen=True)
class CounterexampleReport:

    clauses: dict
    determinant: MultiPoly
    sign: int

    def __bool__(self):
        return all(self.clauses.values())


def verify_counterexample():
    """
    Check the non-staircase set whose system has no polynomial solution:
      determinant  det M_R is the printed factorization, up to orientation
      solution     the rational solution, denominators cleared, kills M_{R,7}
      factor       det M_R = det M_{R0} y^4 q for the staircase part R0
      remainder    the constant term of the root factor factors as printed
    """
    x, y, z = map(MultiPoly.var, XYZ)
    det = det_bareiss(COUNTEREXAMPLE)
    printed = parse_poly(COUNTEREXAMPLE_DET)
    sign = 1 if det == printed else -1 if det == -printed else 0
    quadratic = parse_poly(COUNTEREXAMPLE_QUADRATIC)
    root = split_variable(parse_poly(COUNTEREXAMPLE_ROOT, XYZ + ('s',)), 's')
    cleared = b_R(COUNTEREXAMPLE_BASE) * root
    clauses = {
        'determinant': det * orientation_sign(len(COUNTEREXAMPLE)) == printed,
        'solution': (
            cleared.coeffs[-1] == quadratic
            and not any(residual(COUNTEREXAMPLE, cleared.coeffs))),
        'factor': det == det_bareiss(COUNTEREXAMPLE_BASE) * y ** 4 * quadratic,
        'remainder': (
            root.degree == 1
            and root.coeffs[1] == quadratic
            and root.coeffs[0] + quadratic * z
            == parse_poly(COUNTEREXAMPLE_REMAINDER)),
    }
    log.debug('counterexample clauses: %s', clauses)
    return CounterexampleReport(clauses, det, sign)


def necessity_witness(max_r=4):
    """
    A staircase and multiplicities with one n_ij = 0 and sum >= r whose root
    polynomial does not solve the system, or None.
    """
    for r in range(2, max_r + 1):
        for points in staircases(r):
            for dropped in range(r):
                mults = [1] * r
                mults[dropped] = 0
                mults[(dropped + 1) % r] += 1
                b = root_polynomial(points, mults)
                leftover = residual(points, b.coeffs)
                if any(leftover):
                    return points, tuple(mults), leftover
    return None


def gauss_solve(matrix, rhs):
    "Solve a square rational system exactly, None if it is singular."
    n = len(matrix)
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if rows[i][k]), None)
        if pivot is None:
            return None
        rows[k], rows[pivot] = rows[pivot], rows[k]
        head = rows[k][k]
        rows[k] = [v / head for v in rows[k]]
        for i in range(n):
            if i != k and rows[i][k]:
                factor = rows[i][k]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[k])]
    return [row[n] for row in rows]


def uniqueness_spot_check(points, point):
    """
    Specialize M_{R,r} at a rational point (x, y, z), solve the square system
    over the rationals and compare with the evaluated coefficients of b_R.
    None if the specialized determinant vanishes.
    """
    r = len(points)
    matrix = build_matrix(points, r)
    values = [[evaluate(entry, point) for entry in row] for row in matrix.entries]
    solution = gauss_solve([row[:r] for row in values], [-row[r] for row in values])
    if solution is None:
        return None
    expected = [evaluate(c, point) for c in b_R(points).coeffs[:r]]
    return solution == expected
