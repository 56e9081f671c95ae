# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


__all__ = [
    'Certificate',
    'ReductionResult',
    'reduce_set',
    'representative_choices',
    'lemgp0_check',
    'lemgp_check',
    'check_certificates',
    'check_system_equivalence',
    'solve_reduced',
    'solve_quotient',
    'reduced_b',
    'r0',
    'det_quotient_closed_form',
    'check_quotient_determinant',
    'heredity_check',
]


import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from toolz.itertoolz import groupby

from .util import falling, product, rpartial
from .polyring import Case, MultiPoly, QuotientRel, UniPoly, reduce_mod
from .csys import (
    Point, PointSet, VerificationFailed, as_multiplicity, build_matrix,
    closed_form_factors, cpoly, det_bareiss, graded_key, residual,
    root_form, root_polynomial,
)


log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:

    """
    The row of point, reduced modulo the relation, equals the combination of
    kept rows given by combination (kept point -> rational coefficient). An
    empty combination says the row reduces to zero.
    """

    point: Point
    combination: dict

    def to_json(self):
        return {
            'point': list(self.point),
            'combination': [
                [p.i, p.j, str(c)] for p, c in sorted(self.combination.items())],
        }


@dataclass(frozen=True)
class ReductionResult:

    rel: QuotientRel
    points: PointSet
    reduced_set: PointSet
    classes: tuple
    dropped_rows: tuple

    @property
    def r0(self):
        return len(self.reduced_set)

    def to_json(self):
        return {
            'case': self.rel.case.value,
            'rel': str(self.rel),
            'reduced_set': self.reduced_set.to_json(),
            'classes': [[list(p) for p in members] for members in self.classes],
            'certificates': [cert.to_json() for cert in self.dropped_rows],
        }


def _accumulate(target, source, factor):
    for p, c in source.items():
        value = target.get(p, 0) + factor * c
        if value:
            target[p] = value
        else:
            target.pop(p, None)


def _puti_weight(a, b, k, i, j):
    return (falling(a, i) * falling(b, j)
            * math.comb(k.i + i, k.i) * math.comb(k.j + j, k.j))


def puti_terms(a, b, k):
    """
    The weighted points of the vanishing row relation based at k for the
    step (a, b): pairs (k + (i, j), weight) over the box [0, a] x [0, b]
    without its origin.
    """
    return [
        (k.shifted(i, j), _puti_weight(a, b, k, i, j))
        for i in range(a + 1) for j in range(b + 1) if (i, j) != (0, 0)
    ]


def granputa_terms(a, b, k):
    """
    The two weighted sides of the row relation between (k1, k2) and
    (k1 + a, k2 - b), which holds modulo a x - b y. The last entry of the
    left side is the lower point, the last entry of the right side is k.
    """
    if k.j < b:
        raise ValueError(f'Need k2 >= b, got k2={k.j}, b={b}')
    base = k.j - b
    left = [
        (Point(k.i + j, base), falling(a, j) * math.comb(k.i + j, k.i))
        for j in range(1, a + 1)
    ]
    right = [
        (Point(k.i, base + j), falling(b, j) * math.comb(base + j, base))
        for j in range(1, b + 1)
    ]
    return left, right


def _pos_certificates(points, kept, step):
    a, b = step
    expansions = {p: {p: Fraction(1)} for p in kept}
    certificates = []
    dropped = [p for p in points if p not in kept]
    for p in sorted(dropped, key=graded_key):
        base = p.shifted(-a, -b)
        terms = puti_terms(a, b, base)
        (top, lead), rest = terms[-1], terms[:-1]
        assert top == p
        combination = {}
        for q, weight in rest:
            _accumulate(combination, expansions[q], -Fraction(weight, lead))
        expansions[p] = combination
        certificates.append(Certificate(p, combination))
    return certificates


def _neg_certificates(classes, representatives):
    expansions = {}
    certificates = []
    for members in classes:
        keep = representatives[members]
        index = members.index(keep)
        expansions[keep] = {keep: Fraction(1)}
        # members run from the highest to the lowest point of the class
        for q in range(index - 1, -1, -1):
            upper, lower = members[q], members[q + 1]
            left, right = granputa_terms(lower.i - upper.i, upper.j - lower.j, upper)
            (_, known), rest_left = left[-1], left[:-1]
            (_, lead), rest_right = right[-1], right[:-1]
            combination = {}
            _accumulate(combination, expansions[lower], Fraction(known, lead))
            for p, weight in rest_left:
                _accumulate(combination, expansions[p], Fraction(weight, lead))
            for p, weight in rest_right:
                _accumulate(combination, expansions[p], -Fraction(weight, lead))
            expansions[upper] = combination
            certificates.append(Certificate(upper, combination))
        for q in range(index + 1, len(members)):
            upper, lower = members[q - 1], members[q]
            left, right = granputa_terms(lower.i - upper.i, upper.j - lower.j, upper)
            (_, lead), rest_left = left[-1], left[:-1]
            (_, known), rest_right = right[-1], right[:-1]
            combination = {}
            _accumulate(combination, expansions[upper], Fraction(known, lead))
            for p, weight in rest_right:
                _accumulate(combination, expansions[p], Fraction(weight, lead))
            for p, weight in rest_left:
                _accumulate(combination, expansions[p], -Fraction(weight, lead))
            expansions[lower] = combination
            certificates.append(Certificate(lower, combination))
    return certificates


def neg_classes(points, rel):
    """
    The classes of points differing by a rational multiple of (a, -b),
    ordered by their invariant b i + a j, each from its highest point down.
    """
    a, b = rel.step
    by_weight = groupby(lambda p: b * p.i + a * p.j, points)
    return tuple(
        tuple(sorted(by_weight[w], key=lambda p: -p.j))
        for w in sorted(by_weight))


POLICIES = {
    'lowest': lambda members: min(members, key=lambda p: p.j),
    'highest': lambda members: max(members, key=lambda p: p.j),
}


def _policy(policy):
    if callable(policy):
        return policy
    try:
        return POLICIES[policy]
    except KeyError:
        raise ValueError(f'Unknown representative policy {policy!r}') from None


def _reduce_neg(points, rel, classes, representatives):
    kept = set(representatives.values())
    reduced = PointSet([p for p in points if p in kept])
    certificates = _neg_certificates(classes, representatives)
    return ReductionResult(rel, points, reduced, classes, tuple(certificates))


def reduce_set(points, rel, policy='lowest'):
    """
    Choose the rows that carry the system modulo rel and certify every other
    row as a rational combination of them.

    For ax + by the kept points are those whose predecessor by the primitive
    step is not in the set. For ax - by one point per class is kept, picked
    by policy ('lowest', 'highest' or a callable on the class). For the axis
    relations the points on the surviving axis are kept.
    """
    points.require_staircase()
    if rel.case is Case.POS:
        a, b = rel.step
        kept = [p for p in points if p.shifted(-a, -b) not in points]
        reduced = PointSet(kept)
        certificates = _pos_certificates(points, reduced, rel.step)
        result = ReductionResult(rel, points, reduced, (), tuple(certificates))
    elif rel.case is Case.NEG:
        choose = _policy(policy)
        classes = neg_classes(points, rel)
        representatives = {members: choose(members) for members in classes}
        result = _reduce_neg(points, rel, classes, representatives)
    else:
        on_axis = (lambda p: p.i == 0) if rel.case is Case.X_ZERO else (lambda p: p.j == 0)
        reduced = PointSet([p for p in points if on_axis(p)])
        certificates = [Certificate(p, {}) for p in points if not on_axis(p)]
        result = ReductionResult(rel, points, reduced, (), tuple(certificates))
    log.debug('reduced %s modulo %s to %s', points, rel, result.reduced_set)
    return result


def representative_choices(points, rel):
    "Every admissible reduction; more than one only for ax - by."
    if rel.case is not Case.NEG:
        yield reduce_set(points, rel)
        return
    points.require_staircase()
    classes = neg_classes(points, rel)
    for choice in itertools.product(*classes):
        yield _reduce_neg(points, rel, classes, dict(zip(classes, choice)))


def lemgp0_check(a, b, k1, k2, ell):
    "The weighted rows over the box [0, a] x [0, b] above (k1, k2) vanish modulo ax + by."
    rel = QuotientRel.pos(a, b)
    total = sum(
        (weight * cpoly(p.i, p.j, ell) for p, weight in puti_terms(a, b, Point(k1, k2))),
        MultiPoly.zero())
    return not reduce_mod(total, rel)


def lemgp_check(a, b, k1, k2, ell):
    "The two sides of the row relation from (k1, k2) down to (k1 + a, k2 - b) agree modulo ax - by."
    rel = QuotientRel.neg(a, b)
    left, right = granputa_terms(a, b, Point(k1, k2))

    def side(terms):
        return sum(
            (weight * cpoly(p.i, p.j, ell) for p, weight in terms),
            MultiPoly.zero())

    return reduce_mod(side(left), rel) == reduce_mod(side(right), rel)


def check_certificates(result, ell):
    "Every certificate in result holds for the rows of M_{R,ell} modulo the relation."
    matrix = build_matrix(result.points, ell)
    reduce = rpartial(reduce_mod, result.rel)
    for cert in result.dropped_rows:
        row = list(matrix.row(cert.point))
        for p, c in cert.combination.items():
            row = [entry - c * other for entry, other in zip(row, matrix.row(p))]
        if any(map(reduce, row)):
            log.debug('certificate for %s fails at ell=%d', cert.point, ell)
            return False
    return True


def check_system_equivalence(points, rel, ell, policy='lowest'):
    return check_certificates(reduce_set(points, rel, policy), ell)


def distinct_normal_forms(points, rel):
    forms = []
    for p in points:
        form = reduce_mod(root_form(p), rel)
        if form not in forms:
            forms.append(form)
    return forms


def r0(points, rel):
    "The number of distinct A_ij modulo rel."
    return len(distinct_normal_forms(points, rel))


def reduced_b(points, rel):
    "(b_R)_red in the quotient ring: one linear factor per distinct A_ij."
    return UniPoly.from_roots(distinct_normal_forms(points, rel), gens=rel.normal_gens)


def solve_reduced(result, mults=None):
    """
    The root-encoded solution over result.reduced_set, verified against the
    full matrix M_{R,ell} modulo the relation.
    """
    kept = result.reduced_set
    mults = as_multiplicity(kept, mults)
    for p, n in mults.items():
        if n <= 0:
            raise ValueError(f'Multiplicity of {tuple(p)} must be positive, got {n}')
    b = root_polynomial(kept, mults)
    leftover = residual(result.points, b.coeffs)
    if any(reduce_mod(entry, result.rel) for entry in leftover):
        raise VerificationFailed(
            f'Nonzero residual modulo {result.rel} for {result.points} with {mults}')
    return b


def solve_quotient(points, rel, mults=None, policy='lowest'):
    return solve_reduced(reduce_set(points, rel, policy), mults)


def det_quotient_closed_form(kept, rel):
    "The closed-form determinant of M_H, rows in the order of H, modulo rel."
    if len(kept) < 2:
        return reduce_mod(det_bareiss(kept), rel)
    prefactor, factors = closed_form_factors(kept)
    return reduce_mod(product(factors, MultiPoly.one()) * prefactor, rel)


def check_quotient_determinant(kept, rel):
    closed = det_quotient_closed_form(kept, rel)
    return bool(closed) and closed == reduce_mod(det_bareiss(kept), rel)


def heredity_check(points, rel):
    "For ax + by the reduced set of a staircase is again a staircase."
    if rel.case is not Case.POS:
        raise ValueError(f'Heredity only holds for ax + by, not {rel}')
    return reduce_set(points, rel).reduced_set.is_staircase
