# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


__all__ = [
    'IdentityReport',
    'palma_check',
    'palma_restated_check',
    'gen_palma_check',
    'convolution_check',
    'spec_b1_checks',
    'spec_abt_check',
    'weighted_stirling',
    'weighted_stirling_reports',
    'weighted_stirling_check',
    'gen_stirling_checks',
    'generating_function_check',
    'first_kind_system_check',
    's1_report',
    'IDENTITIES',
]


import math
from dataclasses import dataclass
from fractions import Fraction

from .util import falling
from .polyring import XYZ, MultiPoly, TruncSeries, evaluate, substitute
from .stirling import s1_closed_form, stirling1, stirling2
from .csys import (
    PointSet, VerificationFailed, b_R, cpoly, gauss_solve, root_form,
)
from .quotient import lemgp_check


@dataclass(frozen=True)
class IdentityReport:

    identity: str
    params: tuple
    left: str
    right: str
    verdict: bool
    details: tuple = ()

    def __bool__(self):
        return self.verdict

    def to_json(self):
        return {
            'identity': self.identity,
            'params': list(self.params),
            'left': self.left,
            'right': self.right,
            'verdict': self.verdict,
            'details': [each.to_json() for each in self.details],
        }


def compare(identity, params, left, right):
    return IdentityReport(identity, tuple(params), str(left), str(right), left == right)


def combine(identity, params, details):
    details = tuple(details)
    return IdentityReport(
        identity, tuple(params), '', '', all(details), details)


def _zero():
    return MultiPoly.zero()


def palma_check(n, m):
    """
    sum_k binom(n, k) (-1)^k (x k + y)^m
        = (-1)^n n! sum_j binom(m, j) x^j y^(m-j) S(j, n)
    """
    x, y, _ = map(MultiPoly.var, XYZ)
    left = sum(
        (math.comb(n, k) * (-1) ** k * (k * x + y) ** m for k in range(n + 1)),
        _zero())
    right = (-1) ** n * math.factorial(n) * sum(
        (math.comb(m, j) * stirling2(j, n) * x ** j * y ** (m - j)
         for j in range(n, m + 1)),
        _zero())
    return compare('palma', (n, m), left, right)


def palma_restated_check(n, m):
    "sum_k binom(n, k) (-1)^k A_k0^m = (-1)^n n! C(n, 0, m)"
    left = sum(
        (math.comb(n, k) * (-1) ** k * root_form((k, 0)) ** m for k in range(n + 1)),
        _zero())
    right = (-1) ** n * math.factorial(n) * cpoly(n, 0, m)
    return compare('palma_restated', (n, m), left, right)


def gen_palma_check(k1, k2, ell):
    """
    The alternating sum of (i x + j y + z)^ell over the grid [0, k1] x [0, k2]
    with weights (-1)^(k1+k2-i-j) / (i! j! (k1-i)! (k2-j)!) is C(k1, k2, ell).
    For k2 = 0 the classical two-variable identity is checked alongside.
    """
    left = sum(
        (
            Fraction(
                (-1) ** (k1 + k2 - i - j),
                math.factorial(i) * math.factorial(j)
                * math.factorial(k1 - i) * math.factorial(k2 - j))
            * root_form((i, j)) ** ell
            for i in range(k1 + 1) for j in range(k2 + 1)
        ),
        _zero())
    report = compare('gen_palma', (k1, k2, ell), left, cpoly(k1, k2, ell))
    if k2:
        return report
    details = (palma_check(k1, ell), palma_restated_check(k1, ell))
    return IdentityReport(
        report.identity, report.params, report.left, report.right,
        report.verdict and all(details), details)


def _on_diagonal(p):
    "Specialize x = y, z = 0."
    return substitute(p, {'y': MultiPoly.var('x'), 'z': 0})


def convolution_check(k1, k2, ell):
    """
    binom(k1+k2, k1) S(ell, k1+k2) = sum_i binom(ell, i) S(ell-i, k2) S(i, k1),
    together with the row chain C(k1, k2, ell) = binom(k1+k2, k1) C(k1+k2, 0, ell)
    on the diagonal x = y, z = 0 that it comes from.
    """
    if k2 <= 0:
        raise ValueError(f'Need k2 > 0, got {k2}')
    left = math.comb(k1 + k2, k1) * stirling2(ell, k1 + k2)
    right = sum(
        math.comb(ell, i) * stirling2(ell - i, k2) * stirling2(i, k1)
        for i in range(k1, ell - k2 + 1))
    steps = all(lemgp_check(1, 1, k1 + m, k2 - m, ell) for m in range(k2))
    x = MultiPoly.var('x')
    chain = (
        compare(
            'convolution_chain', (k1, k2, ell),
            _on_diagonal(cpoly(k1, k2, ell)),
            math.comb(k1 + k2, k1) * _on_diagonal(cpoly(k1 + k2, 0, ell))),
        compare(
            'convolution_diagonal', (k1, k2, ell),
            _on_diagonal(cpoly(k1, k2, ell)), right * x ** ell),
        IdentityReport(
            'convolution_steps', (k1, k2, ell), '', '', steps),
    )
    return IdentityReport(
        'convolution', (k1, k2, ell), str(left), str(right),
        left == right and all(chain), chain)


def spec_b1_checks(a, k1, k2, ell):
    """
    The two Stirling identities obtained on y = a x, z = 0 from the row
    relation for b = 1, based at (k1, 1) and at (0, k2).
    """
    if a <= 0 or k2 <= 0:
        raise ValueError(f'Need a > 0 and k2 > 0, got a={a}, k2={k2}')
    first = compare(
        'spec_b1_first', (a, k1, ell),
        sum(
            falling(a, j) * math.comb(k1 + j, k1) * stirling2(ell, k1 + j)
            for j in range(1, a + 1)),
        sum(
            math.comb(ell, i) * stirling2(i, k1) * a ** (ell - i)
            for i in range(k1, ell)))
    second = compare(
        'spec_b1_second', (a, k2, ell),
        Fraction(k2 * stirling2(ell, k2)),
        sum(
            (
                falling(a, j) * math.comb(ell, i) * Fraction(1, a ** i)
                * stirling2(i, j) * stirling2(ell - i, k2 - 1)
                for j in range(1, a + 1) for i in range(j, ell - k2 + 2)
            ),
            Fraction(0)))
    return combine('spec_b1', (a, k1, k2, ell), (first, second))


def _falling_sum(c, ell, t):
    return sum(
        (
            falling(c, j) * math.comb(ell, i) * stirling2(i, j) * t ** i
            for j in range(1, c + 1) for i in range(j, ell + 1)
        ),
        Fraction(0))


def spec_abt_check(a, b, t, ell):
    """
    On a x = b y, x = t z the row relation gives
    sum_j a!/(a-j)! sum_i binom(ell, i) S(i, j) t^i
        = sum_j b!/(b-j)! sum_i binom(ell, i) S(i, j) (a t / b)^i,
    both sides being (1 + a t)^ell - 1.
    """
    t = Fraction(t)
    if not t:
        raise ValueError('Need t != 0')
    left = _falling_sum(a, ell, t)
    right = _falling_sum(b, ell, a * t / b)
    closed = (1 + a * t) ** ell - 1
    return IdentityReport(
        'spec_abt', (a, b, str(t), ell), str(left), str(right),
        left == right == closed)


def weighted_stirling(n, w):
    "S(n, w, z) = C(w, 0, n) at x = 1, checked against its generating function."
    value = substitute(cpoly(w, 0, n), {'x': 1})
    z = MultiPoly.var('z')
    series = (TruncSeries.exp_t(1, n) - 1) ** w * TruncSeries.exp_t(z, n)
    if series.coefficient(n) / math.factorial(w) != value:
        raise VerificationFailed(f'Weighted Stirling S({n},{w},z) routes disagree')
    return value


def weighted_stirling_reports(n, w):
    """
    Two candidate closed forms for the weighted Stirling numbers:

      derived  w! S(n, w, z) = sum_{i<=w} binom(w, i) (-1)^(w-i) (i + z)^n
      printed  n! S(n, w, z) = sum_{i<=n} binom(n, i) (-1)^(n-1) (z + i)^n

    Only the derived form is an identity; the printed one is evaluated and
    reported as is.
    """
    z = MultiPoly.var('z')
    value = weighted_stirling(n, w)
    derived = compare(
        'weighted_derived', (n, w),
        math.factorial(w) * value,
        sum(
            (math.comb(w, i) * (-1) ** (w - i) * (z + i) ** n for i in range(w + 1)),
            _zero()))
    # (-1)^(n-1) read as a sign, so n = 0 gives -1
    sign = -1 if (n - 1) % 2 else 1
    printed = compare(
        'weighted_printed', (n, w),
        math.factorial(n) * value,
        sum(
            (math.comb(n, i) * sign * (z + i) ** n for i in range(n + 1)),
            _zero()))
    return derived, printed


def gen_stirling_checks(n, k, a):
    """
    C(k, 0, n) as the generalized Stirling number S^z(n, k, x): its defining
    sum, its alternating closed form, and the a-sum
    sum_j a!/(a-j)! S^z(n, j, x) = (a x + z)^n - z^n.
    """
    if a <= 0:
        raise ValueError(f'Need a > 0, got {a}')
    x, _, z = map(MultiPoly.var, XYZ)
    value = cpoly(k, 0, n)
    defining = compare(
        'gen_stirling_sum', (n, k),
        sum(
            (math.comb(n, i) * stirling2(i, k) * z ** (n - i) * x ** i
             for i in range(n + 1)),
            _zero()),
        value)
    closed = compare(
        'gen_stirling_closed', (n, k),
        sum(
            (math.comb(k, i) * (-1) ** (k - i) * (i * x + z) ** n
             for i in range(k + 1)),
            _zero()) / math.factorial(k),
        value)
    a_sum = compare(
        'gen_stirling_a_sum', (n, a),
        sum((falling(a, j) * cpoly(j, 0, n) for j in range(1, a + 1)), _zero()),
        (a * x + z) ** n - z ** n)
    return combine('gen_stirling', (n, k, a), (defining, closed, a_sum))


def generating_function_check(k1, k2, order):
    """
    (e^(xt) - 1)^k1 (e^(yt) - 1)^k2 e^(zt) = k1! k2! sum C(k1, k2, ell) t^ell / ell!
    through t^order.
    """
    x, y, z = map(MultiPoly.var, XYZ)
    series = (
        (TruncSeries.exp_t(x, order) - 1) ** k1
        * (TruncSeries.exp_t(y, order) - 1) ** k2
        * TruncSeries.exp_t(z, order))
    scale = math.factorial(k1) * math.factorial(k2)
    expected = TruncSeries(
        [scale * cpoly(k1, k2, ell) for ell in range(order + 1)], order)
    return IdentityReport(
        'generating_function', (k1, k2, order), '', '', series == expected)


def first_kind_system_check(d):
    """
    The upper triangular system (S(i, j)) a = -(S(d, j)) of size d is solved
    by the first kind numbers a_k = s(d, k), which are also the coefficients
    of b_R for R = (0,0), ..., (d-1,0) at x = 1, y = z = 0.
    """
    matrix = [[stirling2(i, j) for i in range(d)] for j in range(d)]
    rhs = [-stirling2(d, j) for j in range(d)]
    expected = [stirling1(d, k) for k in range(d + 1)]
    solution = gauss_solve(matrix, rhs)
    system = IdentityReport(
        'first_kind_system', (d,), str(solution), str(expected[:d]),
        solution == expected[:d])
    point = {'x': 1, 'y': 0, 'z': 0}
    roots = [
        evaluate(c, point)
        for c in b_R(PointSet([(i, 0) for i in range(d)])).coeffs]
    roots_report = IdentityReport(
        'first_kind_roots', (d,), str(roots), str(expected), roots == expected)
    return combine('first_kind', (d,), (system, roots_report))


def s1_report(n, m):
    "The closed form of s(n, m) through second kind numbers against the table."
    return IdentityReport(
        's1_closed_form', (n, m),
        str(s1_closed_form(n, m)), str(stirling1(n, m)),
        s1_closed_form(n, m) == stirling1(n, m))


def weighted_stirling_check(n, w):
    "The derived weighted Stirling identity, with the printed form as a detail."
    derived, printed = weighted_stirling_reports(n, w)
    return IdentityReport(
        'weighted_stirling', (n, w), derived.left, derived.right,
        derived.verdict, (derived, printed))


IDENTITIES = {
    'gen_palma': gen_palma_check,
    'palma': palma_check,
    'convolution': convolution_check,
    'spec_b1': spec_b1_checks,
    'spec_abt': spec_abt_check,
    'weighted_stirling': weighted_stirling_check,
    'gen_stirling': gen_stirling_checks,
    'generating_function': generating_function_check,
    'first_kind': first_kind_system_check,
    's1_closed_form': s1_report,
}
