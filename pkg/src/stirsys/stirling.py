# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


__all__ = [
    'Kind',
    'StirlingTable',
    'FIRST',
    'SECOND',
    'stirling1',
    'stirling2',
    'stirling',
    'stirling2_closed',
    'stirling2_egf',
    's1_closed_form',
    'check_orthogonality',
    'check_power_identity',
    'check_s1_closed_form',
]


import enum
import math
import threading
from fractions import Fraction

from .util import binomial
from .polyring import MultiPoly, TruncSeries


class Kind(enum.IntEnum):
    FIRST = 1
    SECOND = 2


class StirlingTable:

    """
    A triangular table of Stirling numbers that grows on demand.

    Rows of the first kind come from multiplying the falling factorial
    x(x-1)...(x-n+1) by (x-n), rows of the second kind from
    S(n+1,k) = S(n,k-1) + k S(n,k). Entries outside 0 <= k <= n are 0.
    """

    def __init__(self, kind):
        self.kind = Kind(kind)
        self._rows = [(1,)]
        self._lock = threading.Lock()

    @property
    def max_n(self):
        return len(self._rows) - 1

    def _next_row(self, n, row):
        # row holds the entries (n, 0..n), the result (n+1, 0..n+1)
        padded = (0,) + row + (0,)
        if self.kind is Kind.FIRST:
            return tuple(
                padded[k] - n * padded[k + 1] for k in range(n + 2))
        return tuple(
            padded[k] + k * padded[k + 1] for k in range(n + 2))

    def extend(self, n):
        if n <= self.max_n:
            return
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows) - 1
                self._rows.append(self._next_row(m, self._rows[m]))

    def row(self, n):
        if n < 0:
            raise ValueError(f'Negative row index {n}')
        self.extend(n)
        return self._rows[n]

    def __getitem__(self, index):
        n, k = index
        if n < 0:
            raise ValueError(f'Negative row index {n}')
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]


FIRST = StirlingTable(Kind.FIRST)
SECOND = StirlingTable(Kind.SECOND)


def stirling1(n, k):
    "Signed Stirling number of the first kind s(n, k)."
    return FIRST[n, k]


def stirling2(n, k):
    "Stirling number of the second kind S(n, k)."
    return SECOND[n, k]


def stirling(n, k, kind=Kind.SECOND):
    return (FIRST if Kind(kind) is Kind.FIRST else SECOND)[n, k]


def stirling2_closed(n, m):
    "S(n, m) by the alternating sum over k^n."
    total = sum((-1) ** (m - k) * math.comb(m, k) * k ** n for k in range(m + 1))
    value = Fraction(total, math.factorial(m))
    assert value.denominator == 1, value
    return value.numerator


def stirling2_egf(m, n):
    "S(m, n) as the coefficient of t^m/m! in (e^t - 1)^n / n!."
    series = (TruncSeries.exp_t(MultiPoly.one(), m) - 1) ** n
    value = Fraction(series.coefficient(m).constant_term, math.factorial(n))
    assert value.denominator == 1, value
    return value.numerator


def s1_closed_form(n, m):
    "s(n, m) as an alternating sum over Stirling numbers of the second kind."
    return sum(
        (-1) ** k
        * binomial(n - 1 + k, n - m + k)
        * binomial(2 * n - m, n - m - k)
        * stirling2(n - m + k, k)
        for k in range(n - m + 1))


def check_orthogonality(d):
    "Both inversion sums between s and S give the Kronecker delta up to d."
    for m in range(d + 1):
        delta = int(m == d)
        left = sum(stirling1(k, m) * stirling2(d, k) for k in range(m, d + 1))
        right = sum(stirling1(d, k) * stirling2(k, m) for k in range(m, d + 1))
        if left != delta or right != delta:
            return False
    return True


def check_power_identity(n, kmax):
    return all(
        k ** n == sum(
            math.comb(k, m) * math.factorial(m) * stirling2(n, m)
            for m in range(k + 1))
        for k in range(1, kmax + 1))


def check_s1_closed_form(n, m):
    if not 0 <= m <= n:
        raise ValueError(f'Expected 0 <= m <= n, got n={n}, m={m}')
    return s1_closed_form(n, m) == stirling1(n, m)
