# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


import itertools
import math
import operator
from functools import partial, reduce as foldl
from itertools import tee, zip_longest

from toolz.functoolz import flip


decrement = (-1).__add__


def const(x):
    "The K combinator"
    return lambda _: x


_sentinel = object()


def rpartial(f, *args, **kwargs):
    return partial(flip(f), *args, **kwargs)


def pairwise(iterable, *, fillvalue=_sentinel):
    a, b = tee(iterable)
    next(b, None)  # advance b by one position
    if fillvalue is _sentinel:
        return zip(a, b)
    else:
        return zip_longest(a, b, fillvalue=fillvalue)


def product(factors, start=1):
    "Fold with *, so that it works for any ring element and not just numbers."
    return foldl(operator.mul, factors, start)


def falling(n, k):
    "The falling factorial n (n-1) ... (n-k+1)."
    return product(n - i for i in range(k))


def binomial(n, k):
    """
    Binomial coefficient for any integer n and integer k, with the usual
    extension n(n-1)...(n-k+1)/k! to negative n, so binomial(-1, 0) == 1.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return falling(n, k) // math.factorial(k)


def compositions(total, parts):
    "All ways to write total as an ordered sum of parts positive integers."
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in pairwise(bounds))


def count_compositions(total, parts):
    if parts == 0:
        return int(total == 0)
    return math.comb(total - 1, parts - 1)


def random_composition(rng, total, parts):
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    bounds = [0] + cuts + [total]
    return tuple(b - a for a, b in pairwise(bounds))


def partitions(n, largest=None):
    "Integer partitions of n as weakly decreasing tuples, largest part first."
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest
