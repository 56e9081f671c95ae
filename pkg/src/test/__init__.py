# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


import pytest
from hypothesis import strategies as st

from stirsys.polyring import XYZ, MultiPoly
from stirsys.operators import parse_poly


def poly_eq(a, b):
    assert a == b, f'{a} != {b}'


def text_eq(p, text, gens=XYZ):
    "p equals the polynomial written as text."
    poly_eq(p, parse_poly(text, gens))


def check_all(test, *cases):
    for case in cases:
        try:
            assert test(*case)
        except BaseException:
            print(case)
            raise


def check_all_raise(error, func, *invalid):
    for each in invalid:
        try:
            with pytest.raises(error):
                func(*each)
        except BaseException:
            print(each)
            raise


def polys(gens=XYZ, max_exp=2, max_terms=4):
    "Small polynomials with integer coefficients over gens."
    exponents = st.tuples(*[st.integers(0, max_exp)] * len(gens))
    terms = st.dictionaries(exponents, st.integers(-5, 5), max_size=max_terms)
    return terms.map(lambda t: MultiPoly(t, gens))
