# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


import itertools
import math

import pytest

from . import check_all, check_all_raise, poly_eq, text_eq


def test_point_set():

    from stirsys.csys import Point, PointSet

    points = PointSet.parse('0,0; 1,0;0,1')

    assert list(points) == [Point(0, 0), Point(1, 0), Point(0, 1)]
    assert (1, 0) in points
    assert (1, 1) not in points
    assert str(points) == '0,0;1,0;0,1'
    assert points.to_json() == [[0, 0], [1, 0], [0, 1]]
    assert PointSet.from_json([[0, 0], [1, 0], [0, 1]]) == points
    assert PointSet.staircase((2, 1)) == points
    assert PointSet.parse('0,1;0,0').graded() == PointSet.parse('0,0;0,1')

    check_all_raise(
        ValueError,
        PointSet.parse,
        ('0,0;0,0',),
        ('0,-1',),
        ('0,0;x',),
        ('',),
    )
    with pytest.raises(ValueError):
        PointSet.from_json({'points': []})


def test_staircase():

    from stirsys.csys import NotStaircase, PointSet, is_staircase, staircases

    assert is_staircase(PointSet.parse('0,0;1,0;0,1;1,1'))
    assert not is_staircase(PointSet.parse('0,0;2,0'))
    assert is_staircase(PointSet([]))

    with pytest.raises(NotStaircase) as info:
        PointSet.parse('0,0;2,0').require_staircase()
    assert info.value.point == (2, 0)
    assert info.value.missing == (1, 0)

    assert [len(list(staircases(r))) for r in range(1, 7)] == [1, 2, 3, 5, 7, 11]
    assert all(points.is_staircase for points in staircases(6))
    assert list(staircases(2)) == [
        PointSet.parse('0,0;1,0'),
        PointSet.parse('0,0;0,1'),
    ]


def test_cpoly():

    from stirsys.csys import cpoly

    text_eq(cpoly(1, 0, 2), 'x^2 + 2x z')
    text_eq(cpoly(1, 1, 2), '2x y')
    text_eq(cpoly(0, 0, 4), 'z^4')
    text_eq(cpoly(2, 0, 3), '3x^2 z + 3x^3')
    assert not cpoly(2, 1, 2)
    assert str(cpoly(1, 1, 2)) == '2 * x^1 y^1'

    with pytest.raises(ValueError):
        cpoly(-1, 0, 2)


@pytest.mark.parametrize('k1, k2', itertools.product(range(4), repeat=2))
def test_cpoly_routes(k1, k2):

    from stirsys.csys import cpoly, cpoly_egf

    for ell in range(9):
        poly_eq(cpoly(k1, k2, ell), cpoly_egf(k1, k2, ell))


def test_cpoly_diagonal():

    from stirsys.csys import cpoly

    for k1, k2 in itertools.product(range(7), repeat=2):
        assert dict(cpoly(k1, k2, k1 + k2).items()) == {
            (k1, k2, 0): math.comb(k1 + k2, k1)}
        if k1 + k2:
            assert not cpoly(k1, k2, k1 + k2 - 1)


def test_matrix():

    from stirsys.csys import PointSet, build_matrix, cpoly

    points = PointSet.parse('0,0;1,0;0,1')
    matrix = build_matrix(points, 3)

    assert (matrix.rows, matrix.cols) == (3, 4)
    assert matrix.row((1, 0)) == tuple(cpoly(1, 0, c) for c in range(4))
    assert matrix.to_json()[0][0] == [[0, 0, 0, '1']]

    with pytest.raises(ValueError):
        build_matrix(points, -1)


def test_solve():

    from stirsys.csys import PointSet, b_R, residual, root_form, solve

    points = PointSet.parse('0,0;1,0;0,1')
    b = solve(points)

    assert b == b_R(points)
    assert b.degree == 3
    assert b.is_monic
    assert not any(residual(points, b.coeffs))
    for p in points:
        poly_eq(b(root_form(p)), 0 * root_form(p))

    b = solve(points, [1, 2, 1])
    assert b.degree == 4
    assert not any(residual(points, b.coeffs))

    b = solve(points, {(0, 0): 2, (1, 0): 1, (0, 1): 3})
    assert b.degree == 6


def test_solve_errors():

    from stirsys.csys import NotStaircase, PointSet, solve

    points = PointSet.parse('0,0;1,0;0,1')

    with pytest.raises(NotStaircase):
        solve(PointSet.parse('0,0;0,2'))
    with pytest.raises(ValueError):
        solve(points, [1, 0, 2])
    with pytest.raises(ValueError):
        solve(points, [1, 1])
    with pytest.raises(ValueError):
        solve(points, {(3, 3): 1})


@pytest.mark.parametrize('r', range(1, 5))
def test_solve_every_staircase(r):

    from stirsys.util import compositions
    from stirsys.csys import residual, solve, staircases

    for points in staircases(r):
        for ell in (r, r + 1, r + 2):
            for mults in compositions(ell, r):
                b = solve(points, mults)
                assert b.degree == ell
                assert not any(residual(points, b.coeffs))


def test_zero_multiplicity_can_fail():

    from stirsys.csys import necessity_witness

    witness = necessity_witness()
    assert witness is not None
    points, mults, leftover = witness
    assert 0 in mults
    assert sum(mults) >= len(points)
    assert any(leftover)


def test_lemma_comb():

    from stirsys.csys import lemma_comb_check

    for k1, k2 in itertools.product(range(4), repeat=2):
        for ell in range(8):
            for part in ('i', 'ii', 'iii'):
                assert lemma_comb_check(k1, k2, ell, part), (k1, k2, ell, part)

    with pytest.raises(ValueError):
        lemma_comb_check(1, 1, 2, 'iv')


def test_vanishing():

    from stirsys.csys import lemma_comb_check, vanishing_check

    check_all(
        vanishing_check,
        (1, 0),
        (2, 1),
        (3, 3),
        (2, 2, 0),
    )
    assert lemma_comb_check(2, 1, 1, 'vanishing')
    with pytest.raises(ValueError):
        vanishing_check(1, 1, 2)


def test_determinant_small():

    from stirsys.csys import PointSet, det_bareiss, det_closed_form

    points = PointSet.parse('0,0;1,0')
    text_eq(det_bareiss(points), 'x')
    text_eq(det_closed_form(points, 'reversed'), '-x')

    points = PointSet.parse('0,0;1,0;0,1')
    text_eq(det_bareiss(points), 'x y (y - x)')
    text_eq(det_closed_form(points), 'x y (y - x)')
    text_eq(det_closed_form(points, 'reversed'), 'x y (x - y)')

    text_eq(det_bareiss(PointSet([])), '1')
    text_eq(det_bareiss(PointSet.parse('0,0')), '1')


def test_determinant_orientation():

    from stirsys.csys import orientation_sign

    assert [orientation_sign(r) for r in range(1, 9)] == [1, -1, -1, 1, 1, -1, -1, 1]


@pytest.mark.parametrize('r', range(1, 6))
def test_determinant_closed_form(r):

    from stirsys.csys import det_bareiss, det_closed_form, orientation_sign, staircases

    for points in staircases(r):
        det = det_closed_form(points)
        assert det.is_integral
        assert det
        poly_eq(det_bareiss(points), det)
        poly_eq(det_closed_form(points, 'reversed') * orientation_sign(r), det)


def test_determinant_errors():

    from stirsys.csys import NotStaircase, PointSet, det_closed_form

    with pytest.raises(NotStaircase):
        det_closed_form(PointSet.parse('0,0;0,1;0,3'))
    with pytest.raises(ValueError):
        det_closed_form(PointSet.parse('0,0;1,0'), 'columns')


def test_counterexample():

    from stirsys.csys import verify_counterexample

    report = verify_counterexample()

    assert report.clauses == {
        'determinant': True,
        'solution': True,
        'factor': True,
        'remainder': True,
    }
    assert report
    assert report.sign == -1


def test_uniqueness_spot_check():

    from fractions import Fraction

    from stirsys.csys import PointSet, uniqueness_spot_check

    points = PointSet.parse('0,0;1,0;0,1')

    assert uniqueness_spot_check(points, (1, 2, 3))
    assert uniqueness_spot_check(points, (Fraction(1, 3), -2, Fraction(5, 2)))
    # xy(y - x) vanishes on x = y
    assert uniqueness_spot_check(points, (1, 1, 0)) is None


def test_gauss_solve():

    from fractions import Fraction

    from stirsys.csys import gauss_solve

    assert gauss_solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert gauss_solve([[1, 2], [2, 4]], [1, 2]) is None
    assert gauss_solve([], []) == []
