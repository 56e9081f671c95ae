#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


from stirsys import (
    PointSet, QuotientRel, build_matrix, cpoly, reduce_mod, reduce_set,
    residual, solve, solve_quotient, staircases,
)
from stirsys.util import rpartial


def show_matrix(points, ell):
    matrix = build_matrix(points, ell)
    for p, row in zip(points, matrix.entries):
        print(f'  {p.i},{p.j}:', ' | '.join(map(str, row)))


def main():

    print('C(1, 1, 3) =', cpoly(1, 1, 3))

    points = PointSet.parse('0,0;1,0;0,1')
    print('\nrows of', points)
    show_matrix(points, 3)

    b = solve(points)
    print('\nsolution:', b)
    print('residual:', [str(e) for e in residual(points, b.coeffs)])

    b = solve(points, [2, 1, 1])
    print('with multiplicities 2,1,1 the degree is', b.degree)

    print('\nstaircases of size 4:')
    for each in staircases(4):
        print(' ', each, 'solution degree', solve(each).degree)

    points = PointSet.parse('0,0;1,0;2,0;3,0;0,1;0,2;0,3;0,4')
    for rel in (QuotientRel.pos(1, 1), QuotientRel.neg(2, 3), QuotientRel.x_zero()):
        result = reduce_set(points, rel)
        b = solve_quotient(points, rel)
        print(f'\nmodulo {rel}: {len(points)} rows reduce to {result.reduced_set}')
        for cert in result.dropped_rows:
            print(f'  row {cert.point.i},{cert.point.j} =', dict(cert.combination))
        print('  reduced solution:', b.map(rpartial(reduce_mod, rel), rel.normal_gens))


if __name__ == '__main__':
    main()
