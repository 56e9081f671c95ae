#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


# The seven point set that is not a staircase: its system still has a
# unique solution, but that solution is not a root polynomial.


from stirsys import (
    PointSet, det_bareiss, det_closed_form, is_staircase, solve,
    verify_counterexample,
)
from stirsys.csys import COUNTEREXAMPLE, COUNTEREXAMPLE_BASE


def main():

    print('points:', COUNTEREXAMPLE)
    print('staircase:', is_staircase(COUNTEREXAMPLE))

    report = verify_counterexample()
    for clause, ok in report.clauses.items():
        print(f'  {clause:<12} {"holds" if ok else "FAILS"}')
    print('determinant:', report.determinant)
    print('sign against the printed form:', report.sign)

    print()
    print('the staircase it extends:', COUNTEREXAMPLE_BASE)
    b = solve(COUNTEREXAMPLE_BASE)
    print('root polynomial of degree', b.degree)
    assert det_bareiss(COUNTEREXAMPLE_BASE) == det_closed_form(COUNTEREXAMPLE_BASE)

    for text in ('0,0;1,0;0,1;0,3', '0,0;2,0'):
        points = PointSet.parse(text)
        print(text, 'det =', det_bareiss(points))


if __name__ == '__main__':
    main()
