# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


import itertools

import pytest

from . import check_all, text_eq


def test_gen_palma():

    from stirsys.identities import gen_palma_check

    check_all(
        gen_palma_check,
        (0, 0, 3),
        (1, 2, 4),
        (2, 2, 7),
        (3, 1, 2),
    )

    report = gen_palma_check(2, 0, 5)
    assert report
    assert [each.identity for each in report.details] == ['palma', 'palma_restated']
    assert all(report.details)
    assert not gen_palma_check(2, 2, 7).details


def test_palma():

    from stirsys.identities import palma_check, palma_restated_check

    for n, m in itertools.product(range(5), range(8)):
        assert palma_check(n, m)
        assert palma_restated_check(n, m)


def test_convolution():

    from stirsys.identities import convolution_check

    report = convolution_check(1, 1, 2)
    assert report
    assert (report.left, report.right) == ('2', '2')
    assert [each.identity for each in report.details] == [
        'convolution_chain', 'convolution_diagonal', 'convolution_steps']

    check_all(
        convolution_check,
        (2, 3, 9),
        (0, 2, 5),
        (3, 1, 3),
    )
    with pytest.raises(ValueError):
        convolution_check(1, 0, 4)


def test_spec_b1():

    from stirsys.identities import spec_b1_checks

    check_all(
        spec_b1_checks,
        (1, 0, 1, 4),
        (2, 1, 2, 5),
        (2, 1, 2, 6),
        (3, 2, 3, 7),
    )

    report = spec_b1_checks(2, 1, 2, 5)
    first, second = report.details
    # 2 * 2 * S(5,2) + 2 * 3 * S(5,3)
    assert first.left == first.right == '210'
    # 2 * S(5,2)
    assert second.left == second.right == '30'

    with pytest.raises(ValueError):
        spec_b1_checks(0, 1, 2, 5)
    with pytest.raises(ValueError):
        spec_b1_checks(2, 1, 0, 5)


def test_spec_abt():

    from stirsys.identities import spec_abt_check

    check_all(
        spec_abt_check,
        (2, 3, 1, 5),
        (2, 1, '1/2', 6),
        (1, 4, -2, 7),
        (3, 3, 3, 0),
    )
    # both sides are (1 + 2)^5 - 1
    assert spec_abt_check(2, 3, 1, 5).left == '242'
    with pytest.raises(ValueError):
        spec_abt_check(2, 3, 0, 5)


def test_weighted_stirling():

    from stirsys.identities import (
        weighted_stirling, weighted_stirling_check, weighted_stirling_reports,
    )

    text_eq(weighted_stirling(3, 0), 'z^3')
    text_eq(weighted_stirling(4, 4), '1')
    # S(3, 1, z) = (1 + z)^3 - z^3
    text_eq(weighted_stirling(3, 1), '3z^2 + 3z + 1')

    derived, printed = weighted_stirling_reports(5, 2)
    assert derived
    assert printed.identity == 'weighted_printed'

    for n in range(7):
        for w in range(n + 1):
            report = weighted_stirling_check(n, w)
            assert report
            assert len(report.details) == 2


def test_gen_stirling():

    from stirsys.identities import gen_stirling_checks

    check_all(
        gen_stirling_checks,
        (5, 2, 1),
        (6, 3, 3),
        (0, 0, 2),
        (4, 5, 2),
    )
    assert len(gen_stirling_checks(5, 2, 1).details) == 3
    with pytest.raises(ValueError):
        gen_stirling_checks(5, 2, 0)


def test_generating_function():

    from stirsys.identities import generating_function_check

    check_all(
        generating_function_check,
        (2, 1, 6),
        (0, 0, 4),
        (1, 3, 5),
    )


def test_first_kind():

    from stirsys.identities import first_kind_system_check, s1_report

    for d in range(8):
        assert first_kind_system_check(d)

    # u (u - 1)(u - 2) = u^3 - 3u^2 + 2u
    [system, roots] = first_kind_system_check(3).details
    assert roots.right == '[0, 2, -3, 1]'

    report = s1_report(5, 2)
    assert report
    assert report.right == '-50'


def test_report_json():

    from stirsys.identities import convolution_check

    document = convolution_check(1, 1, 2).to_json()

    assert document['identity'] == 'convolution'
    assert document['params'] == [1, 1, 2]
    assert document['verdict'] is True
    assert [each['identity'] for each in document['details']] == [
        'convolution_chain', 'convolution_diagonal', 'convolution_steps']


def test_registry():

    from stirsys.identities import IDENTITIES

    assert set(IDENTITIES) == {
        'gen_palma', 'palma', 'convolution', 'spec_b1', 'spec_abt',
        'weighted_stirling', 'gen_stirling', 'generating_function',
        'first_kind', 's1_closed_form',
    }
    assert IDENTITIES['convolution'](1, 1, 2)


def test_weighted_stirling_empty_row():

    from stirsys.identities import weighted_stirling_check, weighted_stirling_reports

    report = weighted_stirling_check(0, 0)
    assert report
    derived, printed = report.details
    assert derived
    # 0! S(0, 0, z) = 1 against the single term (-1)^(-1) z^0
    assert (printed.left, printed.right) == ('1', '-1')
    assert not printed
    assert weighted_stirling_reports(1, 0)[0]
