# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


__all__ = [
    'Record',
    'Summary',
    'summarize',
    'stirling_sweep',
    'cpoly_sweep',
    'lemma_sweep',
    'multiplicity_draws',
    'thest_sweep',
    'det_sweep',
    'quotient_rels',
    'quotient_records',
    'quotient_sweep',
    'lemgp_sweep',
    'identities_sweep',
    'random_point',
    'uniqueness_sweep',
    'SWEEPS',
    'SEEDED',
    'run_sweep',
]


# Exhaustive and seeded checks over small parameter boxes. Every sweep is a
# generator of Records in parameter order, so that output built from it is
# deterministic for a fixed seed.


import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from toolz.itertoolz import concat

from .util import compositions, count_compositions, random_composition, rpartial
from .polyring import Case, QuotientRel, reduce_mod
from .stirling import (
    check_orthogonality, check_power_identity, check_s1_closed_form,
    stirling2, stirling2_closed, stirling2_egf,
)
from .csys import (
    VerificationFailed, cpoly, cpoly_egf, det_bareiss, det_closed_form,
    lemma_comb_check, necessity_witness, solve, staircases,
    uniqueness_spot_check, vanishing_check,
)
from .quotient import (
    check_certificates, check_quotient_determinant, heredity_check,
    lemgp0_check, lemgp_check, r0,
    reduced_b, representative_choices, solve_reduced,
)
from .identities import (
    convolution_check, first_kind_system_check, gen_palma_check,
    gen_stirling_checks, generating_function_check, s1_report,
    spec_abt_check, spec_b1_checks, weighted_stirling_check,
)


log = logging.getLogger(__name__)


SEED = 0
DRAWS = 20

ORTHOGONALITY_MAX_D = 20
CLOSED_FORM_MAX_N = 25
EGF_MAX_M = 15
POWER_MAX_N = 8
S1_MAX_N = 12

CPOLY_MAX_K = 5
CPOLY_MAX_ELL = 12
DIAGONAL_MAX_K = 6

LEMMA_MAX_K = 4
LEMMA_MAX_ELL = 10

THEST_MAX_R = 6
THEST_EXTRA_ELL = 2
DET_MAX_R = 6

QUOTIENT_MAX_R = 5
REL_BOX = 3
LEMGP_MAX_K = 3
LEMGP_MAX_K2 = 4
LEMGP_MAX_ELL = 8

IDENTITY_MAX_K = 4
IDENTITY_MAX_ELL = 10
CONVOLUTION_MAX_ELL = 12
IDENTITY_MAX_A = 4
ABT_TS = (Fraction(1), Fraction(1, 2), Fraction(-2), Fraction(3))
GF_MAX_K = 3
GF_ORDER = 12
WEIGHTED_MAX_N = 8
FIRST_KIND_MAX_D = 10

UNIQUENESS_PAIRS = 10
UNIQUENESS_MAX_R = 4


@dataclass(frozen=True)
class Record:

    check: str
    params: tuple
    ok: bool
    detail: str = ''

    def to_json(self):
        record = {'check': self.check, 'params': list(self.params), 'ok': self.ok}
        if self.detail:
            record['detail'] = self.detail
        return record

    def __str__(self):
        params = ' '.join(map(str, self.params))
        detail = f'  ({self.detail})' if self.detail else ''
        return f'{"PASS" if self.ok else "FAIL"} {self.check} {params}{detail}'


@dataclass(frozen=True)
class Summary:

    total: int
    passed: int
    failures: tuple

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            'summary': True,
            'total': self.total,
            'passed': self.passed,
            'failed': len(self.failures),
        }

    def __str__(self):
        return f'{self.passed}/{self.total} passed, {len(self.failures)} failed'


def summarize(records):
    records = list(records)
    failures = tuple(record for record in records if not record.ok)
    return Summary(len(records), len(records) - len(failures), failures)


def stirling_sweep():
    for d in range(ORTHOGONALITY_MAX_D + 1):
        yield Record('orthogonality', (d,), check_orthogonality(d))
    for n in range(CLOSED_FORM_MAX_N + 1):
        ok = all(stirling2(n, k) == stirling2_closed(n, k) for k in range(n + 1))
        yield Record('stirling2_closed', (n,), ok)
    for m in range(EGF_MAX_M + 1):
        ok = all(stirling2(m, n) == stirling2_egf(m, n) for n in range(m + 1))
        yield Record('stirling2_egf', (m,), ok)
    for n in range(POWER_MAX_N + 1):
        yield Record('power_identity', (n,), check_power_identity(n, n + 2))
    for n in range(S1_MAX_N + 1):
        ok = all(check_s1_closed_form(n, m) for m in range(n + 1))
        yield Record('s1_closed_form', (n,), ok)


def cpoly_sweep(max_k=CPOLY_MAX_K, max_ell=CPOLY_MAX_ELL):
    for k1 in range(max_k + 1):
        for k2 in range(max_k + 1):
            for ell in range(max_ell + 1):
                ok = cpoly(k1, k2, ell) == cpoly_egf(k1, k2, ell)
                if k1 + k2 > ell:
                    ok = ok and not cpoly(k1, k2, ell)
                yield Record('cpoly_routes', (k1, k2, ell), ok)
    for k1 in range(DIAGONAL_MAX_K + 1):
        for k2 in range(DIAGONAL_MAX_K + 1):
            expected = {(k1, k2, 0): math.comb(k1 + k2, k1)}
            ok = dict(cpoly(k1, k2, k1 + k2).items()) == expected
            yield Record('cpoly_diagonal', (k1, k2), ok)


def lemma_sweep(max_k=LEMMA_MAX_K, max_ell=LEMMA_MAX_ELL):
    for k1 in range(max_k + 1):
        for k2 in range(max_k + 1):
            for ell in range(max_ell + 1):
                for part in ('i', 'ii', 'iii'):
                    ok = lemma_comb_check(k1, k2, ell, part)
                    yield Record(f'lemma_{part}', (k1, k2, ell), ok)
            if k1 + k2:
                yield Record('lemma_vanishing', (k1, k2), vanishing_check(k1, k2))


def multiplicity_draws(rng, ell, r, draws):
    "Every composition of ell into r parts when there are few, else seeded draws."
    if count_compositions(ell, r) <= draws:
        return list(compositions(ell, r))
    return [random_composition(rng, ell, r) for _ in range(draws)]


def thest_sweep(seed=SEED, draws=DRAWS, max_r=THEST_MAX_R):
    rng = random.Random(seed)
    for r in range(1, max_r + 1):
        for points in staircases(r):
            for ell in range(r, r + THEST_EXTRA_ELL + 1):
                for mults in multiplicity_draws(rng, ell, r, draws):
                    try:
                        solve(points, mults)
                        ok = True
                    except VerificationFailed:
                        ok = False
                    yield Record('thest', (str(points), ell, mults), ok)
    witness = necessity_witness(max(2, min(max_r, 4)))
    detail = '' if witness is None else f'{witness[0]} with {witness[1]}'
    yield Record('thest_necessity', (), witness is not None, detail)


def det_sweep(max_r=DET_MAX_R):
    for r in range(1, max_r + 1):
        for points in staircases(r):
            closed = det_closed_form(points)
            ok = closed.is_integral and det_bareiss(points) == closed
            yield Record('det', (str(points),), ok)


def quotient_rels(box=REL_BOX):
    pairs = [(a, b) for a in range(1, box + 1) for b in range(1, box + 1)]
    return (
        [QuotientRel.pos(a, b) for a, b in pairs]
        + [QuotientRel.neg(a, b) for a, b in pairs]
        + [QuotientRel.x_zero(), QuotientRel.y_zero()])


def _quotient_failures(points, rel, result, expected_b):
    reduce = rpartial(reduce_mod, rel)
    kept = result.reduced_set
    failures = []
    try:
        b = solve_reduced(result)
    except VerificationFailed:
        failures.append('residual')
    else:
        if b.map(reduce, rel.normal_gens) != expected_b:
            failures.append('reduced_b')
    if len(kept) != r0(points, rel):
        failures.append('r0')
    if not check_quotient_determinant(kept, rel):
        failures.append('determinant')
    if not check_certificates(result, len(points) + 1):
        failures.append('certificates')
    return failures


def quotient_records(points, rel):
    """
    One record per admissible reduction of points modulo rel, naming the
    failed parts: residual, reduced_b, r0, determinant, certificates and,
    for ax + by, heredity.
    """
    expected_b = reduced_b(points, rel)
    for index, result in enumerate(representative_choices(points, rel)):
        failures = _quotient_failures(points, rel, result, expected_b)
        if rel.case is Case.POS and not heredity_check(points, rel):
            failures.append('heredity')
        yield Record(
            'quotient', (str(points), str(rel), index),
            not failures, ','.join(failures))


def quotient_sweep(max_r=QUOTIENT_MAX_R, box=REL_BOX):
    for r in range(1, max_r + 1):
        for points in staircases(r):
            for rel in quotient_rels(box):
                yield from quotient_records(points, rel)
    yield from lemgp_sweep(box)


def lemgp_sweep(box=REL_BOX):
    for a in range(1, box + 1):
        for b in range(1, box + 1):
            for k1 in range(LEMGP_MAX_K + 1):
                for ell in range(LEMGP_MAX_ELL + 1):
                    for k2 in range(LEMGP_MAX_K + 1):
                        yield Record(
                            'lemgp0', (a, b, k1, k2, ell),
                            lemgp0_check(a, b, k1, k2, ell))
                    for k2 in range(b, LEMGP_MAX_K2 + 1):
                        yield Record(
                            'lemgp', (a, b, k1, k2, ell),
                            lemgp_check(a, b, k1, k2, ell))


def _as_record(report, agrees=True):
    return Record(report.identity, report.params, bool(report) and agrees)


def identities_sweep(
        max_k=IDENTITY_MAX_K, max_ell=IDENTITY_MAX_ELL, max_a=IDENTITY_MAX_A,
        convolution_max_ell=CONVOLUTION_MAX_ELL):
    for k1 in range(max_k + 1):
        for k2 in range(max_k + 1):
            for ell in range(max_ell + 1):
                report = gen_palma_check(k1, k2, ell)
                agrees = report.verdict == lemma_comb_check(k1, k2, ell, 'ii')
                yield _as_record(report, agrees)
    for k1 in range(max_k + 1):
        for k2 in range(1, max_k + 1):
            for ell in range(convolution_max_ell + 1):
                yield _as_record(convolution_check(k1, k2, ell))
    for a in range(1, max_a + 1):
        for k1 in range(max_k + 1):
            for k2 in range(1, max_k + 1):
                for ell in range(max_ell + 1):
                    yield _as_record(spec_b1_checks(a, k1, k2, ell))
    for a in range(1, max_a + 1):
        for b in range(1, max_a + 1):
            for t in ABT_TS:
                for ell in range(max_ell + 1):
                    yield _as_record(spec_abt_check(a, b, t, ell))
    for n in range(max_ell + 1):
        for k in range(max_k + 1):
            for a in range(1, max_a + 1):
                yield _as_record(gen_stirling_checks(n, k, a))
    for k1 in range(GF_MAX_K + 1):
        for k2 in range(GF_MAX_K + 1):
            yield _as_record(generating_function_check(k1, k2, GF_ORDER))
    for n in range(WEIGHTED_MAX_N + 1):
        for w in range(n + 1):
            report = weighted_stirling_check(n, w)
            detail = 'printed form ' + ('holds' if report.details[1] else 'differs')
            yield Record(report.identity, report.params, bool(report), detail)
    for d in range(FIRST_KIND_MAX_D + 1):
        yield _as_record(first_kind_system_check(d))
    for n in range(S1_MAX_N + 1):
        for m in range(n + 1):
            yield _as_record(s1_report(n, m))


def random_point(rng):
    "A random rational point with small numerators and denominators."
    return tuple(
        Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3))


def uniqueness_sweep(seed=SEED, pairs=UNIQUENESS_PAIRS, max_r=UNIQUENESS_MAX_R):
    rng = random.Random(seed)
    candidates = list(concat(staircases(r) for r in range(2, max(max_r, 2) + 1)))
    found = 0
    while found < pairs:
        points = rng.choice(candidates)
        point = random_point(rng)
        verdict = uniqueness_spot_check(points, point)
        if verdict is None:
            log.debug('determinant vanishes at %s for %s, drawing again', point, points)
            continue
        found += 1
        yield Record('uniqueness', (str(points), ','.join(map(str, point))), verdict)


SWEEPS = {
    'stirling': stirling_sweep,
    'cpoly': cpoly_sweep,
    'lemma': lemma_sweep,
    'thest': thest_sweep,
    'det': det_sweep,
    'quotient': quotient_sweep,
    'identities': identities_sweep,
    'uniqueness': uniqueness_sweep,
}

SEEDED = frozenset({'thest', 'uniqueness'})


def run_sweep(name, seed=SEED, draws=DRAWS, max_r=None):
    """
    The records of the named sweep ('all' runs every sweep in turn). seed
    drives the randomized sweeps, draws the number of multiplicity vectors
    per case, and max_r overrides the largest staircase size where a sweep
    has one.
    """
    if name == 'all':
        for each in SWEEPS:
            yield from run_sweep(each, seed, draws, max_r)
        return
    try:
        sweep = SWEEPS[name]
    except KeyError:
        raise ValueError(f'Unknown sweep {name!r}') from None
    options = {}
    if name in SEEDED:
        options['seed'] = seed
    if name == 'thest':
        options['draws'] = draws
    if max_r is not None and name in ('thest', 'det', 'quotient', 'uniqueness'):
        options['max_r'] = max_r
    log.info('running sweep %s with %s', name, options)
    yield from sweep(**options)
