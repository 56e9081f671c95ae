# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


from .polyring import (
    TZ,
    XYZ,
    Case,
    MultiPoly,
    NotDivisible,
    QuotientRel,
    RingMismatch,
    TruncSeries,
    UniPoly,
    bareiss,
    evaluate,
    reduce_mod,
    substitute,
)
from .operators import ParseError, parse_poly
from .stirling import Kind, stirling, stirling1, stirling2
from .csys import (
    CMatrix,
    NotStaircase,
    Point,
    PointSet,
    VerificationFailed,
    b_R,
    build_matrix,
    cpoly,
    cpoly_egf,
    det_bareiss,
    det_closed_form,
    is_staircase,
    lemma_comb_check,
    residual,
    root_form,
    solve,
    staircases,
    verify_counterexample,
)
from .quotient import (
    ReductionResult,
    check_system_equivalence,
    det_quotient_closed_form,
    lemgp0_check,
    lemgp_check,
    reduce_set,
    solve_quotient,
)
from .identities import (
    IdentityReport,
    convolution_check,
    gen_palma_check,
    gen_stirling_checks,
    spec_abt_check,
    spec_b1_checks,
    weighted_stirling,
)
