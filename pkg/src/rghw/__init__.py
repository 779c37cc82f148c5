"""Relative generalized Hamming weights of affine Cartesian codes.

Closed formula over the exponent box, canonical maximal families
attaining every weight, and independent brute-force oracles to check
both.  See README.md for the shape of the API and the CLI.
"""

from .boxcomb import (
    BoxShape,
    DegreeBand,
    band_size,
    cmp_lex,
    cmp_partial,
    degree,
    enumerate_band,
    footprint,
    footprint_slice,
    lex_prefix_of_slice,
    lex_rank_in_leq,
    nth_band_element,
    shadow,
    shadow_card_of_leq_prefix,
    shadow_slice,
)
from .codes import (
    CartesianCode,
    CartesianGrid,
    build_code,
    build_grid,
    membership,
    support_of_span,
)
from .errors import (
    BudgetExceeded,
    CountOutOfRange,
    DegreeOutOfRange,
    DegreeTooHigh,
    DivisionByZero,
    DuplicateElements,
    EmptyFamily,
    InvalidBand,
    InvalidNesting,
    LengthMismatch,
    NotAPrimePower,
    RankOutOfRange,
    RghwError,
    ShapeMismatch,
    SubsetTooLarge,
)
from .gf import Field
from .oracle import (
    OracleBudget,
    OracleResult,
    oracle_max_zeros_families,
    oracle_rghw_support,
    oracle_rghw_window,
)
from .polynomials import (
    LeadingTerm,
    MultiPoly,
    common_zero_count,
    evaluate_on_grid,
    footprint_count,
    make_maximal_poly,
    maximal_family,
)
from .weights import WeightQuery, WeightRecord, WeightReport, hierarchy, max_zeros, rghw

__version__ = "0.1.0"
