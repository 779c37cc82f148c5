"""Closed-form relative generalized Hamming weights of nested Cartesian codes.

For the nested pair with degree bounds u1 > u2 (u2 = -1 meaning the zero
subcode, i.e. plain generalized Hamming weights), the r-th relative
weight over the box d_1 <= ... <= d_m is

    M_r = d_1*...*d_m - encode(a_r) - s + r

where a_r is the r-th element of the degree band (u2, u1] in descending
lexicographic order, encode is the mixed-radix encoding sum(a_i *
prod(d_j, j > i)), and s is the 1-based descending-lex rank of a_r among
all box points of degree <= u1.  Everything here is pure box
combinatorics: no field, no grid, no enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boxcomb import (
    BoxShape,
    DegreeBand,
    band_size,
    check_band,
    lex_rank_in_leq,
    nth_band_element,
)
from .errors import RankOutOfRange


@dataclass(frozen=True)
class WeightQuery:
    shape: BoxShape
    band: DegreeBand
    r: int

    def __post_init__(self):
        check_band(self.shape, self.band)
        size = band_size(self.shape, self.band)
        if not 1 <= self.r <= size:
            raise RankOutOfRange(
                f"r = {self.r} outside 1..{size} for band {self.band} in box {self.shape.d}"
            )


@dataclass(frozen=True)
class WeightRecord:
    """One hierarchy row: rank, band element, its rank s among deg <= u1,
    the weight, and n - weight (the attained maximum of common zeros).
    `oracle` is None until an oracle confirmation is attached."""

    r: int
    a_r: tuple
    s: int
    m_r: int
    max_zeros: int
    oracle: int | None = None


@dataclass(frozen=True)
class WeightReport:
    shape: BoxShape
    band: DegreeBand
    records: tuple


def rghw(query: WeightQuery) -> WeightRecord:
    shape, band, r = query.shape, query.band, query.r
    a_r = nth_band_element(shape, band, r)
    s = lex_rank_in_leq(shape, band.u1, a_r)
    m_r = shape.n - shape.encode(a_r) - s + r
    return WeightRecord(r=r, a_r=a_r, s=s, m_r=m_r, max_zeros=shape.n - m_r)


def max_zeros(query: WeightQuery) -> int:
    return rghw(query).max_zeros


def hierarchy(shape: BoxShape, band: DegreeBand) -> WeightReport:
    """All l = band_size records, r = 1..l."""
    size = band_size(shape, band)
    records = tuple(rghw(WeightQuery(shape, band, r)) for r in range(1, size + 1))
    return WeightReport(shape=shape, band=band, records=records)
