"""Combinatorics of the exponent box F = {0..d_1-1} x ... x {0..d_m-1}.

Points of the box are plain int tuples.  Two orders matter throughout:
the coordinatewise partial order (a <= b in every coordinate) and the
lexicographic order on tuples; descending lexicographic enumeration of
degree bands is what the closed weight formula ranks against.

deg(a) = a_1 + ... + a_m.  The degree band (u2, u1] is the set of box
points with u2 < deg(a) <= u1; bands must be nonempty as intervals
(-1 <= u2 < u1 <= k where k = sum(d_i - 1)).

The shadow of a set S is its upward closure under the partial order;
the footprint is the complement of the shadow in the box.  Ranking and
unranking inside bands is done by digit-by-digit counting against
suffix-box degree histograms, so ranks are reachable without ever
enumerating the box.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    CountOutOfRange,
    DegreeTooHigh,
    InvalidBand,
    RankOutOfRange,
    ShapeMismatch,
)

BoxPoint = tuple  # int tuples; validated against a BoxShape at API boundaries


class BoxShape:
    """Side lengths of the exponent box, normalized to ascending order.

    `permutation` records where each normalized coordinate came from:
    d[i] == sizes[permutation[i]] for the constructor argument `sizes`.
    Shapes compare and hash by their normalized side tuple alone.
    """

    __slots__ = ("d", "permutation")

    def __init__(self, sizes: Iterable[int]):
        sizes = tuple(sizes)
        if not sizes:
            raise ShapeMismatch("a box needs at least one coordinate")
        for s in sizes:
            if not isinstance(s, int) or s < 1:
                raise ShapeMismatch(f"box side {s!r} is not a positive int")
        order = sorted(range(len(sizes)), key=lambda i: (sizes[i], i))
        object.__setattr__(self, "d", tuple(sizes[i] for i in order))
        object.__setattr__(self, "permutation", tuple(order))

    def __setattr__(self, name, value):
        raise AttributeError("BoxShape is immutable")

    @property
    def m(self) -> int:
        return len(self.d)

    @property
    def n(self) -> int:
        out = 1
        for s in self.d:
            out *= s
        return out

    @property
    def k(self) -> int:
        return sum(self.d) - self.m

    def contains(self, a: BoxPoint) -> bool:
        return len(a) == self.m and all(0 <= a[i] < self.d[i] for i in range(self.m))

    def require_point(self, a: BoxPoint) -> None:
        if not self.contains(a):
            raise ShapeMismatch(f"point {a!r} outside box {self.d}")

    def encode(self, a: BoxPoint) -> int:
        """Mixed-radix encoding sum(a_i * prod(d_j, j>i)); the same sum the
        closed weight formula subtracts."""
        out = 0
        for i in range(self.m):
            out = out * self.d[i] + a[i]
        return out

    def decode(self, idx: int) -> BoxPoint:
        out = []
        for s in reversed(self.d):
            out.append(idx % s)
            idx //= s
        return tuple(reversed(out))

    def points(self) -> Iterator[BoxPoint]:
        """All box points, mixed-radix ascending (last coordinate fastest)."""
        return itertools.product(*(range(s) for s in self.d))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BoxShape) and other.d == self.d

    def __hash__(self) -> int:
        return hash(("rghw.BoxShape", self.d))

    def __repr__(self) -> str:
        return f"BoxShape{self.d}"


@dataclass(frozen=True)
class DegreeBand:
    """Half-open degree window (u2, u1]; u2 = -1 means no lower cut."""

    u2: int
    u1: int

    def __post_init__(self):
        if self.u2 < -1:
            raise InvalidBand(f"u2 = {self.u2} < -1")
        if self.u2 >= self.u1:
            raise InvalidBand(f"empty band: u2 = {self.u2} >= u1 = {self.u1}")


def check_band(shape: BoxShape, band: DegreeBand) -> None:
    if band.u1 > shape.k:
        raise InvalidBand(f"u1 = {band.u1} > k = {shape.k} for box {shape.d}")


def degree(a: BoxPoint) -> int:
    return sum(a)


def cmp_lex(a: BoxPoint, b: BoxPoint) -> int:
    """-1, 0 or 1 as a is lexicographically below, equal to, or above b."""
    if len(a) != len(b):
        raise ShapeMismatch(f"points {a!r} and {b!r} have different arity")
    if a == b:
        return 0
    return -1 if a < b else 1


def cmp_partial(a: BoxPoint, b: BoxPoint) -> int | None:
    """Coordinatewise comparison: -1/0/1 like cmp_lex, None if incomparable."""
    if len(a) != len(b):
        raise ShapeMismatch(f"points {a!r} and {b!r} have different arity")
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return 0
    if le:
        return -1
    if ge:
        return 1
    return None


# -- degree counting ------------------------------------------------------------


@lru_cache(maxsize=None)
def _suffix_cums(d: tuple) -> tuple:
    """For each suffix box d[i:], the cumulative degree counts.

    Entry i is a tuple C with C[t] = number of points of the box over
    d[i:] having degree <= t, 0 <= t <= sum(d[j]-1, j >= i).  The last
    entry (empty box) is (1,).  Each convolution with the uniform degree
    histogram of one coordinate is a sliding-window sum over the previous
    prefix sums, so the whole table costs O(m * k), never O(m * k * d).
    """
    cums = [None] * (len(d) + 1)
    hist = [1]
    cums[len(d)] = (1,)
    for i in range(len(d) - 1, -1, -1):
        prefix = list(itertools.accumulate(hist))
        total = prefix[-1]
        hist = [
            (prefix[t] if t < len(prefix) else total)
            - (prefix[t - d[i]] if t >= d[i] else 0)
            for t in range(len(prefix) + d[i] - 1)
        ]
        cums[i] = tuple(itertools.accumulate(hist))
    return tuple(cums)


def _count_leq(shape: BoxShape, i: int, t: int) -> int:
    """Number of points of the suffix box d[i:] with degree <= t."""
    cum = _suffix_cums(shape.d)[i]
    if t < 0:
        return 0
    if t >= len(cum):
        return cum[-1]
    return cum[t]


def band_size(shape: BoxShape, band: DegreeBand) -> int:
    check_band(shape, band)
    return _count_leq(shape, 0, band.u1) - _count_leq(shape, 0, band.u2)


def enumerate_band(shape: BoxShape, band: DegreeBand) -> list[BoxPoint]:
    """Band members in descending lexicographic order."""
    check_band(shape, band)
    out = [a for a in shape.points() if band.u2 < sum(a) <= band.u1]
    out.sort(reverse=True)
    return out


def nth_band_element(shape: BoxShape, band: DegreeBand, r: int) -> BoxPoint:
    """The r-th member (1-based) of the band in descending lexicographic
    order, found by digit-by-digit counting: no enumeration, so ranks deep
    inside large boxes cost O(m * max(d))."""
    size = band_size(shape, band)
    if not 1 <= r <= size:
        raise RankOutOfRange(f"r = {r} outside 1..{size} for band {band} in box {shape.d}")
    lo, hi = band.u2, band.u1
    out = []
    rem = r
    for i in range(shape.m):
        for v in range(shape.d[i] - 1, -1, -1):
            cnt = _count_leq(shape, i + 1, hi - v) - _count_leq(shape, i + 1, lo - v)
            if rem > cnt:
                rem -= cnt
                continue
            out.append(v)
            lo -= v
            hi -= v
            break
    return tuple(out)


def lex_rank_in_leq(shape: BoxShape, u1: int, a: BoxPoint) -> int:
    """1-based rank of a within {deg <= u1} in descending lexicographic order."""
    shape.require_point(a)
    if sum(a) > u1:
        raise DegreeTooHigh(f"deg{a!r} = {sum(a)} > u1 = {u1}")
    above = 0
    prefix_deg = 0
    for i in range(shape.m):
        for v in range(a[i] + 1, shape.d[i]):
            above += _count_leq(shape, i + 1, u1 - prefix_deg - v)
        prefix_deg += a[i]
    return above + 1


# -- shadows and footprints ------------------------------------------------------


def shadow(shape: BoxShape, points: Iterable[BoxPoint]) -> set:
    """Upward closure of `points` in the box under the partial order."""
    seen = set()
    stack = []
    for a in points:
        a = tuple(a)
        shape.require_point(a)
        if a not in seen:
            seen.add(a)
            stack.append(a)
    while stack:
        a = stack.pop()
        for i in range(shape.m):
            if a[i] + 1 < shape.d[i]:
                b = a[:i] + (a[i] + 1,) + a[i + 1 :]
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
    return seen


def footprint(shape: BoxShape, points: Iterable[BoxPoint]) -> set:
    """Box points not dominating any member of `points`."""
    shd = shadow(shape, points)
    return {a for a in shape.points() if a not in shd}


def shadow_slice(shape: BoxShape, points: Iterable[BoxPoint], u: int) -> set:
    """Degree-u part of the shadow; empty beyond the box degrees."""
    return {a for a in shadow(shape, points) if sum(a) == u}


def footprint_slice(shape: BoxShape, points: Iterable[BoxPoint], u: int) -> set:
    if u < 0 or u > shape.k:
        return set()
    shd = shadow(shape, points)
    return {a for a in shape.points() if sum(a) == u and a not in shd}


def lex_prefix_of_slice(shape: BoxShape, u: int, count: int) -> list[BoxPoint]:
    """First `count` members of the degree-u slice, descending lexicographic."""
    members = enumerate_band(shape, DegreeBand(u - 1, u))
    if count < 0 or count > len(members):
        raise CountOutOfRange(f"count = {count} outside 0..{len(members)} for slice deg = {u}")
    return members[:count]


def shadow_card_of_leq_prefix(shape: BoxShape, deg_bound: int, r: int) -> int:
    """|shadow of the first r elements of {deg <= deg_bound} desc-lex|,
    by the closed formula n - encode(a_r)."""
    a_r = nth_band_element(shape, DegreeBand(-1, deg_bound), r)
    return shape.n - shape.encode(a_r)
