"""Affine Cartesian evaluation codes and the small linear algebra they need.

A CartesianGrid is a product A_1 x ... x A_m of distinct-element subsets
of GF(q), with |A_i| = d_i ascending.  Points are ordered mixed-radix
(last coordinate fastest), which makes the position of a point equal to
the mixed-radix encoding of its index tuple: the map from grid points to
box points is position-preserving by construction.

A CartesianCode of degree bound u evaluates every monomial x^a with
deg(a) <= u (exponents in the box) on the grid; rows of the generator
matrix follow descending lexicographic exponent order.  Evaluation is
injective on that monomial space, so dim = |{a : deg(a) <= u}|; this is
asserted by row reduction at construction.

Row reduction is over the Field's int encodings; it is deliberately
plain RREF since every matrix here is desk-scale.
"""

from __future__ import annotations

import itertools
import sys
from typing import Iterable, Sequence

from .boxcomb import BoxShape, DegreeBand, enumerate_band
from .errors import (
    DegreeOutOfRange,
    DuplicateElements,
    LengthMismatch,
    ShapeMismatch,
    SubsetTooLarge,
)
from .gf import Field


def rref(rows: Iterable[Sequence[int]], field: Field):
    """Reduced row echelon form.  Returns (rows, pivot_columns); zero rows
    are dropped, pivots are 1 and alone in their column."""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    reduced: list[list[int]] = []
    ncols = len(work[0]) if work else 0
    col = 0
    while work and col < ncols:
        pick = None
        for idx, row in enumerate(work):
            if row[col]:
                pick = idx
                break
        if pick is None:
            col += 1
            continue
        row = work.pop(pick)
        inv = field.inv(row[col])
        row = [field.mul(inv, x) for x in row]
        for other in itertools.chain(reduced, work):
            c = other[col]
            if c:
                for j in range(col, ncols):
                    if row[j]:
                        other[j] = field.sub(other[j], field.mul(c, row[j]))
        reduced.append(row)
        pivots.append(col)
        col += 1
    return [tuple(r) for r in reduced], pivots


def rank(rows: Iterable[Sequence[int]], field: Field) -> int:
    return len(rref(rows, field)[1])


def reduce_vector(v: Sequence[int], reduced_rows, pivots, field: Field) -> tuple:
    """Remainder of v after elimination against an RREF basis."""
    out = list(v)
    for row, p in zip(reduced_rows, pivots):
        c = out[p]
        if c:
            for j in range(p, len(out)):
                if row[j]:
                    out[j] = field.sub(out[j], field.mul(c, row[j]))
    return tuple(out)


class CartesianGrid:
    """Evaluation point set A_1 x ... x A_m with per-coordinate power tables."""

    __slots__ = ("field", "shape", "subsets", "points", "_pows")

    def __init__(self, field: Field, shape: BoxShape, subsets: Sequence[Sequence[int]]):
        subsets = tuple(tuple(s) for s in subsets)
        if len(subsets) != shape.m:
            raise ShapeMismatch(f"{len(subsets)} subsets for an m = {shape.m} box")
        for i, sub in enumerate(subsets):
            if len(sub) != shape.d[i]:
                raise ShapeMismatch(f"subset {i} has size {len(sub)}, box side is {shape.d[i]}")
            if len(set(sub)) != len(sub):
                raise DuplicateElements(f"subset {i} repeats elements: {sub}")
            for g in sub:
                if not 0 <= g < field.q:
                    raise ShapeMismatch(f"element {g!r} is not a GF({field.q}) encoding")
        self.field = field
        self.shape = shape
        self.subsets = subsets
        self.points = tuple(itertools.product(*subsets))
        # _pows[i][j][e] = subsets[i][j] ** e for e up to d_i - 1
        self._pows = tuple(
            tuple(
                tuple(field.pow(g, e) for e in range(shape.d[i]))
                for g in subsets[i]
            )
            for i in range(shape.m)
        )

    def monomial_values(self, exp) -> tuple:
        """Values of x^exp at every grid point, in point order."""
        self.shape.require_point(tuple(exp))
        field = self.field
        pows = self._pows
        out = []
        for idx in itertools.product(*(range(s) for s in self.shape.d)):
            v = 1
            for i, j in enumerate(idx):
                e = exp[i]
                if e:
                    v = field.mul(v, pows[i][j][e])
                    if not v:
                        break
            out.append(v)
        return tuple(out)

    def __repr__(self) -> str:
        return f"CartesianGrid(GF({self.field.q}), {self.shape.d})"


def build_grid(
    field: Field,
    sizes: Iterable[int],
    subsets: Sequence[Sequence[int]] | None = None,
    policy: str = "first",
    warn=None,
) -> CartesianGrid:
    """Grid over `sizes`; sizes are normalized ascending (the permutation is
    applied to explicit subsets too, and reported through `warn`).

    policy picks default subsets when none are given: "first" takes the
    lowest d_i encodings of the field, "last" the highest.
    """
    shape = BoxShape(sizes)
    sizes = tuple(sizes)
    if sizes != shape.d and warn is not None:
        warn(
            f"WARNING: sizes {list(sizes)} sorted ascending to {list(shape.d)} "
            f"(permutation {list(shape.permutation)})"
        )
    for s in shape.d:
        if s > field.q:
            raise SubsetTooLarge(f"d_m = {s} > q = {field.q}")
    if subsets is not None:
        chosen = [subsets[shape.permutation[i]] for i in range(shape.m)]
    elif policy == "first":
        chosen = [field.elements()[: shape.d[i]] for i in range(shape.m)]
    elif policy == "last":
        chosen = [field.elements()[field.q - shape.d[i] :] for i in range(shape.m)]
    else:
        raise ShapeMismatch(f"unknown subset policy {policy!r}")
    return CartesianGrid(field, shape, chosen)


class CartesianCode:
    """Evaluation code of the monomials with deg <= d on a grid."""

    __slots__ = ("grid", "d", "basis", "G", "_rref", "_pivots")

    def __init__(self, grid: CartesianGrid, d: int):
        if not 0 <= d <= grid.shape.k:
            raise DegreeOutOfRange(f"degree bound {d} outside 0..{grid.shape.k}")
        self.grid = grid
        self.d = d
        self.basis = tuple(enumerate_band(grid.shape, DegreeBand(-1, d)))
        self.G = tuple(grid.monomial_values(exp) for exp in self.basis)
        self._rref, self._pivots = rref(self.G, grid.field)
        if len(self._pivots) != len(self.basis):
            raise AssertionError(
                f"evaluation not injective on degree <= {d}: "
                f"rank {len(self._pivots)} != {len(self.basis)} monomials"
            )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def length(self) -> int:
        return self.grid.shape.n

    def __repr__(self) -> str:
        return (
            f"CartesianCode(GF({self.grid.field.q}), d={self.grid.shape.d}, "
            f"deg<={self.d}, [{self.length},{self.dim}])"
        )


def build_code(grid: CartesianGrid, d: int) -> CartesianCode:
    return CartesianCode(grid, d)


def membership(code: CartesianCode, v: Sequence[int]) -> bool:
    if len(v) != code.length:
        raise LengthMismatch(f"vector length {len(v)} != code length {code.length}")
    residue = reduce_vector(v, code._rref, code._pivots, code.grid.field)
    return not any(residue)


def support_of_span(vectors: Sequence[Sequence[int]]) -> set:
    """Union of supports of the given vectors, as 1-based positions; this
    is the support of their span."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return set()
    width = len(vectors[0])
    for v in vectors:
        if len(v) != width:
            raise LengthMismatch("vectors of mixed lengths")
    return {i + 1 for i in range(width) if any(v[i] for v in vectors)}


def warn_to_stderr(message: str) -> None:
    print(message, file=sys.stderr)
