"""Sparse multivariate polynomials reduced modulo the exponent box.

A MultiPoly stores {exponent tuple: coefficient} with every exponent
inside the box (deg_{x_i} <= d_i - 1) and every coefficient a nonzero
canonical field encoding.  deg(0) = -1.  The leading term is taken in
graded lexicographic order: higher total degree wins, ties broken
lexicographically on the exponent tuple.

`make_maximal_poly` builds the product
    prod_i prod_{j=1..b_i} (x_i - A_i[j-1])
whose leading term is exactly x^b and whose nonvanishing points are the
grid points whose coordinate indices dominate b; families of these for
the first r band exponents attain the weight formula, which is what the
attainment checks exercise.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import TYPE_CHECKING, Sequence

from .boxcomb import BoxShape, DegreeBand, nth_band_element, shadow
from .errors import EmptyFamily, RankOutOfRange, ShapeMismatch
from .gf import Field

if TYPE_CHECKING:  # pragma: no cover
    from .codes import CartesianGrid


@dataclass(frozen=True)
class LeadingTerm:
    exponent: tuple
    coefficient: int


class MultiPoly:
    __slots__ = ("field", "shape", "terms")

    def __init__(self, field: Field, shape: BoxShape, terms: dict):
        clean = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if not shape.contains(exp):
                raise ShapeMismatch(f"exponent {exp!r} outside box {shape.d}")
            if not 0 <= c < field.q:
                raise ShapeMismatch(f"coefficient {c!r} is not a canonical GF({field.q}) encoding")
            if c:
                clean[exp] = c
        self.field = field
        self.shape = shape
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_term(self) -> LeadingTerm | None:
        if not self.terms:
            return None
        exp = max(self.terms, key=lambda e: (sum(e), e))
        return LeadingTerm(exp, self.terms[exp])

    def render(self) -> str:
        """Human form like 'x1*x2^2 + 2*x1*x2'; coefficients are canonical ints."""
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exp]
            vars_ = [
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exp)
                if e
            ]
            if not vars_:
                pieces.append(str(c))
            elif c == 1:
                pieces.append("*".join(vars_))
            else:
                pieces.append("*".join([str(c)] + vars_))
        return " + ".join(pieces)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and other.field == self.field
            and other.shape == self.shape
            and other.terms == self.terms
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()!r} over GF({self.field.q}))"


def _times_linear(poly: MultiPoly, i: int, gamma: int) -> MultiPoly:
    """poly * (x_i - gamma).  Exponent i must stay inside the box."""
    f = poly.field
    neg_gamma = f.neg(gamma)
    terms: dict = {}
    for exp, c in poly.terms.items():
        up = exp[:i] + (exp[i] + 1,) + exp[i + 1 :]
        terms[up] = f.add(terms.get(up, 0), c)
        if neg_gamma:
            terms[exp] = f.add(terms.get(exp, 0), f.mul(c, neg_gamma))
    return MultiPoly(f, poly.shape, terms)


def make_maximal_poly(grid: "CartesianGrid", b) -> MultiPoly:
    """The canonical degree-|b| polynomial with leading exponent b that
    vanishes on every grid point whose index tuple does not dominate b."""
    b = tuple(b)
    shape = grid.shape
    shape.require_point(b)
    poly = MultiPoly(grid.field, shape, {(0,) * shape.m: 1})
    for i in range(shape.m):
        for j in range(b[i]):
            poly = _times_linear(poly, i, grid.subsets[i][j])
    return poly


def evaluate_on_grid(f: MultiPoly, grid: "CartesianGrid") -> tuple:
    """Values of f at every grid point, in grid point order."""
    if f.shape != grid.shape or f.field != grid.field:
        raise ShapeMismatch("polynomial and grid disagree on box shape or field")
    field = grid.field
    values = [0] * grid.shape.n
    for exp, c in f.terms.items():
        mono = grid.monomial_values(exp)
        for idx in range(len(values)):
            v = mono[idx]
            if v:
                values[idx] = field.add(values[idx], field.mul(c, v))
    return tuple(values)


def common_zero_count(fs: Sequence[MultiPoly], grid: "CartesianGrid") -> int:
    """Number of grid points where every polynomial of the family vanishes."""
    if not fs:
        raise EmptyFamily("common_zero_count needs at least one polynomial")
    alive = set(range(grid.shape.n))
    for f in fs:
        values = evaluate_on_grid(f, grid)
        alive = {i for i in alive if values[i] == 0}
        if not alive:
            break
    return len(alive)


def footprint_count(shape: BoxShape, lts: Sequence) -> int:
    """|box| - |shadow of the leading exponents|: the footprint bound on
    the number of common zeros of any family with these leading terms."""
    pts = [tuple(e) for e in lts]
    if not pts:
        return shape.n
    return shape.n - len(shadow(shape, pts))


def maximal_family(grid: "CartesianGrid", band: DegreeBand, r: int) -> list[MultiPoly]:
    """Canonical family for the first r band exponents, descending lex."""
    if r < 1:
        raise RankOutOfRange(f"r = {r} < 1")
    return [
        make_maximal_poly(grid, nth_band_element(grid.shape, band, i))
        for i in range(1, r + 1)
    ]


def random_poly(field: Field, shape: BoxShape, rng: Random, max_terms: int = 4) -> MultiPoly:
    """Nonzero polynomial with 1..max_terms random box exponents; for the
    seeded footprint-bound sweeps."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = tuple(rng.randrange(s) for s in shape.d)
        terms[exp] = rng.randint(1, field.q - 1)
    return MultiPoly(field, shape, terms)
