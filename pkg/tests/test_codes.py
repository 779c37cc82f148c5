import itertools

import pytest

import brute
from rghw.boxcomb import BoxShape, DegreeBand, band_size, enumerate_band
from rghw.codes import (
    CartesianGrid,
    build_code,
    build_grid,
    membership,
    rank,
    reduce_vector,
    rref,
    support_of_span,
)
from rghw.errors import (
    DegreeOutOfRange,
    DuplicateElements,
    LengthMismatch,
    ShapeMismatch,
    SubsetTooLarge,
)
from rghw.gf import Field

F2 = Field(2)
F3 = Field(3)
F4 = Field(4)


def test_grid_point_order_and_position_map():
    grid = build_grid(F3, (2, 3))
    assert grid.points == ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2))
    # position of a grid point == mixed-radix encoding of its index tuple
    for pos, point in enumerate(grid.points):
        idx = grid.shape.decode(pos)
        assert point == tuple(grid.subsets[i][idx[i]] for i in range(grid.shape.m))


def test_grid_policies():
    first = build_grid(F4, (2, 3))
    last = build_grid(F4, (2, 3), policy="last")
    assert first.subsets == ((0, 1), (0, 1, 2))
    assert last.subsets == ((2, 3), (1, 2, 3))
    with pytest.raises(ShapeMismatch):
        build_grid(F4, (2, 3), policy="middle")


def test_grid_explicit_subsets_follow_sort_permutation():
    messages = []
    grid = build_grid(
        F3, (3, 2), subsets=[(0, 1, 2), (0, 2)], warn=messages.append
    )
    assert grid.shape.d == (2, 3)
    assert grid.subsets == ((0, 2), (0, 1, 2))
    assert len(messages) == 1
    assert "permutation [1, 0]" in messages[0]


def test_grid_rejections():
    with pytest.raises(SubsetTooLarge) as err:
        build_grid(F2, (2, 3))
    assert "d_m = 3 > q = 2" in str(err.value)
    with pytest.raises(DuplicateElements):
        build_grid(F3, (2, 2), subsets=[(0, 1), (1, 1)])
    with pytest.raises(ShapeMismatch):
        build_grid(F3, (2, 2), subsets=[(0, 1), (0, 1, 2)])
    with pytest.raises(ShapeMismatch):
        build_grid(F3, (2, 2), subsets=[(0, 1), (0, 5)])
    with pytest.raises(ShapeMismatch):
        CartesianGrid(F3, BoxShape((2, 2)), [(0, 1)])


def test_monomial_values_examples():
    grid = build_grid(F2, (2, 2))
    assert grid.monomial_values((1, 0)) == (0, 0, 1, 1)
    assert grid.monomial_values((1, 1)) == (0, 0, 0, 1)
    assert grid.monomial_values((0, 0)) == (1, 1, 1, 1)
    with pytest.raises(ShapeMismatch):
        grid.monomial_values((2, 0))


def test_code_dimensions_and_basis_order():
    for field, sizes in ((F2, (2, 2)), (F3, (2, 3)), (F4, (3, 3)), (F2, (2, 2, 2))):
        grid = build_grid(field, sizes)
        for d in range(grid.shape.k + 1):
            code = build_code(grid, d)
            assert code.length == grid.shape.n
            assert code.dim == band_size(grid.shape, DegreeBand(-1, d))
            assert list(code.basis) == enumerate_band(grid.shape, DegreeBand(-1, d))
            for row, exp in zip(code.G, code.basis):
                assert row == grid.monomial_values(exp)


def test_code_degree_bounds():
    grid = build_grid(F3, (2, 3))
    with pytest.raises(DegreeOutOfRange):
        build_code(grid, -1)
    with pytest.raises(DegreeOutOfRange):
        build_code(grid, grid.shape.k + 1)
    assert build_code(grid, grid.shape.k).dim == grid.shape.n


def test_min_distance_by_codeword_enumeration():
    # [4,3] code on (2,2) over GF(2) with deg <= 1 has minimum distance 2.
    code = build_code(build_grid(F2, (2, 2)), 1)
    weights = [
        sum(1 for x in w if x)
        for w in brute.all_codewords(list(code.G), F2)
        if any(w)
    ]
    assert min(weights) == 2


def test_membership():
    grid = build_grid(F2, (2, 2))
    c1 = build_code(grid, 1)
    for row in c1.G:
        assert membership(c1, row)
    assert membership(c1, (0, 0, 0, 0))
    assert not membership(c1, grid.monomial_values((1, 1)))
    assert membership(build_code(grid, 2), grid.monomial_values((1, 1)))
    with pytest.raises(LengthMismatch):
        membership(c1, (0, 0, 0))


def test_nested_codes():
    grid = build_grid(F3, (2, 3))
    for u2 in range(grid.shape.k):
        inner = build_code(grid, u2)
        for u1 in range(u2 + 1, grid.shape.k + 1):
            outer = build_code(grid, u1)
            for row in inner.G:
                assert membership(outer, row)


def test_rref_properties():
    rows = [(1, 2, 0, 1), (2, 1, 1, 0), (0, 0, 0, 0), (1, 2, 0, 1)]
    reduced, pivots = rref(rows, F3)
    assert pivots == sorted(pivots)
    assert len(reduced) == len(pivots) == 2
    for i, (row, p) in enumerate(zip(reduced, pivots)):
        assert row[p] == 1
        for j, other in enumerate(reduced):
            if i != j:
                assert other[p] == 0
    again, again_pivots = rref(reduced, F3)
    assert list(again) == list(reduced) and again_pivots == pivots
    assert rank(rows, F3) == brute.rank_gf(rows, F3)
    assert rank([(0, 0)], F3) == 0


def test_reduce_vector_zeroes_members():
    grid = build_grid(F4, (2, 3))
    code = build_code(grid, 2)
    reduced, pivots = rref(code.G, F4)
    for w in itertools.islice(brute.all_codewords(list(code.G), F4), 80):
        assert not any(reduce_vector(w, reduced, pivots, F4))
    outside = grid.monomial_values((1, 2))
    assert any(reduce_vector(outside, reduced, pivots, F4))


def test_support_of_span():
    grid = build_grid(F2, (2, 2))
    assert support_of_span([grid.monomial_values((1, 0))]) == {3, 4}
    assert support_of_span([(0, 0, 0, 1), (0, 1, 0, 0)]) == {2, 4}
    assert support_of_span([]) == set()
    with pytest.raises(LengthMismatch):
        support_of_span([(1, 0), (1, 0, 0)])
