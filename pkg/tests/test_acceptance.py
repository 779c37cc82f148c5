"""Acceptance battery: one test per release criterion, exact equalities only.

Each test prints a single `[acceptance] criterion N ...` line on success
(visible even under capture); a pytest failure is the fail line.  The
formula-vs-oracle sweep is computed once per session and shared.
"""

import itertools
import time

import pytest

from rghw.boxcomb import (
    BoxShape,
    DegreeBand,
    band_size,
    cmp_partial,
    enumerate_band,
    lex_prefix_of_slice,
    shadow,
    shadow_slice,
)
from rghw.cli import run_footprint_sweep, run_verify_grid
from rghw.codes import build_code, build_grid
from rghw.gf import Field
from rghw.oracle import oracle_rghw_support
from rghw.polynomials import common_zero_count, maximal_family
from rghw.weights import WeightQuery, hierarchy, rghw

ACCEPTANCE_QS = (2, 3, 4)
ACCEPTANCE_SHAPES = ((2,), (3,), (2, 2), (2, 3), (3, 3), (2, 2, 2))
COMPRESSION_SHAPES = [BoxShape((2, 3)), BoxShape((3, 3)), BoxShape((2, 2, 2))]
SWEEP_SECONDS_CAP = 600
COMPRESSION_SECONDS_CAP = 300
FOOTPRINT_SEED = 20260816

# attainment spot checks on grids beyond the oracle range, up to n = 10^4
ATTAINMENT_SPOTS = [
    (5, (4, 5), -1, 3, (1, 2, 3)),
    (5, (4, 5), 1, 5, (1, 2)),
    (8, (5, 8), 0, 4, (1, 3)),
    (9, (3, 9), 2, 6, (1, 2)),
    (4, (3, 4, 4), -1, 3, (1, 5)),
    (101, (100, 100), -1, 1, (1, 2, 3)),
    (101, (100, 100), 0, 3, (1, 2, 3)),
]


@pytest.fixture(scope="session")
def sweep():
    started = time.monotonic()
    rows, summary = run_verify_grid(ACCEPTANCE_QS, ACCEPTANCE_SHAPES)
    return rows, summary, time.monotonic() - started


@pytest.fixture
def report(capsys):
    def emit(line):
        with capsys.disabled():
            print(line, flush=True)

    return emit


def grid_n(row):
    n = 1
    for s in row["sizes"]:
        n *= s
    return n


def all_bands(shape):
    return [
        DegreeBand(u2, u1)
        for u1 in range(shape.k + 1)
        for u2 in range(-1, u1)
    ]


def slice_members(shape, u):
    return enumerate_band(shape, DegreeBand(u - 1, u))


def subsets_of(items):
    for mask in range(1 << len(items)):
        yield [items[i] for i in range(len(items)) if mask >> i & 1]


def test_criterion_1_formula_matches_support_oracle(sweep, report):
    rows, summary, elapsed = sweep
    assert rows, "empty sweep"
    assert summary["mismatch"] == 0
    for row in rows:
        if row["support"] is not None:
            assert row["support"] == row["formula"], row
        else:
            assert grid_n(row) > 8, f"oracle skipped on a small grid: {row}"
    assert elapsed < SWEEP_SECONDS_CAP
    confirmed = sum(1 for row in rows if row["support"] is not None)
    report(
        f"[acceptance] criterion 1 formula == support oracle: PASS "
        f"({confirmed}/{len(rows)} tuples confirmed, 0 mismatches, {elapsed:.1f}s)"
    )


def test_criterion_2_formula_matches_window_oracle(sweep, report):
    rows, _, _ = sweep
    checked = 0
    for row in rows:
        if grid_n(row) <= 8:
            assert row["window"] is not None, row
            assert row["window"] == row["formula"], row
            checked += 1
    assert checked
    report(
        f"[acceptance] criterion 2 formula == window oracle (n <= 8): PASS "
        f"({checked} tuples)"
    )


def test_criterion_3_maximal_families_attain_the_weight(sweep, report):
    rows, _, _ = sweep
    for row in rows:
        assert row["attainment"] == row["formula"], row
    spot_count = 0
    for q, sizes, u2, u1, ranks in ATTAINMENT_SPOTS:
        grid = build_grid(Field(q), sizes)
        shape = grid.shape
        band = DegreeBand(u2, u1)
        for r in ranks:
            family = maximal_family(grid, band, r)
            attained = shape.n - common_zero_count(family, grid)
            expected = rghw(WeightQuery(shape, band, r)).m_r
            assert attained == expected, (q, sizes, u2, u1, r)
            spot_count += 1
    report(
        f"[acceptance] criterion 3 maximal families attain M_r: PASS "
        f"({len(rows)} sweep tuples + {spot_count} spot checks up to n = 10000)"
    )


def test_criterion_4_shadow_compression_battery(report):
    started = time.monotonic()
    checks = 0

    for shape in COMPRESSION_SHAPES:
        k = shape.k

        # compressing a degree slice to its lex prefix shrinks shadows:
        # slice shadow of the prefix sits inside the prefix of the slice
        # shadow, degree by degree, and full shadows only lose points.
        for u in range(k + 1):
            fu = slice_members(shape, u)
            for S in subsets_of(fu):
                L = lex_prefix_of_slice(shape, u, len(S))
                for v in range(u, k + 1):
                    upstairs = shadow_slice(shape, S, v)
                    lhs = shadow_slice(shape, L, v)
                    rhs = set(lex_prefix_of_slice(shape, v, len(upstairs)))
                    assert lhs <= rhs, (shape, u, v, S)
                    assert len(lhs) <= len(upstairs)
                    checks += 1
                assert len(shadow(shape, L)) <= len(shadow(shape, S))

        # the lex-closest lower-degree point is dominated by the original
        for u in range(k):
            fu = slice_members(shape, u)
            for v in range(u + 1, k + 1):
                for y in slice_members(shape, v):
                    below = [f for f in fu if f <= y]
                    assert below, (shape, u, v, y)
                    assert cmp_partial(max(below), y) == -1
                    checks += 1

        for band in all_bands(shape):
            members = enumerate_band(shape, band)
            for r in range(1, len(members) + 1):
                N = members[:r]
                N_top = [a for a in N if sum(a) == band.u1]

                # per-degree structure of the band prefix
                for u in range(band.u2 + 1, band.u1 + 1):
                    N_u = [a for a in N if sum(a) == u]
                    fu = slice_members(shape, u)
                    assert N_u == fu[: len(N_u)]  # slice part is a slice prefix
                    star = lex_prefix_of_slice(
                        shape, u, min(len(N_u) + 1, len(fu))
                    )
                    assert shadow_slice(shape, N_u, band.u1) <= set(N_top)
                    assert set(N_top) <= shadow_slice(shape, star, band.u1)
                    checks += 1

                # shadow size splits off the top-degree part
                if band.u2 < band.u1 - 1:
                    split = r - len(N_top) + len(shadow(shape, N_top))
                    assert len(shadow(shape, N)) == split
                    checks += 1

                # the band prefix minimizes shadows over all same-size subsets
                prefix_card = len(shadow(shape, N))
                cards = [
                    len(shadow(shape, S))
                    for S in itertools.combinations(members, r)
                ]
                assert all(prefix_card <= c for c in cards)
                assert shape.n - prefix_card == max(shape.n - c for c in cards)
                checks += len(cards)

    elapsed = time.monotonic() - started
    assert elapsed < COMPRESSION_SECONDS_CAP
    report(
        f"[acceptance] criterion 4 shadow compression battery: PASS "
        f"({checks} exhaustive checks on 3 shapes, {elapsed:.1f}s)"
    )


def test_criterion_5_footprint_bound_on_random_families(report):
    total = 0
    for q in (2, 3, 4):
        checked, violations = run_footprint_sweep(q, 1000, FOOTPRINT_SEED)
        assert checked == 1000
        assert violations == [], f"q={q}: {violations[:3]}"
        total += checked
    report(
        f"[acceptance] criterion 5 footprint bound on random families: PASS "
        f"({total} families, 0 violations)"
    )


def test_criterion_6_frozen_hierarchies(report):
    first = [
        rec.m_r
        for rec in hierarchy(BoxShape((2, 2)), DegreeBand(-1, 1)).records
    ]
    assert first == [2, 3, 4]
    second = [
        rec.m_r
        for rec in hierarchy(BoxShape((2, 3)), DegreeBand(0, 2)).records
    ]
    assert second == [2, 3, 4, 5]
    report(
        "[acceptance] criterion 6 frozen hierarchies: PASS "
        "((2,2) u1=1 u2=-1 -> 2,3,4; (2,3) u1=2 u2=0 -> 2,3,4,5)"
    )


def test_criterion_7_grid_choice_invariance(report):
    field = Field(4)
    shape = BoxShape((2, 3))
    grids = {
        policy: build_grid(field, (2, 3), policy=policy)
        for policy in ("first", "last")
    }
    assert grids["first"].subsets != grids["last"].subsets
    tuples = 0
    for band in all_bands(shape):
        values = {}
        for policy, grid in grids.items():
            c1 = build_code(grid, band.u1)
            c2 = build_code(grid, band.u2) if band.u2 >= 0 else None
            values[policy] = [
                oracle_rghw_support(c1, c2, r).value
                for r in range(1, band_size(shape, band) + 1)
            ]
        formula = [rec.m_r for rec in hierarchy(shape, band).records]
        assert values["first"] == values["last"] == formula, band
        tuples += len(formula)
    report(
        f"[acceptance] criterion 7 grid choice invariance on GF(4) (2,3): PASS "
        f"({tuples} ranks, first == last == formula)"
    )


def test_criterion_8_hierarchy_bounds_and_monotonicity(report):
    bands = 0
    for sizes in ACCEPTANCE_SHAPES:
        shape = BoxShape(sizes)
        for band in all_bands(shape):
            ws = [rec.m_r for rec in hierarchy(shape, band).records]
            assert ws[0] >= 1
            assert all(a < b for a, b in zip(ws, ws[1:]))
            assert ws[-1] <= shape.n
            if band.u2 == -1 and band.u1 == shape.k:
                assert ws[-1] == shape.n
            bands += 1
    report(
        f"[acceptance] criterion 8 strict hierarchy bounds: PASS "
        f"({bands} bands over {len(ACCEPTANCE_SHAPES)} shapes)"
    )
