"""Independent brute-force oracles for the weight formula.

Three routes, deliberately not sharing logic with the closed formula or
with each other:

* oracle_rghw_support enumerates r-dimensional subspaces D of C1 with
  D intersecting C2 trivially, as graphs over the monomial complement W
  (C1 = C2 (+) W): reduced-echelon representatives of r-dim subspaces of
  W paired with arbitrary linear maps into C2, which covers every valid
  D exactly once.  It minimizes |supp(D)| = |union of generator
  supports| with branch-and-bound on the running support union.

* oracle_rghw_window scans coordinate windows J by ascending size and
  returns the first with dim (C1)_J - dim (C2)_J = r, where (C)_J is the
  subcode supported inside J (dimension by rank-nullity on the columns
  outside J).

* oracle_max_zeros_families maximizes the number of common grid zeros
  over families f_1..f_r of monic polynomials with distinct band-degree
  leading exponents, enumerating per-leading-exponent cosets of lower
  terms and combining per-slot zero masks.

All enumeration is deterministic (fixed candidate orders, ties broken by
ascending coefficient encoding), so two runs return identical witnesses.
Every oracle spends against an OracleBudget and raises BudgetExceeded --
a hard error, never a wrong answer.  `prune=False` switches off every
value-preserving shortcut for reference runs on tiny inputs.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Sequence

from .boxcomb import DegreeBand, check_band, enumerate_band
from .codes import CartesianCode, CartesianGrid, rref
from .errors import BudgetExceeded, InvalidNesting, RankOutOfRange
from .polynomials import MultiPoly

DEFAULT_MAX_STATES = 10**8
DEFAULT_TIME_CAP = 300


@dataclass(frozen=True)
class OracleBudget:
    max_states: int = DEFAULT_MAX_STATES
    time_cap: int = DEFAULT_TIME_CAP  # wall-clock seconds


@dataclass(frozen=True)
class OracleResult:
    value: int
    witnesses: tuple
    states_explored: int
    method: str


class _Meter:
    """Budget bookkeeping; time is polled every few thousand spends."""

    __slots__ = ("max_states", "deadline", "states", "_tick")

    def __init__(self, budget: OracleBudget):
        self.max_states = budget.max_states
        self.deadline = time.monotonic() + budget.time_cap
        self.states = 0
        self._tick = 0

    def spend(self, k: int = 1) -> None:
        self.states += k
        if self.states > self.max_states:
            raise BudgetExceeded(
                f"state budget exhausted ({self.states} > {self.max_states})",
                self.states,
            )
        self._tick += 1
        if self._tick >= 2048:
            self._tick = 0
            if time.monotonic() > self.deadline:
                raise BudgetExceeded(
                    f"time budget exhausted after {self.states} states", self.states
                )


def _check_pair(c1: CartesianCode, c2: CartesianCode | None) -> None:
    if c2 is None:
        return
    if c2.grid.field != c1.grid.field or c2.grid.subsets != c1.grid.subsets:
        raise InvalidNesting("C1 and C2 live on different grids")
    if c2.d >= c1.d:
        raise InvalidNesting(f"u2 = {c2.d} >= u1 = {c1.d}")


def _vec_add(field, x, y):
    if field._add_t is not None:
        addt = field._add_t
        return tuple(addt[a][b] for a, b in zip(x, y))
    return tuple(field.add(a, b) for a, b in zip(x, y))


def _vec_scale(field, c, x):
    if field._mul_t is not None:
        row = field._mul_t[c]
        return tuple(row[a] for a in x)
    return tuple(field.mul(c, a) for a in x)


def _mask_of(vec) -> int:
    m = 0
    for i, v in enumerate(vec):
        if v:
            m |= 1 << i
    return m


def _coset_vectors(field, base, gens, meter: _Meter) -> list:
    """base + span(gens), ordered so that the vector at index `enc` has
    generator coefficients equal to the base-q digits of enc (digit j =
    coefficient of gens[j])."""
    vectors = [base]
    for g in gens:
        block = list(vectors)
        for c in range(1, field.q):
            scaled = _vec_scale(field, c, g)
            cols = [field._add_t[s] for s in scaled] if field._add_t is not None else None
            if cols is not None:
                block_add = [tuple(col[a] for col, a in zip(cols, x)) for x in block]
            else:
                block_add = [_vec_add(field, x, scaled) for x in block]
            vectors.extend(block_add)
        meter.spend(len(vectors) - len(block))
    return vectors


# -- support route ----------------------------------------------------------------


class _SupportSearch:
    """Per (C1, C2) precomputation for the graph enumeration.

    wrows are the generator rows of C1 whose exponents have degree above
    u2 (the complement W, in descending-lex exponent order); for each
    pivot p the candidate list holds every codeword of w_p +
    span(wrows[p+1:], C2) as (support size, support mask, encoding),
    sorted by (support size, encoding).
    """

    def __init__(self, c1: CartesianCode, c2: CartesianCode | None, meter: _Meter):
        field = c1.grid.field
        u2 = -1 if c2 is None else c2.d
        self.field = field
        self.n = c1.length
        self.wrows = tuple(
            row for exp, row in zip(c1.basis, c1.G) if sum(exp) > u2
        )
        self.g2rows = tuple(c2.G) if c2 is not None else ()
        self.ell = len(self.wrows)
        self.qpow = tuple(field.q**j for j in range(self.ell + len(self.g2rows)))
        self.candidates = []
        for p in range(self.ell):
            gens = list(self.wrows[p + 1 :]) + list(self.g2rows)
            vecs = _coset_vectors(field, self.wrows[p], gens, meter)
            cands = sorted(
                (((m := _mask_of(v)).bit_count(), m, enc) for enc, v in enumerate(vecs)),
                key=lambda t: (t[0], t[2]),
            )
            self.candidates.append(cands)

    def row_vector(self, p: int, enc: int):
        field = self.field
        vec = self.wrows[p]
        gens = list(self.wrows[p + 1 :]) + list(self.g2rows)
        for j, g in enumerate(gens):
            c = (enc // self.qpow[j]) % field.q
            if c:
                vec = _vec_add(field, vec, _vec_scale(field, c, g))
        return vec

    def _echelon_ok(self, p: int, enc: int, pivots: Sequence[int]) -> bool:
        # reduced form: zero coefficient at every later pivot's W position
        q = self.field.q
        for p2 in pivots:
            if p2 > p and (enc // self.qpow[p2 - p - 1]) % q != 0:
                return False
        return True

    def run(self, r: int, meter: _Meter, prune: bool):
        # deterministic warm start: the r lowest-support W basis rows span a
        # valid D (identity echelon pattern, zero map into C2)
        base_masks = [_mask_of(v) for v in self.wrows]
        order = sorted(range(self.ell), key=lambda i: (base_masks[i].bit_count(), i))
        start = sorted(order[:r])
        union = 0
        for p in start:
            union |= base_masks[p]
        best = union.bit_count()
        best_rows = [(p, 0) for p in start]

        for pivots in itertools.combinations(range(self.ell), r):
            chosen: list = []

            def descend(depth: int, union_mask: int) -> None:
                nonlocal best, best_rows
                p = pivots[depth]
                for pop, mask, enc in self.candidates[p]:
                    meter.spend()
                    if prune and pop >= best:
                        break
                    if not self._echelon_ok(p, enc, pivots):
                        continue
                    merged = union_mask | mask
                    if prune and merged.bit_count() >= best:
                        continue
                    chosen.append((p, enc))
                    if depth + 1 == r:
                        total = merged.bit_count()
                        if total < best:
                            best = total
                            best_rows = list(chosen)
                    else:
                        descend(depth + 1, merged)
                    chosen.pop()

            descend(0, 0)
        return best, [self.row_vector(p, enc) for p, enc in best_rows]


_support_cache: dict = {}


def _support_search(c1, c2, meter) -> _SupportSearch:
    key = (id(c1), id(c2))
    hit = _support_cache.get(key)
    if hit is not None and hit[0] is c1 and hit[1] is c2:
        return hit[2]
    search = _SupportSearch(c1, c2, meter)
    if len(_support_cache) >= 8:
        _support_cache.pop(next(iter(_support_cache)))
    _support_cache[key] = (c1, c2, search)
    return search


def oracle_rghw_support(
    c1: CartesianCode,
    c2: CartesianCode | None,
    r: int,
    budget: OracleBudget | None = None,
    prune: bool = True,
) -> OracleResult:
    """Exact min |supp(D)| over r-dim subspaces D of C1 with trivial
    intersection with C2 (C2 = None means the zero code)."""
    _check_pair(c1, c2)
    ell = c1.dim - (c2.dim if c2 is not None else 0)
    if not 1 <= r <= ell:
        raise RankOutOfRange(f"r = {r} outside 1..{ell}")
    meter = _Meter(budget or OracleBudget())
    search = _support_search(c1, c2, meter)
    value, rows = search.run(r, meter, prune)
    return OracleResult(
        value=value,
        witnesses=tuple(rows),
        states_explored=meter.states,
        method="support",
    )


# -- window route -----------------------------------------------------------------


def _window_dim(code_rows, ncols: int, window: frozenset, field) -> int:
    """dim of the subcode supported inside `window` = k - rank(columns
    outside the window)."""
    outside = [j for j in range(ncols) if j not in window]
    if not outside:
        return len(code_rows)
    projected = [tuple(row[j] for j in outside) for row in code_rows]
    return len(code_rows) - len(rref(projected, field)[1])


def oracle_rghw_window(
    c1: CartesianCode,
    c2: CartesianCode | None,
    r: int,
    budget: OracleBudget | None = None,
) -> OracleResult:
    """Smallest coordinate window J with dim (C1)_J - dim (C2)_J = r.

    Scans windows by ascending size, lexicographically within a size;
    practical for n <= 12."""
    _check_pair(c1, c2)
    ell = c1.dim - (c2.dim if c2 is not None else 0)
    if not 1 <= r <= ell:
        raise RankOutOfRange(f"r = {r} outside 1..{ell}")
    meter = _Meter(budget or OracleBudget())
    field = c1.grid.field
    n = c1.length
    g2 = tuple(c2.G) if c2 is not None else ()
    for size in range(n + 1):
        for window in itertools.combinations(range(n), size):
            meter.spend()
            wset = frozenset(window)
            gap = _window_dim(c1.G, n, wset, field) - (
                _window_dim(g2, n, wset, field) if g2 else 0
            )
            if gap == r:
                return OracleResult(
                    value=size,
                    witnesses=tuple(i + 1 for i in window),
                    states_explored=meter.states,
                    method="window",
                )
    raise AssertionError(f"no window with dimension gap {r}")  # unreachable for valid r


# -- families route ---------------------------------------------------------------


class _FamiliesTable:
    """Per-grid cache of zero masks for monic leading exponents.

    For a leading exponent t, the coset {x^t + lower terms} runs over all
    coefficient choices on box exponents strictly below t in graded lex;
    masks_for(t) holds the achievable zero masks (grid positions where
    the polynomial vanishes) with the first encoding achieving each."""

    def __init__(self, grid: CartesianGrid):
        self.grid = grid
        shape = grid.shape
        self.glex = sorted(shape.points(), key=lambda e: (sum(e), e))
        self.glex_rank = {e: i for i, e in enumerate(self.glex)}
        self._masks: dict = {}

    def preds(self, t) -> list:
        return self.glex[: self.glex_rank[t]]

    def masks_for(self, t, meter: _Meter) -> dict:
        hit = self._masks.get(t)
        if hit is not None:
            return hit
        field = self.grid.field
        base = self.grid.monomial_values(t)
        gens = [self.grid.monomial_values(mu) for mu in self.preds(t)]
        zero_masks: dict = {}
        for enc, vec in enumerate(_coset_vectors(field, base, gens, meter)):
            mask = 0
            for i, v in enumerate(vec):
                if not v:
                    mask |= 1 << i
            if mask not in zero_masks:
                zero_masks[mask] = enc
        self._masks[t] = zero_masks
        return zero_masks

    def poly(self, t, enc: int) -> MultiPoly:
        field = self.grid.field
        terms = {t: 1}
        for j, mu in enumerate(self.preds(t)):
            c = (enc // field.q**j) % field.q
            if c:
                terms[mu] = c
        return MultiPoly(field, self.grid.shape, terms)


_families_cache: dict = {}


def _families_table(grid: CartesianGrid) -> _FamiliesTable:
    key = id(grid)
    hit = _families_cache.get(key)
    if hit is not None and hit[0] is grid:
        return hit[1]
    table = _FamiliesTable(grid)
    if len(_families_cache) >= 8:
        _families_cache.pop(next(iter(_families_cache)))
    _families_cache[key] = (grid, table)
    return table


def _maximal_masks(masks: dict) -> list:
    """Drop masks strictly contained in another; supersets dominate when
    maximizing the popcount of an AND."""
    items = sorted(masks.items(), key=lambda kv: (-kv[0].bit_count(), kv[1]))
    kept: list = []
    for mask, enc in items:
        if any(mask | other == other for other, _ in kept):
            continue
        kept.append((mask, enc))
    return kept


def oracle_max_zeros_families(
    grid: CartesianGrid,
    band: DegreeBand,
    r: int,
    budget: OracleBudget | None = None,
    prune: bool = True,
) -> OracleResult:
    """Exact max of |common grid zeros| over families f_1..f_r of monic
    polynomials with distinct leading exponents of band degree (lower
    terms free).  n - value cross-checks the weight formula."""
    check_band(grid.shape, band)
    members = enumerate_band(grid.shape, band)
    if not 1 <= r <= len(members):
        raise RankOutOfRange(f"r = {r} outside 1..{len(members)}")
    meter = _Meter(budget or OracleBudget())
    table = _families_table(grid)

    slots = []
    for t in members:
        masks = table.masks_for(t, meter)
        if prune:
            slots.append(_maximal_masks(masks))
        else:
            slots.append(sorted(masks.items(), key=lambda kv: kv[1]))

    full = (1 << grid.shape.n) - 1
    best = -1
    best_pick: list = []

    for combo in itertools.combinations(range(len(members)), r):
        pick: list = []

        def descend(depth: int, current: int) -> None:
            nonlocal best, best_pick
            for mask, enc in slots[combo[depth]]:
                meter.spend()
                if prune and mask.bit_count() <= best:
                    break
                merged = current & mask
                if prune and merged.bit_count() <= best:
                    continue
                pick.append((combo[depth], enc))
                if depth + 1 == r:
                    total = merged.bit_count()
                    if total > best:
                        best = total
                        best_pick = list(pick)
                else:
                    descend(depth + 1, merged)
                pick.pop()

        descend(0, full)

    witnesses = tuple(table.poly(members[idx], enc) for idx, enc in best_pick)
    return OracleResult(
        value=best,
        witnesses=witnesses,
        states_explored=meter.states,
        method="families",
    )
