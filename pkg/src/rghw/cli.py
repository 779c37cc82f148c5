"""Command line front end: hierarchy / maximal / verify.

All results go to stdout, diagnostics to stderr.  Every number printed
is an exact integer.  Exit codes: 0 success, 1 verification mismatch,
2 invalid input, 3 budget exhausted while an oracle was requested.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from random import Random

from .boxcomb import BoxShape, DegreeBand, band_size, check_band
from .codes import build_code, build_grid
from .errors import BudgetExceeded, RghwError, SubsetTooLarge
from .gf import Field
from .oracle import OracleBudget, oracle_rghw_support, oracle_rghw_window
from .polynomials import common_zero_count, footprint_count, maximal_family, random_poly
from .weights import WeightQuery, hierarchy, rghw

DEFAULT_GRID_QS = (2, 3, 4)
DEFAULT_GRID_SHAPES = ((2,), (3,), (2, 2), (2, 3), (3, 3), (2, 2, 2))


# -- small parsers ------------------------------------------------------------------


def parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(piece) for piece in text.split(",") if piece != ""]
    except ValueError:
        raise ValueError(f"cannot parse {what} from {text!r}") from None


def parse_subsets(text: str) -> list[list[int]]:
    return [parse_ints(piece, "subset") for piece in text.split(";")]


def parse_shapes(text: str) -> list[tuple]:
    return [tuple(parse_ints(piece, "sizes")) for piece in text.split(";")]


def _warn(message: str) -> None:
    print(message, file=sys.stderr)


def _budget(args) -> OracleBudget:
    return OracleBudget(max_states=args.budget_states, time_cap=args.budget_seconds)


def _validate_sizes(sizes, q: int) -> BoxShape:
    shape = BoxShape(sizes)
    if max(shape.d) > q:
        raise SubsetTooLarge(f"d_m = {max(shape.d)} > q = {q}")
    if tuple(sizes) != shape.d:
        _warn(
            f"WARNING: sizes {list(sizes)} sorted ascending to {list(shape.d)} "
            f"(permutation {list(shape.permutation)})"
        )
    return shape


# -- output helpers -----------------------------------------------------------------


def _emit_csv(header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def hierarchy_json_obj(q: int, shape: BoxShape, band: DegreeBand, records) -> dict:
    return {
        "query": {"q": q, "sizes": list(shape.d), "u1": band.u1, "u2": band.u2},
        "results": [
            {
                "r": rec.r,
                "a_r": list(rec.a_r),
                "s": rec.s,
                "M_r": rec.m_r,
                "max_zeros": rec.max_zeros,
                "oracle": rec.oracle,
            }
            for rec in records
        ],
    }


def _print_hierarchy(q, shape, band, records, fmt) -> None:
    if fmt == "json":
        print(json.dumps(hierarchy_json_obj(q, shape, band, records), indent=2))
    elif fmt == "csv":
        _emit_csv(
            ["r", "a_r", "s", "M_r", "max_zeros", "oracle"],
            [
                [
                    rec.r,
                    " ".join(str(x) for x in rec.a_r),
                    rec.s,
                    rec.m_r,
                    rec.max_zeros,
                    "" if rec.oracle is None else rec.oracle,
                ]
                for rec in records
            ],
        )
    else:
        print(f"q={q} sizes={list(shape.d)} u1={band.u1} u2={band.u2}")
        cols = "r a_r s M_r max_zeros" + (" oracle" if any(r.oracle is not None for r in records) else "")
        print(cols)
        for rec in records:
            row = f"{rec.r} {rec.a_r} {rec.s} {rec.m_r} {rec.max_zeros}"
            if rec.oracle is not None:
                row += f" {rec.oracle}"
            print(row)


# -- subcommands --------------------------------------------------------------------


def cmd_hierarchy(args) -> int:
    q = args.q
    field = Field(q)
    sizes = parse_ints(args.sizes, "sizes")
    shape = _validate_sizes(sizes, q)
    band = DegreeBand(args.u2, args.u1)
    check_band(shape, band)
    if args.r is not None:
        records = [rghw(WeightQuery(shape, band, args.r))]
    else:
        records = list(hierarchy(shape, band).records)
    if args.oracle:
        subsets = parse_subsets(args.subsets) if args.subsets else None
        grid = build_grid(field, sizes, subsets=subsets, policy=args.policy)
        c1 = build_code(grid, band.u1)
        c2 = build_code(grid, band.u2) if band.u2 >= 0 else None
        budget = _budget(args)
        confirmed = []
        for rec in records:
            result = oracle_rghw_support(c1, c2, rec.r, budget)
            confirmed.append(
                type(rec)(rec.r, rec.a_r, rec.s, rec.m_r, rec.max_zeros, result.value)
            )
        records = confirmed
    _print_hierarchy(q, shape, band, records, args.format)
    return 0


def cmd_maximal(args) -> int:
    q = args.q
    field = Field(q)
    sizes = parse_ints(args.sizes, "sizes")
    shape = _validate_sizes(sizes, q)
    band = DegreeBand(args.u2, args.u1)
    check_band(shape, band)
    record = rghw(WeightQuery(shape, band, args.r))
    subsets = parse_subsets(args.subsets) if args.subsets else None
    grid = build_grid(field, sizes, subsets=subsets, policy=args.policy)
    family = maximal_family(grid, band, args.r)
    zeros = common_zero_count(family, grid)
    support = shape.n - zeros
    if args.format == "json":
        obj = {
            "query": {
                "q": q,
                "sizes": list(shape.d),
                "u1": band.u1,
                "u2": band.u2,
                "r": args.r,
            },
            "family": [f.render() for f in family],
            "leading_exponents": [list(f.leading_term().exponent) for f in family],
            "common_zeros": zeros,
            "support": support,
            "M_r": record.m_r,
        }
        print(json.dumps(obj, indent=2))
    elif args.format == "csv":
        _emit_csv(
            ["index", "polynomial", "leading_exponent", "common_zeros", "support", "M_r"],
            [
                [
                    i + 1,
                    f.render(),
                    " ".join(str(x) for x in f.leading_term().exponent),
                    zeros,
                    support,
                    record.m_r,
                ]
                for i, f in enumerate(family)
            ],
        )
    else:
        print(f"q={q} sizes={list(shape.d)} u1={band.u1} u2={band.u2} r={args.r}")
        for i, f in enumerate(family):
            print(f"f_{i + 1} = {f.render()}")
        print(f"common zeros = {zeros}")
        print(f"support = {support}")
        print(f"M_r = {record.m_r}")
    return 0


def run_verify_grid(
    qs,
    shapes,
    max_n: int = 9,
    window_max_n: int = 8,
    budget: OracleBudget | None = None,
    corrupt: bool = False,
    attainment: bool = True,
):
    """Formula-vs-oracle sweep.  Returns (rows, summary); each row is a dict
    with the tuple parameters, the formula value, the oracle values that ran
    (None where skipped or not applicable) and a status OK/MISMATCH/SKIPPED."""
    rows = []
    summary = {"ok": 0, "mismatch": 0, "skipped": 0}
    for q in qs:
        field = Field(q)
        for sizes in shapes:
            if max(sizes) > q:
                continue
            shape = BoxShape(sizes)
            if shape.n > max_n:
                continue
            grid = build_grid(field, sizes)
            codes = {u: build_code(grid, u) for u in range(shape.k + 1)}
            for u1 in range(shape.k + 1):
                for u2 in range(-1, u1):
                    band = DegreeBand(u2, u1)
                    c1 = codes[u1]
                    c2 = codes[u2] if u2 >= 0 else None
                    ell = band_size(shape, band)
                    for r in range(1, ell + 1):
                        formula = rghw(WeightQuery(shape, band, r)).m_r
                        if corrupt:
                            formula += 1
                        support = window = attained = None
                        skipped = False
                        try:
                            support = oracle_rghw_support(c1, c2, r, budget).value
                        except BudgetExceeded:
                            skipped = True
                        if shape.n <= window_max_n:
                            try:
                                window = oracle_rghw_window(c1, c2, r, budget).value
                            except BudgetExceeded:
                                skipped = True
                        if attainment:
                            family = maximal_family(grid, band, r)
                            attained = shape.n - common_zero_count(family, grid)
                        ran = [v for v in (support, window, attained) if v is not None]
                        if any(v != formula for v in ran):
                            status = "MISMATCH"
                        elif skipped:
                            status = "SKIPPED"
                        else:
                            status = "OK"
                        summary["ok" if status == "OK" else status.lower()] += 1
                        rows.append(
                            {
                                "q": q,
                                "sizes": list(shape.d),
                                "u1": u1,
                                "u2": u2,
                                "r": r,
                                "formula": formula,
                                "support": support,
                                "window": window,
                                "attainment": attained,
                                "status": status,
                            }
                        )
    return rows, summary


def run_footprint_sweep(q: int, count: int, seed: int, max_n: int = 12):
    """Seeded random families; checks |common zeros| <= footprint bound of
    the leading exponents.  Returns (checked, violations)."""
    field = Field(q)
    shapes = []

    def grow(prefix, product):
        for s in range(prefix[-1] if prefix else 2, min(q, max_n) + 1):
            if product * s > max_n:
                break
            shapes.append(tuple(prefix + [s]))
            grow(prefix + [s], product * s)

    grow([], 1)
    grids = {sizes: build_grid(field, sizes) for sizes in shapes}
    rng = Random(seed)
    violations = []
    for _ in range(count):
        sizes = shapes[rng.randrange(len(shapes))]
        grid = grids[sizes]
        family = [
            random_poly(field, grid.shape, rng) for _ in range(rng.randint(1, 3))
        ]
        zeros = common_zero_count(family, grid)
        bound = footprint_count(grid.shape, [f.leading_term().exponent for f in family])
        if zeros > bound:
            violations.append((sizes, [f.terms for f in family], zeros, bound))
    return count, violations


def cmd_verify(args) -> int:
    qs = parse_ints(args.q_list, "q list")
    shapes = parse_shapes(args.shapes)
    for sizes in shapes:
        BoxShape(sizes)  # validates positivity early
    budget = _budget(args)
    rows, summary = run_verify_grid(
        qs,
        shapes,
        max_n=args.max_n,
        window_max_n=args.window_max_n,
        budget=budget,
        corrupt=args.corrupt_formula,
    )
    footprint_lines = []
    if args.footprint:
        for q in qs:
            checked, violations = run_footprint_sweep(q, args.footprint, args.seed)
            footprint_lines.append(
                {"q": q, "families": checked, "violations": len(violations)}
            )
            if violations:
                summary["mismatch"] += len(violations)
    if args.format == "json":
        obj = {"grid": rows, "footprint": footprint_lines, "summary": summary}
        print(json.dumps(obj, indent=2))
    elif args.format == "csv":
        _emit_csv(
            ["q", "sizes", "u1", "u2", "r", "formula", "support", "window", "attainment", "status"],
            [
                [
                    row["q"],
                    " ".join(str(x) for x in row["sizes"]),
                    row["u1"],
                    row["u2"],
                    row["r"],
                    row["formula"],
                    "" if row["support"] is None else row["support"],
                    "" if row["window"] is None else row["window"],
                    "" if row["attainment"] is None else row["attainment"],
                    row["status"],
                ]
                for row in rows
            ],
        )
    else:
        for row in rows:
            print(
                f"q={row['q']} sizes={row['sizes']} u1={row['u1']} u2={row['u2']} "
                f"r={row['r']} formula={row['formula']} support={row['support']} "
                f"window={row['window']} attainment={row['attainment']} {row['status']}"
            )
        for line in footprint_lines:
            print(
                f"footprint q={line['q']} families={line['families']} "
                f"violations={line['violations']}"
            )
        print(
            f"summary: {summary['ok']} OK, {summary['mismatch']} MISMATCH, "
            f"{summary['skipped']} SKIPPED"
        )
    return 1 if summary["mismatch"] else 0


# -- parser -------------------------------------------------------------------------


def _add_common(sub) -> None:
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--budget-states", type=int, default=OracleBudget().max_states)
    sub.add_argument("--budget-seconds", type=int, default=OracleBudget().time_cap)


def _add_code_options(sub) -> None:
    sub.add_argument("--q", type=int, required=True, help="field order (prime power)")
    sub.add_argument("--sizes", required=True, help="comma separated d_1,...,d_m")
    sub.add_argument("--u1", type=int, required=True)
    sub.add_argument("--u2", type=int, required=True, help="-1 for the zero subcode")
    sub.add_argument("--subsets", help="explicit A_i as semicolon separated int lists")
    sub.add_argument("--policy", choices=("first", "last"), default="first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rghw",
        description="Relative generalized Hamming weights of affine Cartesian codes",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    h = subs.add_parser("hierarchy", help="weight hierarchy from the closed formula")
    _add_code_options(h)
    h.add_argument("--r", type=int, help="single rank instead of the full hierarchy")
    h.add_argument("--oracle", action="store_true", help="confirm rows by brute force")
    _add_common(h)
    h.set_defaults(func=cmd_hierarchy)

    m = subs.add_parser("maximal", help="maximal polynomial family attaining M_r")
    _add_code_options(m)
    m.add_argument("--r", type=int, required=True)
    _add_common(m)
    m.set_defaults(func=cmd_maximal)

    v = subs.add_parser("verify", help="formula vs oracle sweep over a grid of codes")
    v.add_argument("--q-list", default=",".join(str(q) for q in DEFAULT_GRID_QS))
    v.add_argument(
        "--shapes",
        default=";".join(",".join(str(s) for s in sh) for sh in DEFAULT_GRID_SHAPES),
    )
    v.add_argument("--max-n", type=int, default=9)
    v.add_argument("--window-max-n", type=int, default=8)
    v.add_argument("--footprint", type=int, default=0, help="random families per field")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--corrupt-formula", action="store_true", help=argparse.SUPPRESS)
    _add_common(v)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (RghwError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
