"""Deterministic command-line interface.

Subcommands: points-homma, gs, semigroup, bounds, verify. Every command
renders to json, csv, or text; identical invocations produce byte-identical
output. Exit codes: 0 success, 1 computation or check failure, 2 validation
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import bounds, gs_tower, homma_family, semigroup, verify
from .errors import RplError
from .gf import DEFAULT_FIELD_CAP, FIELD_CAP_ENV, prime_powers_upto

EPILOG = (
    f"The environment variable {FIELD_CAP_ENV} lowers the field-size cap "
    f"(default 2^20 = {DEFAULT_FIELD_CAP}); values above the default or "
    "malformed values are ignored."
)


@dataclass
class Rendering:
    json_obj: dict
    csv_header: list[str]
    csv_rows: list[list[object]]
    text_lines: list[str]
    exit_code: int = 0


def _cmd_points_homma(args: argparse.Namespace) -> Rendering:
    count = homma_family.count_total(args.q, args.ell)
    degree = homma_family.curve_degree(args.q, args.ell)
    ratio = str(Fraction(count.total, degree))
    obj = {
        "schema": 1,
        "affine": count.affine,
        "infinity": count.infinity,
        "total": count.total,
        "degree": degree,
        "ratio": ratio,
    }
    header = ["affine", "infinity", "total", "degree", "ratio"]
    row = [count.affine, count.infinity, count.total, degree, ratio]
    lines = [f"{key} {value}" for key, value in zip(header, row)]
    return Rendering(obj, header, [row], lines)


def _cmd_gs(args: argparse.Namespace) -> Rendering:
    q, m = args.q, args.m
    split = gs_tower.count_split_chains(q, m)
    genus = gs_tower.genus(q, m)
    s = semigroup.weierstrass_semigroup(q, m)
    gens = semigroup.minimal_generators(s)
    smallest_ok = largest_ok = None
    if m >= 2:
        report = semigroup.check_generator_bounds(q, m)
        smallest_ok, largest_ok = report.smallest_ok, report.largest_ok
    obj = {
        "schema": 1,
        "q": q,
        "m": m,
        "genus": genus,
        "split": split,
        "conductor": s.conductor,
        "gap_count": semigroup.gap_count(s),
        "gamma_first": gens.gens[0],
        "gamma_last": gens.gens[-1],
        "smallest_ok": smallest_ok,
        "largest_ok": largest_ok,
    }
    header = list(obj)[1:]
    row = [obj[key] if obj[key] is not None else "" for key in header]
    lines = [f"{key} {value}" for key, value in zip(header, row) if value != ""]
    return Rendering(obj, header, [row], lines)


def _cmd_semigroup(args: argparse.Namespace) -> Rendering:
    s = semigroup.weierstrass_semigroup(args.q, args.m)
    gens = semigroup.minimal_generators(s)
    obj = {
        "schema": 1,
        "q": args.q,
        "m": args.m,
        "conductor": s.conductor,
        "gap_count": semigroup.gap_count(s),
        "smallest_positive": s.smallest_positive(),
        "generators": list(gens.gens),
    }
    header = ["q", "m", "conductor", "gap_count", "smallest_positive", "generators"]
    joined = ";".join(str(g) for g in gens.gens)
    row = [args.q, args.m, s.conductor, obj["gap_count"], obj["smallest_positive"], joined]
    lines = [f"{key} {value}" for key, value in zip(header, row)]
    return Rendering(obj, header, [row], lines)


def _summary_fields(q: int) -> tuple[dict, list[object], list[str]]:
    summary = bounds.dq_summary(q)
    upper = int(summary.upper)
    best = "" if summary.best_lower is None else str(summary.best_lower)
    records = [
        {
            "name": rec.name,
            "direction": rec.direction,
            "value": str(rec.value),
            "source": rec.source,
        }
        for rec in summary.records
    ]
    obj = {
        "q": q,
        "upper": upper,
        "best_lower": str(summary.best_lower) if summary.best_lower is not None else None,
        "records": records,
    }
    joined = ";".join(f"{rec['name']}={rec['value']}" for rec in records)
    row = [q, upper, best, joined]
    lines = [f"q {q}", f"upper {upper}", f"best_lower {best or 'unknown'}"]
    lines += [f"record {rec['name']} {rec['direction']} {rec['value']}" for rec in records]
    return obj, row, lines


def _cmd_bounds(args: argparse.Namespace) -> Rendering:
    header = ["q", "upper", "best_lower", "records"]
    if args.table is not None:
        if args.table < 2:
            raise ValueError(f"--table expects a limit of at least 2, got {args.table}")
        rows = []
        objs = []
        lines = []
        for q in prime_powers_upto(args.table):
            obj, row, _ = _summary_fields(q)
            objs.append(obj)
            rows.append(row)
            lines.append(f"q={q} upper={row[1]} best_lower={row[2] or 'unknown'}")
        return Rendering({"schema": 1, "qmax": args.table, "rows": objs}, header, rows, lines)
    obj, row, lines = _summary_fields(args.q)
    return Rendering({"schema": 1, **obj}, header, [row], lines)


def _cmd_verify(args: argparse.Namespace) -> Rendering:
    results = verify.run_verify(args.scope, args.n_max)
    passed = sum(1 for res in results if res.ok)
    obj = {
        "schema": 1,
        "scope": args.scope,
        "checks": [
            {"scope": res.scope, "name": res.name, "ok": res.ok, "detail": res.detail}
            for res in results
        ],
        "passed": passed,
        "total": len(results),
    }
    header = ["scope", "name", "ok", "detail"]
    rows = [[res.scope, res.name, res.ok, res.detail] for res in results]
    lines = []
    for res in results:
        status = "PASS" if res.ok else f"FAIL ({res.detail})"
        lines.append(f"[{res.scope}] {res.name} {status}")
    lines.append(f"{passed}/{len(results)} checks passed")
    return Rendering(obj, header, rows, lines, exit_code=0 if passed == len(results) else 1)


def _render(result: Rendering, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.json_obj, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(result.csv_header)
        writer.writerows(result.csv_rows)
        return buffer.getvalue()
    return "\n".join(result.text_lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpl",
        description="Exact point counts, semigroups, and bounds for curves over finite fields.",
        epilog=EPILOG,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", metavar="PATH", default=None, help="write output to PATH")

    p = sub.add_parser("points-homma", help="point counts for the recursive projective family")
    p.add_argument("--q", type=int, required=True, help="field size, q > 2")
    p.add_argument("--ell", type=int, required=True, help="ambient dimension, ell >= 2")
    add_common(p)
    p.set_defaults(handler=_cmd_points_homma)

    p = sub.add_parser("gs", help="tower split count, genus, and semigroup verdicts")
    p.add_argument("--q", type=int, required=True, help="subfield size; arithmetic is over q^2")
    p.add_argument("--m", type=int, required=True, help="tower level, m >= 1")
    add_common(p)
    p.set_defaults(handler=_cmd_gs)

    p = sub.add_parser("semigroup", help="Weierstrass semigroup data at the tower's top place")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    add_common(p)
    p.set_defaults(handler=_cmd_semigroup)

    p = sub.add_parser("bounds", help="bound records for one q or a prime-power table")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--q", type=int, help="prime power to summarize")
    group.add_argument("--table", type=int, metavar="QMAX", help="tabulate prime powers <= QMAX")
    add_common(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("verify", help="run the named self-verification checks")
    p.add_argument("scope", nargs="?", choices=verify.SCOPES, default="all")
    p.add_argument("--n-max", type=int, default=verify.DEFAULT_N_MAX, dest="n_max",
                   help="scan depth for the convergence checks")
    add_common(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except RplError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rendered = _render(result, args.format)
    if args.out is not None:
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    return result.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
