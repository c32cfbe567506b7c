"""Named self-verification checks behind the ``verify`` CLI subcommand.

Every check recomputes an invariant from scratch and compares it against an
independent route (closed form vs enumeration, recursion vs sieve, frozen
values vs live evaluation). Checks are pure and deterministic: fixed grids,
seeded generators, stable ordering. Each returns a named pass/fail result so
failures can be cited individually.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import bounds, gs_tower, homma_family, semigroup
from .errors import RplError
from .gf import (
    field_from_order,
    make_field,
    prime_powers_upto,
    solve_artin_schreier,
    solve_power_residue,
)

SCOPES = ("all", "gf", "homma", "gs", "semigroup", "bounds")

HOMMA_Q = (3, 4, 5, 7, 8, 9)
HOMMA_ELL = (2, 3, 4, 5, 6)
TOWER_Q = (2, 3, 4)
TOWER_M_MAX = 8
SEMIGROUP_Q = (2, 3, 4, 5)
SEMIGROUP_CONDUCTOR_CAP = 10**6
CONVERGENCE_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)
CONVERGENCE_EPS = Fraction(1, 10**9)
DEFAULT_N_MAX = 60
RATIO_Q = (2, 3, 4, 5)
RATIO_M = 40
RATIO_TOL = Fraction(1, 1000)
AXIOM_FIELD_LIMIT = 1 << 12
AXIOM_TRIPLES = 1000
CLOSURE_PAIRS = 500


@dataclass(frozen=True)
class CheckResult:
    scope: str
    name: str
    ok: bool
    detail: str = ""


def semigroup_grid() -> list[tuple[int, int]]:
    """All (q, m) with q in SEMIGROUP_Q and conductor(q, m) <= 10^6."""
    grid = []
    for q in SEMIGROUP_Q:
        m = 1
        while semigroup.conductor(q, m) <= SEMIGROUP_CONDUCTOR_CAP:
            grid.append((q, m))
            m += 1
    return grid


def _fail_detail(failures: list[str]) -> str:
    if not failures:
        return ""
    shown = "; ".join(failures[:4])
    if len(failures) > 4:
        shown += f"; +{len(failures) - 4} more"
    return shown


# ---------------------------------------------------------------------------
# gf scope
# ---------------------------------------------------------------------------


def _check_field_axioms() -> CheckResult:
    fields = prime_powers_upto(AXIOM_FIELD_LIMIT)
    failures: list[str] = []
    for q in fields:
        ctx = field_from_order(q)
        rng = random.Random(1000003 * q + 12345)
        for _ in range(AXIOM_TRIPLES):
            a = ctx.element(rng.randrange(q))
            b = ctx.element(rng.randrange(q))
            c = ctx.element(rng.randrange(q))
            ok = (
                ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
                and ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
                and ctx.add(a, b) == ctx.add(b, a)
                and ctx.mul(a, b) == ctx.mul(b, a)
                and ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
                and ctx.add(a, ctx.zero) == a
                and ctx.mul(a, ctx.one) == a
                and ctx.add(a, ctx.neg(a)) == ctx.zero
                and (a == ctx.zero or ctx.mul(a, ctx.inv(a)) == ctx.one)
            )
            if not ok:
                failures.append(f"q={q}")
                break
    return CheckResult(
        "gf",
        f"field_axioms q<={AXIOM_FIELD_LIMIT} x{AXIOM_TRIPLES}",
        not failures,
        _fail_detail(failures) or f"{len(fields)} fields",
    )


def _check_canonical_moduli() -> CheckResult:
    expected = {
        (2, 2): (1, 1, 1),
        (3, 1): (0, 1),
        (2, 3): (1, 0, 1, 1),
        (2, 4): (1, 0, 0, 1, 1),
        (5, 2): (1, 1, 1),
        (3, 2): (1, 0, 1),
        (2, 6): (1, 0, 0, 0, 0, 1, 1),
    }
    failures = [
        f"({p},{e})={make_field(p, e).modulus}"
        for (p, e), mod in sorted(expected.items())
        if make_field(p, e).modulus != mod
    ]
    return CheckResult("gf", "canonical_moduli", not failures, _fail_detail(failures))


def _check_unit_group() -> CheckResult:
    failures: list[str] = []
    for q in prime_powers_upto(256):
        ctx = field_from_order(q)
        for a in ctx.elements():
            if a == ctx.zero:
                continue
            if ctx.pow(a, q - 1) != ctx.one:
                failures.append(f"q={q}")
                break
    return CheckResult("gf", "unit_group_order q<=256", not failures, _fail_detail(failures))


def _check_artin_schreier_fibers() -> CheckResult:
    failures: list[str] = []
    for sub_q in (2, 3, 4, 5):
        ctx = field_from_order(sub_q * sub_q)
        nonempty = 0
        mass = 0
        for c in ctx.elements():
            sols = solve_artin_schreier(ctx, sub_q, c)
            if sols and len(sols) != sub_q:
                failures.append(f"q={sub_q} fiber {len(sols)}")
            nonempty += bool(sols)
            mass += len(sols)
        if nonempty != sub_q or mass != sub_q * sub_q:
            failures.append(f"q={sub_q} image {nonempty} mass {mass}")
    return CheckResult(
        "gf", "artin_schreier_fibers q in {2,3,4,5}", not failures, _fail_detail(failures)
    )


def _check_power_residue_structure() -> CheckResult:
    failures: list[str] = []
    for q in (3, 4, 5, 7, 8, 9):
        ctx = field_from_order(q)
        for k in (1, 2, 3, 4):
            d = math.gcd(k, q - 1)
            hit = 0
            for c in ctx.elements():
                sols = solve_power_residue(ctx, c, k)
                if c == ctx.zero:
                    if sols != {ctx.zero}:
                        failures.append(f"q={q} k={k} c=0")
                elif len(sols) not in (0, d):
                    failures.append(f"q={q} k={k} fiber {len(sols)}")
                else:
                    hit += bool(sols)
            if hit != (q - 1) // d:
                failures.append(f"q={q} k={k} image {hit}")
    return CheckResult("gf", "power_residue_structure", not failures, _fail_detail(failures))


def _check_frobenius() -> CheckResult:
    failures: list[str] = []
    for q in (4, 8, 9, 16, 25, 27, 32):
        ctx = field_from_order(q)
        p = ctx.p
        rng = random.Random(9001 * q + 7)
        for _ in range(200):
            a = ctx.element(rng.randrange(q))
            b = ctx.element(rng.randrange(q))
            if ctx.pow(ctx.add(a, b), p) != ctx.add(ctx.pow(a, p), ctx.pow(b, p)):
                failures.append(f"q={q}")
                break
    return CheckResult("gf", "frobenius_additivity", not failures, _fail_detail(failures))


def check_gf(n_max: int = DEFAULT_N_MAX) -> list[CheckResult]:
    return [
        _check_field_axioms(),
        _check_canonical_moduli(),
        _check_unit_group(),
        _check_artin_schreier_fibers(),
        _check_power_residue_structure(),
        _check_frobenius(),
    ]


# ---------------------------------------------------------------------------
# homma scope
# ---------------------------------------------------------------------------


def homma_grid() -> list[tuple[int, int]]:
    return [(q, ell) for q in HOMMA_Q for ell in HOMMA_ELL]


def _check_infinity_closed_form() -> CheckResult:
    failures = [
        f"({q},{ell})"
        for q, ell in homma_grid()
        if homma_family.count_infinity(q, ell) != (q - 1) ** (ell - 1)
    ]
    return CheckResult(
        "homma", "infinity_count==(q-1)^(ell-1) grid", not failures, _fail_detail(failures)
    )


def _check_brute_force_agreement() -> CheckResult:
    failures: list[str] = []
    cells = 0
    for q, ell in homma_grid():
        if q**ell > homma_family.BRUTE_FORCE_CAP:
            continue
        cells += 1
        brute = homma_family.brute_force_projective(q, ell)
        analytic = homma_family.count_total(q, ell)
        if brute != analytic:
            failures.append(f"({q},{ell}) {brute} vs {analytic}")
    return CheckResult(
        "homma",
        "brute_force==analytic grid",
        not failures,
        _fail_detail(failures) or f"{cells} cells",
    )


def _check_total_at_least_degree() -> CheckResult:
    failures: list[str] = []
    for q, ell in homma_grid():
        total = homma_family.count_total(q, ell).total
        degree = homma_family.curve_degree(q, ell)
        if Fraction(total, degree) < 1:
            failures.append(f"({q},{ell}) {total}<{degree}")
    return CheckResult("homma", "total>=degree grid", not failures, _fail_detail(failures))


def _check_mass_conservation() -> CheckResult:
    failures: list[str] = []
    for q, ell in homma_grid():
        ctx = field_from_order(q)
        k = q - 1
        states = list(homma_family.affine_level_states(q, ell))
        for prev, nxt in zip(states, states[1:]):
            outgoing = 0
            for v, mult in prev.entries.items():
                rhs = ctx.sub(ctx.pow(ctx.add(v, ctx.one), k), ctx.one)
                outgoing += mult * len(solve_power_residue(ctx, rhs, k))
            if nxt.total_mass() != outgoing or nxt.total_mass() > q * prev.total_mass():
                failures.append(f"({q},{ell})")
                break
    return CheckResult("homma", "level_mass_conservation grid", not failures, _fail_detail(failures))


def _check_frozen_point_counts() -> CheckResult:
    checks = (
        homma_family.count_total(3, 3) == homma_family.PointCount(2, 4, 6),
        homma_family.count_total(4, 2) == homma_family.PointCount(6, 3, 9),
        homma_family.count_total(3, 2) == homma_family.PointCount(2, 2, 4),
        homma_family.count_affine(5, 2) == 4,
        homma_family.count_infinity(9, 5) == 4096,
        homma_family.curve_degree(5, 4) == 64,
        homma_family.brute_force_projective(3, 4) == homma_family.count_total(3, 4),
    )
    bad = [str(i) for i, ok in enumerate(checks) if not ok]
    return CheckResult("homma", "frozen_point_counts", not bad, _fail_detail(bad))


def check_homma(n_max: int = DEFAULT_N_MAX) -> list[CheckResult]:
    return [
        _check_infinity_closed_form(),
        _check_brute_force_agreement(),
        _check_total_at_least_degree(),
        _check_mass_conservation(),
        _check_frozen_point_counts(),
    ]


# ---------------------------------------------------------------------------
# gs scope
# ---------------------------------------------------------------------------


def tower_grid() -> list[tuple[int, int]]:
    return [(q, m) for q in TOWER_Q for m in range(1, TOWER_M_MAX + 1)]


def _check_split_closed_form() -> CheckResult:
    failures: list[str] = []
    for q, m in tower_grid():
        try:
            got = gs_tower.count_split_chains(q, m)
        except RplError as exc:
            failures.append(f"({q},{m}) {type(exc).__name__}")
            continue
        if got != gs_tower.rational_places_lower_bound(q, m):
            failures.append(f"({q},{m}) {got}")
    return CheckResult(
        "gs", "split_count==(q-1)q^m (q in {2,3,4}, m in 1..8)", not failures, _fail_detail(failures)
    )


def _check_tower_level_mass() -> CheckResult:
    failures: list[str] = []
    for q in TOWER_Q:
        ctx = field_from_order(q * q)
        k = q - 1
        for state in gs_tower.tower_level_states(q, TOWER_M_MAX):
            if state.dist.total_mass() != (q * q - q) * q ** (state.level - 1):
                failures.append(f"({q},{state.level}) mass")
            for v in state.dist.entries:
                if ctx.add(ctx.pow(v, k), ctx.one) == ctx.zero:
                    failures.append(f"({q},{state.level}) inadmissible value")
                    break
    return CheckResult("gs", "tower_level_mass (q in {2,3,4})", not failures, _fail_detail(failures))


def _check_admissible_start_count() -> CheckResult:
    failures: list[str] = []
    for q in SEMIGROUP_Q:
        ctx = field_from_order(q * q)
        count = sum(
            1 for a in ctx.elements() if ctx.add(ctx.pow(a, q), a) != ctx.zero
        )
        if count != q * q - q:
            failures.append(f"q={q} count {count}")
    return CheckResult(
        "gs", "admissible_start_count q in {2,3,4,5}", not failures, _fail_detail(failures)
    )


def _check_gap_genus(q: int) -> CheckResult:
    failures: list[str] = []
    for m in range(2, TOWER_M_MAX + 1):
        gaps = semigroup.gap_count(semigroup.weierstrass_semigroup(q, m))
        if gaps != gs_tower.genus(q, m):
            failures.append(f"m={m} gaps {gaps}")
    return CheckResult(
        "gs", f"gap_count==genus for ({q},2..{TOWER_M_MAX})", not failures, _fail_detail(failures)
    )


def _check_ratio_limit() -> CheckResult:
    failures: list[str] = []
    for q in RATIO_Q:
        seq = gs_tower.tower_ratio_sequence(q, RATIO_M)
        gap = abs(seq[-1] - gs_tower.points_per_degree_limit(q))
        if gap >= RATIO_TOL:
            failures.append(f"q={q} gap {gap}")
    return CheckResult(
        "gs", "ratio_gap_at_m=40 < 1/1000 (q in {2,3,4,5})", not failures, _fail_detail(failures)
    )


def _check_ratio_monotone() -> CheckResult:
    failures: list[str] = []
    for q in RATIO_Q:
        seq = gs_tower.tower_ratio_sequence(q, 45)
        limit = gs_tower.points_per_degree_limit(q)
        if any(a <= b for a, b in zip(seq, seq[1:])):
            failures.append(f"q={q} not decreasing")
        if any(r <= limit for r in seq):
            failures.append(f"q={q} crosses limit")
    return CheckResult(
        "gs", "ratio_monotone_decreasing m in 2..45", not failures, _fail_detail(failures)
    )


def _check_frozen_tower_values() -> CheckResult:
    checks = (
        gs_tower.count_split_chains(2, 2) == 4,
        gs_tower.count_split_chains(2, 1) == 2,
        gs_tower.count_split_chains(3, 2) == 18,
        gs_tower.count_split_chains(2, 4) == 16,
        gs_tower.genus(2, 2) == 1,
        gs_tower.genus(2, 3) == 3,
        gs_tower.genus(3, 1) == 0,
        gs_tower.genus(2, 4) == 9,
        gs_tower.tower_ratio_sequence(2, 4)[-1] == Fraction(16, 19),
        gs_tower.points_per_degree_limit(2) == Fraction(2, 3),
        gs_tower.points_per_degree_limit(3) == Fraction(3, 2),
    )
    bad = [str(i) for i, ok in enumerate(checks) if not ok]
    return CheckResult("gs", "frozen_tower_values", not bad, _fail_detail(bad))


def check_gs(n_max: int = DEFAULT_N_MAX) -> list[CheckResult]:
    out = [
        _check_split_closed_form(),
        _check_tower_level_mass(),
        _check_admissible_start_count(),
    ]
    out.extend(_check_gap_genus(q) for q in SEMIGROUP_Q)
    out.extend([_check_ratio_limit(), _check_ratio_monotone(), _check_frozen_tower_values()])
    return out


# ---------------------------------------------------------------------------
# semigroup scope
# ---------------------------------------------------------------------------


def _check_gap_genus_full_grid() -> CheckResult:
    failures: list[str] = []
    cells = 0
    for q, m in semigroup_grid():
        cells += 1
        gaps = semigroup.gap_count(semigroup.weierstrass_semigroup(q, m))
        if gaps != gs_tower.genus(q, m):
            failures.append(f"({q},{m}) gaps {gaps}")
    return CheckResult(
        "semigroup",
        "gap_count==genus full grid c_m<=10^6",
        not failures,
        _fail_detail(failures) or f"{cells} cells",
    )


def _check_conductor_minimal() -> CheckResult:
    failures: list[str] = []
    for q, m in semigroup_grid():
        if m < 2:
            continue
        s = semigroup.weierstrass_semigroup(q, m)
        if s.conductor != semigroup.conductor(q, m):
            failures.append(f"({q},{m}) conductor {s.conductor}")
        elif (s.conductor - 1) in s:
            failures.append(f"({q},{m}) conductor not minimal")
        elif s.smallest_positive() != q ** (m - 1):
            failures.append(f"({q},{m}) smallest {s.smallest_positive()}")
    return CheckResult(
        "semigroup", "conductor==q^m-q^ceil(m/2) and minimal", not failures, _fail_detail(failures)
    )


def _check_generator_bounds_grid() -> CheckResult:
    failures: list[str] = []
    for q, m in semigroup_grid():
        if m < 2:
            continue
        report = semigroup.check_generator_bounds(q, m)
        if not (report.smallest_ok and report.largest_ok):
            failures.append(f"({q},{m})")
    for q, m, largest in ((2, 3, 7), (2, 4, 19)):
        if semigroup.check_generator_bounds(q, m).gamma_last != largest:
            failures.append(f"({q},{m}) expected gamma_last {largest}")
    return CheckResult(
        "semigroup", "generator_bounds grid m>=2", not failures, _fail_detail(failures)
    )


def _check_additive_closure() -> CheckResult:
    failures: list[str] = []
    for q, m in semigroup_grid():
        s = semigroup.weierstrass_semigroup(q, m)
        pool = list(s.members(max(s.conductor, 2)))
        rng = random.Random(777000 + 1000 * q + m)
        for _ in range(CLOSURE_PAIRS):
            a = rng.choice(pool)
            b = rng.choice(pool)
            if (a + b) not in s:
                failures.append(f"({q},{m}) {a}+{b}")
                break
    return CheckResult(
        "semigroup", f"additive_closure x{CLOSURE_PAIRS}", not failures, _fail_detail(failures)
    )


def _regenerate(gens: tuple[int, ...], span: int) -> int:
    reach = 1
    mask = (1 << span) - 1
    changed = True
    while changed:
        changed = False
        for g in gens:
            grown = (reach | (reach << g)) & mask
            if grown != reach:
                reach = grown
                changed = True
    return reach


def _check_regeneration() -> CheckResult:
    cells = [(2, m) for m in range(2, 13)] + [(3, m) for m in range(2, 8)]
    cells += [(4, m) for m in range(2, 6)] + [(5, m) for m in range(2, 5)]
    failures: list[str] = []
    for q, m in cells:
        s = semigroup.weierstrass_semigroup(q, m)
        span = 2 * s.conductor
        reach = _regenerate(semigroup.minimal_generators(s).gens, span)
        regenerated = {n for n in range(span) if (reach >> n) & 1}
        expected = set(s.members(span))
        if regenerated != expected:
            failures.append(f"({q},{m})")
    return CheckResult(
        "semigroup", "regenerate_from_generators [0,2c)", not failures, _fail_detail(failures)
    )


def _check_frozen_semigroups() -> CheckResult:
    s22 = semigroup.weierstrass_semigroup(2, 2)
    s23 = semigroup.weierstrass_semigroup(2, 3)
    s24 = semigroup.weierstrass_semigroup(2, 4)
    s32 = semigroup.weierstrass_semigroup(3, 2)
    checks = (
        semigroup.conductor(2, 3) == 4,
        semigroup.conductor(2, 4) == 12,
        semigroup.conductor(3, 2) == 6,
        list(s22.members(5)) == [0, 2, 3, 4],
        list(s23.members(6)) == [0, 4, 5],
        list(s24.members(13)) == [0, 8, 10, 12],
        semigroup.gap_count(s22) == 1,
        semigroup.gap_count(s23) == 3,
        semigroup.gap_count(s24) == 9,
        semigroup.minimal_generators(s22).gens == (2, 3),
        semigroup.minimal_generators(s23).gens == (4, 5, 6, 7),
        semigroup.minimal_generators(s24).gens == (8, 10, 12, 13, 14, 15, 17, 19),
        semigroup.minimal_generators(s32).gens == (3, 7, 8),
        semigroup.minimal_generators(semigroup.weierstrass_semigroup(2, 1)).gens == (1,),
    )
    bad = [str(i) for i, ok in enumerate(checks) if not ok]
    return CheckResult("semigroup", "frozen_semigroups", not bad, _fail_detail(bad))


def check_semigroup(n_max: int = DEFAULT_N_MAX) -> list[CheckResult]:
    return [
        _check_gap_genus_full_grid(),
        _check_conductor_minimal(),
        _check_generator_bounds_grid(),
        _check_additive_closure(),
        _check_regeneration(),
        _check_frozen_semigroups(),
    ]


# ---------------------------------------------------------------------------
# bounds scope
# ---------------------------------------------------------------------------


def _check_exceptional_quartic() -> CheckResult:
    ctx = field_from_order(4)
    points = len(bounds.projective_plane_points(ctx))
    count = bounds.count_exceptional_quartic()
    plane_bound = bounds.sziklai_bound(4, 4)
    ok = points == 21 and count == 14 and plane_bound == 13 and count > plane_bound
    return CheckResult("bounds", "exceptional_quartic=14", ok, f"count {count} of {points}")


def _check_coefficient_frozen() -> CheckResult:
    checks = (
        bounds.nondegenerate_coefficient(4, 2) == Fraction(7, 2),
        bounds.nondegenerate_coefficient(2, 2) == Fraction(7, 4),
        bounds.nondegenerate_coefficient(3, 3) == Fraction(20, 9),
    )
    bad = [str(i) for i, ok in enumerate(checks) if not ok]
    return CheckResult("bounds", "coefficient_frozen_values", not bad, _fail_detail(bad))


def _check_coefficient_monotone(n_max: int) -> CheckResult:
    failures: list[str] = []
    for q in CONVERGENCE_Q:
        vals = [bounds.nondegenerate_coefficient(q, n) for n in range(2, n_max + 1)]
        if any(a <= b for a, b in zip(vals, vals[1:])):
            failures.append(f"q={q} not decreasing")
        if any(not (q - 1 < v < q) for v in vals):
            failures.append(f"q={q} out of band")
    return CheckResult(
        "bounds", "coefficient_monotone q-1<coef<q", not failures, _fail_detail(failures)
    )


def _check_upper_limit_convergence(n_max: int) -> CheckResult:
    failures: list[str] = []
    found: list[str] = []
    for q in CONVERGENCE_Q:
        try:
            report = bounds.upper_limit_check(q, n_max, CONVERGENCE_EPS)
        except RplError as exc:
            failures.append(f"q={q} {type(exc).__name__}")
            continue
        found.append(f"{q}:{report.n0}")
    return CheckResult(
        "bounds",
        f"upper_limit_convergence eps=1e-9 n<={n_max}",
        not failures,
        _fail_detail(failures) or "n0 " + " ".join(found),
    )


def _check_dq_consistency() -> CheckResult:
    failures: list[str] = []
    for q in prime_powers_upto(1024):
        summary = bounds.dq_summary(q)
        if summary.upper != q - 1:
            failures.append(f"q={q} upper {summary.upper}")
        elif q == 2 and summary.best_lower is not None:
            failures.append("q=2 has a lower bound")
        elif q > 2 and not (summary.best_lower is not None and summary.best_lower <= summary.upper):
            failures.append(f"q={q} best {summary.best_lower}")
    return CheckResult("bounds", "dq_lower<=upper q<=1024", not failures, _fail_detail(failures))


def _check_square_tower_cross_module() -> CheckResult:
    failures: list[str] = []
    for r in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 31, 32):
        summary = bounds.dq_summary(r * r)
        expected = gs_tower.points_per_degree_limit(r)
        records = [rec for rec in summary.records if rec.name == "square-tower"]
        if len(records) != 1 or records[0].value != expected:
            failures.append(f"r={r}")
    return CheckResult("bounds", "square_tower_cross_module", not failures, _fail_detail(failures))


def _check_aq_half_table() -> CheckResult:
    table = bounds.ihara_half_table()
    failures: list[str] = []
    if tuple(entry.q for entry in table) != (3, 4, 5, 7, 8, 11, 13, 17, 19, 23, 29, 31):
        failures.append("row set")
    for entry in table:
        if entry.half_lower != Fraction(entry.printed):
            failures.append(f"q={entry.q} value")
        if not entry.reference:
            failures.append(f"q={entry.q} reference")
    row8 = next(entry for entry in table if entry.q == 8)
    if row8.half_lower != bounds.half_ihara_odd_power(8) or row8.half_lower != Fraction(3, 4):
        failures.append("q=8 odd-power mismatch")
    return CheckResult("bounds", "aq_half_table", not failures, _fail_detail(failures))


def _check_classical_bounds_frozen() -> CheckResult:
    dvz2 = bounds.drinfeld_vladut_upper(2)
    cover = dvz2.rational_upper + 1
    checks = (
        bounds.weil_bound(4, 1) == 9,
        bounds.weil_bound(2, 0) == 3,
        bounds.weil_bound(2, 3) == 11,
        bounds.sziklai_bound(4, 4) == 13,
        bounds.sziklai_bound(3, 1) == 1,
        bounds.sziklai_bound(5, 10) == 46,
        bounds.drinfeld_vladut_upper(4).exact == 1,
        bounds.drinfeld_vladut_upper(9).exact == 2,
        not dvz2.is_square and dvz2.radicand == 2,
        cover * cover >= 2 > (cover - Fraction(1, 10**5)) ** 2,
    )
    bad = [str(i) for i, ok in enumerate(checks) if not ok]
    return CheckResult("bounds", "weil_sziklai_dvz_frozen", not bad, _fail_detail(bad))


def _check_dq_frozen() -> CheckResult:
    s9 = bounds.dq_summary(9)
    s4 = bounds.dq_summary(4)
    s2 = bounds.dq_summary(2)
    s32 = bounds.dq_summary(32)
    names4 = {rec.name: rec.value for rec in s4.records}
    checks = (
        s9.upper == 8 and s9.best_lower == Fraction(3, 2),
        s4.upper == 3 and s4.best_lower == 1,
        names4.get("square-tower") == Fraction(2, 3),
        names4.get("half-ihara-table") == Fraction(1, 2),
        s2.upper == 1 and s2.best_lower is None,
        s32.best_lower == Fraction(21, 10),
    )
    bad = [str(i) for i, ok in enumerate(checks) if not ok]
    return CheckResult("bounds", "dq_frozen_summaries", not bad, _fail_detail(bad))


def check_bounds(n_max: int = DEFAULT_N_MAX) -> list[CheckResult]:
    return [
        _check_exceptional_quartic(),
        _check_coefficient_frozen(),
        _check_coefficient_monotone(n_max),
        _check_upper_limit_convergence(n_max),
        _check_dq_consistency(),
        _check_square_tower_cross_module(),
        _check_aq_half_table(),
        _check_classical_bounds_frozen(),
        _check_dq_frozen(),
    ]


_SCOPE_RUNNERS = {
    "gf": check_gf,
    "homma": check_homma,
    "gs": check_gs,
    "semigroup": check_semigroup,
    "bounds": check_bounds,
}


def run_verify(scope: str = "all", n_max: int = DEFAULT_N_MAX) -> list[CheckResult]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    if scope == "all":
        results: list[CheckResult] = []
        for name in ("gf", "homma", "gs", "semigroup", "bounds"):
            results.extend(_SCOPE_RUNNERS[name](n_max))
        return results
    return _SCOPE_RUNNERS[scope](n_max)
