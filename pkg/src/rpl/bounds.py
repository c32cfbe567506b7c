"""Exact bound formulas for rational points and points-per-degree ratios.

Everything here is integer or Fraction arithmetic: square roots go
through math.isqrt, literature decimals are kept verbatim as exact
decimal fractions, and no float ever enters a comparison.

The summary object collects, for a prime power q, the known upper bound
q - 1 on the asymptotic points-per-degree ratio of projective curves
(often written D(q)) together with every applicable lower-bound record:
the explicit family (ratio >= 1 for q > 2), the optimal-tower bound for
square q, and halved lower bounds on the Ihara constant A(q) from the
literature table and from the odd-power tower construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from .errors import DegenerateDenominator, NotConverged, ValidationError
from .gf import Element, FieldContext, factor_prime_power, make_field

UNTABULATED_AQ_REMARK = (
    "For q outside the small tabulated values, except possibly when q is "
    "prime, A(q) >= 2 and the unit lower bound is no longer the best known."
)


def weil_bound(q: int, g: int) -> int:
    """Hasse-Weil upper bound floor(q + 1 + 2g*sqrt(q)), exactly."""
    factor_prime_power(q)
    if g < 0:
        raise ValidationError(f"genus must be >= 0, got {g}")
    return q + 1 + isqrt(4 * g * g * q)


def sziklai_bound(q: int, d: int) -> int:
    """Sziklai's bound (d-1)q + 1 for plane curves of degree d."""
    if d < 1:
        raise ValidationError(f"degree must be >= 1, got {d}")
    return (d - 1) * q + 1


def nondegenerate_coefficient(q: int, n: int) -> Fraction:
    """Per-degree coefficient of the nondegenerate-curve point bound in P^n.

    Equals (q-1)(q^(n+1)-1) / (q(q^n-1) - n(q-1)); strictly above q - 1
    and converging to it as n grows.
    """
    if n < 2:
        raise ValidationError(f"dimension n must be >= 2, got {n}")
    den = q * (q**n - 1) - n * (q - 1)
    if den <= 0:
        raise DegenerateDenominator(
            f"coefficient denominator {den} is not positive for q={q}, n={n}"
        )
    return Fraction((q - 1) * (q ** (n + 1) - 1), den)


@dataclass(frozen=True)
class ConvergenceReport:
    """Witness that the coefficient stays within eps of q - 1 from n0 on."""

    q: int
    n_max: int
    eps: Fraction
    n0: int
    final_gap: Fraction


def upper_limit_check(q: int, n_max: int, eps: Fraction) -> ConvergenceReport:
    """Find the least n0 with |coefficient(q, n) - (q-1)| < eps for all
    n in [n0, n_max], scanning exactly; NotConverged if no tail qualifies.
    """
    factor_prime_power(q)
    if n_max < 2:
        raise ValidationError(f"n_max must be >= 2, got {n_max}")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValidationError(f"eps must be positive, got {eps}")
    target = q - 1
    n0 = None
    for n in range(n_max, 1, -1):
        if abs(nondegenerate_coefficient(q, n) - target) < eps:
            n0 = n
        else:
            break
    if n0 is None:
        raise NotConverged(
            f"coefficient never entered the eps-window of q - 1 up to n_max = {n_max}"
        )
    return ConvergenceReport(
        q=q,
        n_max=n_max,
        eps=eps,
        n0=n0,
        final_gap=nondegenerate_coefficient(q, n_max) - target,
    )


# ---------------------------------------------------------------------------
# the exceptional quartic over F_4
# ---------------------------------------------------------------------------


def projective_plane_points(ctx: FieldContext) -> list[tuple[Element, Element, Element]]:
    """Normalized representatives of P^2 over ctx (first nonzero = 1)."""
    elems = list(ctx.elements())
    zero, one = ctx.zero, ctx.one
    points = [(one, y, z) for y, z in product(elems, repeat=2)]
    points += [(zero, one, z) for z in elems]
    points.append((zero, zero, one))
    return points


def count_exceptional_quartic() -> int:
    """Rational points over F_4 of the quartic
    (X+Y+Z)^4 + (XY+YZ+ZX)^2 + XYZ(X+Y+Z) = 0,
    the unique curve exceeding Sziklai's bound; must come out 14.
    """
    ctx = make_field(2, 2)
    count = 0
    for x, y, z in projective_plane_points(ctx):
        s = ctx.add(ctx.add(x, y), z)
        t = ctx.add(ctx.add(ctx.mul(x, y), ctx.mul(y, z)), ctx.mul(z, x))
        u = ctx.mul(ctx.mul(ctx.mul(x, y), z), s)
        value = ctx.add(ctx.add(ctx.pow(s, 4), ctx.mul(t, t)), u)
        if value == ctx.zero:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Ihara-constant inputs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IharaTableEntry:
    """One tabulated lower bound on A(q)/2, kept verbatim as printed."""

    q: int
    printed: str
    half_lower: Fraction
    reference: str


_TABLE_ROWS = (
    (3, "0.2464", "Duursma-Mak 2013"),
    (4, "0.5", "Ihara 1981; Tsfasman-Vladut-Zink 1982"),
    (5, "0.3636", "Temkine 2001; Angles-Maire 2002"),
    (7, "0.4615", "Hall-Seelig 2013"),
    (8, "0.75", "Zink 1985"),
    (11, "0.5714", "Hall-Seelig 2013"),
    (13, "0.6", "Li-Maharaj 2002"),
    (17, "0.8", "Li-Maharaj 2002"),
    (19, "0.8", "Hall-Seelig 2013"),
    (23, "0.9230", "Hall-Seelig 2013"),
    (29, "0.9523", "Hall-Seelig 2013"),
    (31, "0.9523", "Hall-Seelig 2013"),
)


def ihara_half_table() -> tuple[IharaTableEntry, ...]:
    """The twelve tabulated A(q)/2 lower bounds (truncated literature values)."""
    return tuple(
        IharaTableEntry(q=q, printed=printed, half_lower=Fraction(printed), reference=ref)
        for q, printed, ref in _TABLE_ROWS
    )


def half_ihara_odd_power(q: int) -> Fraction | None:
    """Half of the odd-power tower bound on A(q), for q = p^(2m+1), m >= 1.

    A(p^(2m+1)) >= 2 * (1/(p^m - 1) + 1/(p^(m+1) - 1))^(-1)
    (Bassa-Beelen-Garcia-Stichtenoth towers), so half of it is the
    harmonic-style expression below; None when the exponent is even or 1.
    """
    p, e = factor_prime_power(q)
    if e < 3 or e % 2 == 0:
        return None
    m = (e - 1) // 2
    a, b = p**m - 1, p ** (m + 1) - 1
    return Fraction(a * b, a + b)


@dataclass(frozen=True)
class SurdBound:
    """sqrt(q) - 1, exact for square q, else a surd with a rational cover."""

    q: int
    is_square: bool
    exact: int | None
    radicand: int | None
    rational_upper: Fraction


def drinfeld_vladut_upper(q: int) -> SurdBound:
    """Upper bound sqrt(q) - 1 on the Ihara constant A(q).

    Attained with equality when q is a square.  For non-squares the
    value is irrational; any rational at or above it is a valid cover,
    and the one returned is sqrt(q) rounded up at 6 decimal digits.
    """
    factor_prime_power(q)
    r = isqrt(q)
    if r * r == q:
        return SurdBound(q=q, is_square=True, exact=r - 1, radicand=None,
                         rational_upper=Fraction(r - 1))
    scale = 10**6
    cover = Fraction(isqrt(q * scale * scale) + 1, scale) - 1
    return SurdBound(q=q, is_square=False, exact=None, radicand=q,
                     rational_upper=cover)


# ---------------------------------------------------------------------------
# points-per-degree summary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundRecord:
    name: str
    direction: str  # "upper" | "lower"
    value: Fraction
    source: str


@dataclass(frozen=True)
class DqSummary:
    """All applicable bound records for one prime power q."""

    q: int
    records: tuple[BoundRecord, ...]
    upper: Fraction
    best_lower: Fraction | None  # None when no lower record applies (q = 2)


def dq_summary(q: int) -> DqSummary:
    """Collect every applicable points-per-degree bound record for q."""
    p, e = factor_prime_power(q)
    records = [
        BoundRecord(
            name="nondegenerate-limit",
            direction="upper",
            value=Fraction(q - 1),
            source="limit of the nondegenerate point bound over growing dimension",
        )
    ]
    if q > 2:
        records.append(
            BoundRecord(
                name="explicit-family",
                direction="lower",
                value=Fraction(1),
                source="recursive projective family with as many points as its degree",
            )
        )
    if e % 2 == 0:
        r = p ** (e // 2)
        records.append(
            BoundRecord(
                name="square-tower",
                direction="lower",
                value=Fraction(r * r - r, r + 1),
                source="one-point embeddings of an optimal recursive tower",
            )
        )
    for entry in ihara_half_table():
        if entry.q == q:
            records.append(
                BoundRecord(
                    name="half-ihara-table",
                    direction="lower",
                    value=entry.half_lower,
                    source=f"half of the tabulated A(q) bound ({entry.reference})",
                )
            )
    odd = half_ihara_odd_power(q)
    if odd is not None:
        records.append(
            BoundRecord(
                name="half-ihara-odd-power",
                direction="lower",
                value=odd,
                source="half of the odd-power tower bound (Bassa-Beelen-Garcia-Stichtenoth 2015)",
            )
        )
    lowers = [rec.value for rec in records if rec.direction == "lower"]
    return DqSummary(
        q=q,
        records=tuple(records),
        upper=Fraction(q - 1),
        best_lower=max(lowers) if lowers else None,
    )
