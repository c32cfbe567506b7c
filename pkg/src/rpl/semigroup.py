"""Weierstrass semigroups of the recursive tower, as explicit bitmaps.

The semigroup at level m is H(1) = Z>=0 and, for m > 1,

    H(m) = q * H(m-1)  union  { n : n >= c_m },    c_m = q^m - q^ceil(m/2).

A NumericalSemigroup stores the membership window below its conductor as
bytes plus the rule "everything at or above the conductor is a member",
which is exact for any cofinite submonoid of Z>=0.  Gap counts, minimal
generating sets and the degree bounds on the largest generator are all
derived from that window with integer arithmetic only.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

from .errors import ComputationError, TooLarge, ValidationError

CONDUCTOR_CAP = 10**7


@dataclass(frozen=True)
class NumericalSemigroup:
    """Cofinite additive submonoid of Z>=0.

    window[n] is 1 exactly when n < conductor is a member; every
    n >= conductor is a member.  The stored conductor is always minimal
    (conductor - 1 is a gap whenever conductor > 0).
    """

    conductor: int
    window: bytes

    def __post_init__(self) -> None:
        if self.conductor < 0 or len(self.window) != self.conductor:
            raise ValueError("window length must equal the conductor")
        if self.conductor > 0:
            if not self.window[0]:
                raise ValueError("0 must be a member")
            if self.window[self.conductor - 1]:
                raise ValueError("stored conductor is not minimal")

    @classmethod
    def from_window(cls, conductor: int, window: bytes | bytearray) -> "NumericalSemigroup":
        """Build with the minimal conductor, trimming trailing members."""
        c = conductor
        while c > 0 and window[c - 1]:
            c -= 1
        return cls(c, bytes(window[:c]))

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self.window[n])

    def members(self, stop: int) -> Iterator[int]:
        """Members below stop, ascending."""
        w = self.window
        for n in range(min(self.conductor, stop)):
            if w[n]:
                yield n
        yield from range(self.conductor, stop)

    def smallest_positive(self) -> int:
        for n in range(1, self.conductor):
            if self.window[n]:
                return n
        return max(self.conductor, 1)


@dataclass(frozen=True)
class GeneratorSet:
    """Minimal generators of a numerical semigroup, ascending."""

    gens: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.gens:
            raise ValueError("a numerical semigroup needs at least one generator")
        if any(g <= 0 for g in self.gens) or list(self.gens) != sorted(set(self.gens)):
            raise ValueError("generators must be positive, strictly increasing")


def conductor(q: int, m: int) -> int:
    """Conductor q^m - q^ceil(m/2) of the level-m semigroup."""
    if q < 2:
        raise ValidationError(f"q must be >= 2, got {q}")
    if m < 1:
        raise ValidationError(f"m must be >= 1, got {m}")
    return q**m - q ** ((m + 1) // 2)


@functools.lru_cache(maxsize=None)
def weierstrass_semigroup(q: int, m: int) -> NumericalSemigroup:
    """Level-m semigroup by the scale-and-union recursion."""
    c = conductor(q, m)  # validates q, m
    if c > CONDUCTOR_CAP:
        raise TooLarge(f"conductor {c} exceeds the bitmap cap {CONDUCTOR_CAP}")
    if m == 1:
        return NumericalSemigroup(0, b"")
    prev = weierstrass_semigroup(q, m - 1)
    win = bytearray(c)
    # members below c are exactly q*s with s in H(m-1): fill every q-th
    # slot from the previous window extended by its tail rule
    n_src = (c + q - 1) // q
    src = bytearray(n_src)
    take = min(prev.conductor, n_src)
    src[:take] = prev.window[:take]
    if n_src > prev.conductor:
        src[prev.conductor :] = b"\x01" * (n_src - prev.conductor)
    win[::q] = src
    result = NumericalSemigroup.from_window(c, win)
    if result.conductor != c:
        raise ComputationError(
            f"recursion produced conductor {result.conductor}, expected {c}"
        )
    return result


def gap_count(s: NumericalSemigroup) -> int:
    """Number of gaps; equals the genus for the tower semigroups."""
    return s.window.count(0)


def minimal_generators(s: NumericalSemigroup) -> GeneratorSet:
    """Minimal generating set, by sieving pairwise sums of members.

    Every minimal generator is below conductor + smallest positive
    member: anything at or past that bound is (member >= conductor) +
    smallest.  Below the bound, a sum of two positive members is
    necessarily a sum of two members below the conductor, because
    tail + anything already reaches the bound.
    """
    c = s.conductor
    if c == 0:
        return GeneratorSet((1,))
    g1 = s.smallest_positive()
    limit = c + g1
    sparse = [n for n in range(1, c) if s.window[n]]
    reach = bytearray(limit)
    for i, a in enumerate(sparse):
        for b in sparse[i:]:
            total = a + b
            if total >= limit:
                break
            reach[total] = 1
    gens = [n for n in s.members(limit) if n > 0 and not reach[n]]
    return GeneratorSet(tuple(gens))


@dataclass(frozen=True)
class GeneratorBoundReport:
    """Observed extreme generators against the predicted degree bounds."""

    q: int
    m: int
    conductor: int
    gamma_first: int
    gamma_last: int
    smallest_ok: bool  # gamma_first == q^(m-1)
    largest_ok: bool  # gamma_last <= conductor + q^(m-1) - 1


def check_generator_bounds(q: int, m: int) -> GeneratorBoundReport:
    """Compare extreme minimal generators with their closed-form bounds."""
    if m < 2:
        raise ValidationError(f"generator bounds need m >= 2, got m = {m}")
    s = weierstrass_semigroup(q, m)
    gens = minimal_generators(s).gens
    gamma_first, gamma_last = gens[0], gens[-1]
    return GeneratorBoundReport(
        q=q,
        m=m,
        conductor=s.conductor,
        gamma_first=gamma_first,
        gamma_last=gamma_last,
        smallest_ok=gamma_first == q ** (m - 1),
        largest_ok=gamma_last <= s.conductor + q ** (m - 1) - 1,
    )
