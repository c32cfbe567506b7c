"""Deterministic small finite fields F_{p^e}.

Elements are plain coefficient tuples ``(c0, ..., c_{e-1})`` with each
``ci`` in ``[0, p)``, read as ``c0 + c1*X + ...`` modulo a fixed monic
irreducible polynomial of degree e over F_p.  The modulus is always the
lexicographically smallest monic irreducible, coefficients compared from
the constant term up, so two runs (or two machines) always build the
identical field with no stored tables.

There is no global registry: a FieldContext is passed explicitly to
every operation that needs one.  Field orders are capped at 2^20
elements because several operations enumerate the whole field; the
``RPL_MAX_FIELD`` environment variable may lower (never raise) the cap.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    IncompatibleSubfield,
    NonPrime,
    NotPrimePower,
)

Element = tuple[int, ...]

DEFAULT_FIELD_CAP = 1 << 20
FIELD_CAP_ENV = "RPL_MAX_FIELD"


def field_cap() -> int:
    """Current cap on field order; the env override can only lower it."""
    raw = os.environ.get(FIELD_CAP_ENV)
    if raw is None:
        return DEFAULT_FIELD_CAP
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_FIELD_CAP
    if value < 2:  # a cap below the smallest field is ignored
        return DEFAULT_FIELD_CAP
    return min(value, DEFAULT_FIELD_CAP)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, p prime, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"q = {q} is not a prime power")
    p = 2
    while p * p <= q and q % p:
        p += 1 if p == 2 else 2
    if p * p > q:
        p = q
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrimePower(f"q = {q} is not a prime power")
    return p, e


def prime_powers_upto(n: int) -> list[int]:
    """All prime powers q with 2 <= q <= n, ascending."""
    if n < 2:
        return []
    composite = bytearray(n + 1)
    out = []
    for p in range(2, n + 1):
        if composite[p]:
            continue
        for multiple in range(p * p, n + 1, p):
            composite[multiple] = 1
        v = p
        while v <= n:
            out.append(v)
            v *= p
    out.sort()
    return out


@dataclass(frozen=True)
class PrimePower:
    """A validated prime power q = p^e."""

    p: int
    e: int
    q: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NonPrime(f"p = {self.p} is not prime")
        if self.e < 1 or self.p**self.e != self.q:
            raise ValueError(f"inconsistent prime power ({self.p}, {self.e}, {self.q})")

    @classmethod
    def of(cls, p: int, e: int) -> "PrimePower":
        return cls(p, e, p**e)

    @classmethod
    def from_order(cls, q: int) -> "PrimePower":
        p, e = factor_prime_power(q)
        return cls(p, e, q)


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (dense coefficient lists, ascending degree)
# ---------------------------------------------------------------------------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    """a*b mod f, with f monic."""
    if not a or not b:
        return []
    t = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                t[i + j] += ai * bj
    e = len(f) - 1
    for i in range(len(t) - 1, e - 1, -1):
        c = t[i] % p
        if c:
            base = i - e
            for j in range(e):
                if f[j]:
                    t[base + j] -= c * f[j]
        t[i] = 0
    return _poly_trim([c % p for c in t[:e]])


def _poly_pow_x(exp: int, f: list[int], p: int) -> list[int]:
    """x^exp mod f by square and multiply."""
    result = [1]
    base = [0, 1]
    while exp:
        if exp & 1:
            result = _poly_mulmod(result, base, f, p)
        exp >>= 1
        if exp:
            base = _poly_mulmod(base, base, f, p)
    return result


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """a mod b with b nonzero, not necessarily monic."""
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        if c:
            for j in range(db + 1):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
        _poly_trim(a)
        if not a:
            break
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's criterion for a monic f of degree >= 1 over F_p.

    Requires x^{p^e} == x mod f and, for every prime r | e,
    gcd(x^{p^{e/r}} - x, f) = 1.  The simpler check that x^{p^d} != x mod f
    for proper divisors d is NOT sufficient (a squarefree product of factors
    with degrees {1,2,3} passes it at e = 6).
    """
    e = len(f) - 1
    if e == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    if sum(f) % p == 0:  # 1 is a root
        return False
    xq = _poly_pow_x(p**e, f, p)
    if xq != [0, 1]:
        return False
    for r in _prime_divisors(e):
        g = list(_poly_pow_x(p ** (e // r), f, p))
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % p  # x^{p^{e/r}} - x
        if len(_poly_gcd(g, f, p)) != 1:
            return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over F_p."""
    if e == 1:
        return (0, 1)
    for low in product(range(p), repeat=e):
        f = list(low) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {e} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------
# field contexts
# ---------------------------------------------------------------------------


class FieldContext:
    """Arithmetic for F_{p^e} on coefficient tuples.

    Elements enumerate in index order: element i has the base-p digits of
    i as coefficients, constant term first, so index 0 is zero and index
    1 is one.
    """

    __slots__ = ("pp", "p", "e", "q", "modulus", "zero", "one")

    def __init__(self, pp: PrimePower, modulus: tuple[int, ...]):
        if len(modulus) != pp.e + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        self.pp = pp
        self.p = pp.p
        self.e = pp.e
        self.q = pp.q
        self.modulus = modulus
        self.zero: Element = (0,) * pp.e
        self.one: Element = (1,) + (0,) * (pp.e - 1)

    def __repr__(self) -> str:
        return f"FieldContext(q={self.p}^{self.e})"

    # -- enumeration --------------------------------------------------

    def element(self, i: int) -> Element:
        if not 0 <= i < self.q:
            raise ValueError(f"element index {i} out of range for q = {self.q}")
        digits = []
        for _ in range(self.e):
            i, d = divmod(i, self.p)
            digits.append(d)
        return tuple(digits)

    def index(self, a: Element) -> int:
        i = 0
        for c in reversed(a):
            i = i * self.p + c
        return i

    def elements(self) -> Iterator[Element]:
        if self.e == 1:
            return ((i,) for i in range(self.p))
        # product varies the last slot fastest; reversing each tuple gives
        # constant-term-fastest, i.e. index order
        return (t[::-1] for t in product(range(self.p), repeat=self.e))

    # -- arithmetic ----------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        p = self.p
        if self.e == 1:
            return ((a[0] + b[0]) % p,)
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: Element, b: Element) -> Element:
        p = self.p
        if self.e == 1:
            return ((a[0] - b[0]) % p,)
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        p = self.p
        if self.e == 1:
            return ((-a[0]) % p,)
        return tuple((-x) % p for x in a)

    def mul(self, a: Element, b: Element) -> Element:
        p = self.p
        e = self.e
        if e == 1:
            return ((a[0] * b[0]) % p,)
        t = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    t[i + j] += ai * bj
        mod = self.modulus
        for i in range(2 * e - 2, e - 1, -1):
            c = t[i] % p
            if c:
                base = i - e
                for j in range(e):
                    if mod[j]:
                        t[base + j] -= c * mod[j]
        return tuple(t[j] % p for j in range(e))

    def pow(self, a: Element, k: int) -> Element:
        if k < 0:
            raise ValueError("exponent must be non-negative")
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def inv(self, a: Element) -> Element:
        if a == self.zero:
            raise DivisionByZero(f"zero has no inverse in F_{self.q}")
        return self.pow(a, self.q - 2)

    def div(self, a: Element, b: Element) -> Element:
        return self.mul(a, self.inv(b))


@functools.lru_cache(maxsize=None)
def _build_field(p: int, e: int) -> FieldContext:
    return FieldContext(PrimePower.of(p, e), _smallest_irreducible(p, e))


def make_field(p: int, e: int) -> FieldContext:
    """Build F_{p^e} with the lexicographically smallest irreducible modulus."""
    if not is_prime(p):
        raise NonPrime(f"p = {p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    q = p**e
    cap = field_cap()
    if q > cap:
        raise FieldTooLarge(f"q = {p}^{e} = {q} exceeds the enumeration cap {cap}")
    return _build_field(p, e)


def field_from_order(q: int) -> FieldContext:
    """Build F_q from its order."""
    p, e = factor_prime_power(q)
    return make_field(p, e)


# ---------------------------------------------------------------------------
# equation solvers (full enumeration; these are the ground truth the
# counting modules build on, so they stay deliberately dumb)
# ---------------------------------------------------------------------------


def solve_power_residue(ctx: FieldContext, c: Element, k: int) -> set[Element]:
    """Exact solution set of y^k = c in ctx, by enumerating the field."""
    if k < 1:
        raise ValueError(f"exponent k must be >= 1, got {k}")
    return {y for y in ctx.elements() if ctx.pow(y, k) == c}


def solve_artin_schreier(ctx: FieldContext, sub_q: int, c: Element) -> set[Element]:
    """Exact solution set of x^sub_q + x = c in F_{sub_q^2}, by enumeration.

    The left side is additive, so the solution count is 0 or exactly
    sub_q (the kernel size of x -> x^sub_q + x on F_{sub_q^2}).
    """
    if sub_q < 2 or sub_q * sub_q != ctx.q:
        raise IncompatibleSubfield(
            f"field order {ctx.q} is not the square of sub_q = {sub_q}"
        )
    sols = {x for x in ctx.elements() if ctx.add(ctx.pow(x, sub_q), x) == c}
    assert len(sols) in (0, sub_q)
    return sols
