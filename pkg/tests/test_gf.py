"""Field construction, canonical modulus choice, arithmetic, and solvers."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rpl.errors import (
    DivisionByZero,
    FieldTooLarge,
    IncompatibleSubfield,
    NonPrime,
    NotPrimePower,
)
from rpl.gf import (
    DEFAULT_FIELD_CAP,
    FIELD_CAP_ENV,
    PrimePower,
    factor_prime_power,
    field_cap,
    field_from_order,
    is_prime,
    make_field,
    prime_powers_upto,
    solve_artin_schreier,
    solve_power_residue,
)

# ---------------------------------------------------------------------------
# independent polynomial oracle: trial division over F_p, low-degree-first
# coefficient tuples, used to certify the modulus choice
# ---------------------------------------------------------------------------


def poly_remainder(f, g, p):
    # g must be monic
    assert g[-1] == 1
    r = [c % p for c in f]
    while len(r) >= len(g):
        lead = r[-1]
        if lead:
            shift = len(r) - len(g)
            for i, gc in enumerate(g):
                r[shift + i] = (r[shift + i] - lead * gc) % p
        r.pop()
    return r


def irreducible_by_trial_division(f, p):
    e = len(f) - 1
    assert e >= 1 and f[-1] == 1
    for d in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if all(c == 0 for c in poly_remainder(f, divisor, p)):
                return False
    return True


def smallest_irreducible_by_scan(p, e):
    for tail in itertools.product(range(p), repeat=e):
        candidate = list(tail) + [1]
        if irreducible_by_trial_division(candidate, p):
            return tuple(candidate)
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------
# primes and prime powers
# ---------------------------------------------------------------------------


def test_is_prime_matches_trial_division():
    for n in range(-3, 300):
        expected = n >= 2 and all(n % d for d in range(2, n))
        assert is_prime(n) == expected


def test_factor_prime_power_examples():
    assert factor_prime_power(2) == (2, 1)
    assert factor_prime_power(8) == (2, 3)
    assert factor_prime_power(9) == (3, 2)
    assert factor_prime_power(125) == (5, 3)
    assert factor_prime_power(1024) == (2, 10)


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100, 1000])
def test_factor_prime_power_rejects_composites(q):
    with pytest.raises(NotPrimePower):
        factor_prime_power(q)


def test_prime_powers_upto_32_frozen():
    assert prime_powers_upto(32) == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
    ]


def test_prime_powers_upto_complete():
    listed = set(prime_powers_upto(200))
    for n in range(2, 201):
        try:
            factor_prime_power(n)
            assert n in listed
        except NotPrimePower:
            assert n not in listed
    assert prime_powers_upto(1) == []


def test_prime_power_type():
    pp = PrimePower.from_order(27)
    assert (pp.p, pp.e, pp.q) == (3, 3, 27)
    assert PrimePower.of(2, 5).q == 32


# ---------------------------------------------------------------------------
# canonical modulus: lexicographically smallest irreducible, constant
# coefficient compared first
# ---------------------------------------------------------------------------

FROZEN_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 6): (1, 0, 0, 0, 0, 1, 1),
    (3, 2): (1, 0, 1),
    (5, 2): (1, 1, 1),
}


def test_modulus_frozen_values():
    for (p, e), modulus in FROZEN_MODULI.items():
        assert make_field(p, e).modulus == modulus


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (2, 4), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_modulus_is_lex_smallest_irreducible(p, e):
    modulus = make_field(p, e).modulus
    assert modulus == smallest_irreducible_by_scan(p, e)
    assert irreducible_by_trial_division(list(modulus), p)


def test_weak_order_criterion_trap_rejected():
    # x^6 + x^5 + x = x(x^2+x+1)(x^3+x+1): reducible and squarefree with
    # factor degrees all dividing 6, so it satisfies x^(2^6) = x mod f;
    # only a proper-divisor check rejects it
    trap = (0, 1, 0, 0, 0, 1, 1)
    assert not irreducible_by_trial_division(list(trap), 2)
    assert make_field(2, 6).modulus != trap


def test_degree_one_modulus_is_x():
    for p in (2, 3, 5, 101):
        assert make_field(p, 1).modulus == (0, 1)


def test_make_field_validation():
    with pytest.raises(NonPrime):
        make_field(4, 2)
    with pytest.raises(NonPrime):
        make_field(1, 3)
    with pytest.raises(ValueError):
        make_field(2, 0)


# ---------------------------------------------------------------------------
# element encoding and arithmetic
# ---------------------------------------------------------------------------


def test_element_index_roundtrip():
    for q in (2, 4, 8, 9, 25, 27):
        ctx = field_from_order(q)
        listed = list(ctx.elements())
        assert len(listed) == q
        assert listed == [ctx.element(i) for i in range(q)]
        for i, a in enumerate(listed):
            assert ctx.index(a) == i


def test_exhaustive_tables_small_fields():
    for q in (2, 3, 4, 5, 7, 8, 9):
        ctx = field_from_order(q)
        els = list(ctx.elements())
        for a in els:
            assert ctx.add(a, ctx.zero) == a
            assert ctx.mul(a, ctx.one) == a
            assert ctx.add(a, ctx.neg(a)) == ctx.zero
            assert ctx.pow(a, q) == a
            if a != ctx.zero:
                assert ctx.mul(a, ctx.inv(a)) == ctx.one
                assert ctx.pow(a, q - 1) == ctx.one
            for b in els:
                assert ctx.add(a, b) == ctx.add(b, a)
                assert ctx.mul(a, b) == ctx.mul(b, a)
                assert ctx.sub(a, b) == ctx.add(a, ctx.neg(b))


def test_quadratic_extension_table():
    # F_4 = F_2[x]/(x^2+x+1); w = x satisfies w^2 = w + 1 and w^3 = 1
    ctx = make_field(2, 2)
    w = ctx.element(2)
    w2 = ctx.mul(w, w)
    assert w2 == ctx.add(w, ctx.one)
    assert ctx.mul(w, w2) == ctx.one


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8, 9, 16, 25, 27, 49]), st.data())
def test_axioms_hold_on_random_triples(q, data):
    ctx = field_from_order(q)
    a = ctx.element(data.draw(st.integers(0, q - 1)))
    b = ctx.element(data.draw(st.integers(0, q - 1)))
    c = ctx.element(data.draw(st.integers(0, q - 1)))
    assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([4, 8, 9, 27, 25]), st.data())
def test_frobenius_is_additive(q, data):
    ctx = field_from_order(q)
    p = ctx.p
    a = ctx.element(data.draw(st.integers(0, q - 1)))
    b = ctx.element(data.draw(st.integers(0, q - 1)))
    assert ctx.pow(ctx.add(a, b), p) == ctx.add(ctx.pow(a, p), ctx.pow(b, p))


def test_division_errors():
    ctx = make_field(3, 2)
    with pytest.raises(DivisionByZero):
        ctx.inv(ctx.zero)
    with pytest.raises(DivisionByZero):
        ctx.div(ctx.one, ctx.zero)
    with pytest.raises(ValueError):
        ctx.pow(ctx.one, -1)


def test_division_by_zero_is_zero_division_error():
    ctx = make_field(2, 2)
    with pytest.raises(ZeroDivisionError):
        ctx.inv(ctx.zero)


# ---------------------------------------------------------------------------
# field-size cap
# ---------------------------------------------------------------------------


def test_default_cap(monkeypatch):
    monkeypatch.delenv(FIELD_CAP_ENV, raising=False)
    assert field_cap() == DEFAULT_FIELD_CAP
    with pytest.raises(FieldTooLarge):
        make_field(2, 21)


def test_cap_env_lowers(monkeypatch):
    monkeypatch.setenv(FIELD_CAP_ENV, "100")
    assert field_cap() == 100
    with pytest.raises(FieldTooLarge):
        make_field(2, 7)
    assert make_field(2, 6).q == 64


def test_cap_env_cannot_raise(monkeypatch):
    monkeypatch.setenv(FIELD_CAP_ENV, str(1 << 30))
    assert field_cap() == DEFAULT_FIELD_CAP


@pytest.mark.parametrize("raw", ["banana", "", "1", "0", "-5", "2.5"])
def test_cap_env_malformed_or_tiny_ignored(raw, monkeypatch):
    monkeypatch.setenv(FIELD_CAP_ENV, raw)
    assert field_cap() == DEFAULT_FIELD_CAP


# ---------------------------------------------------------------------------
# equation solvers
# ---------------------------------------------------------------------------


def test_power_residue_cube_structure_f3():
    ctx = field_from_order(3)
    zero, one, two = ctx.element(0), ctx.element(1), ctx.element(2)
    assert solve_power_residue(ctx, zero, 2) == {zero}
    assert solve_power_residue(ctx, one, 2) == {one, two}
    assert solve_power_residue(ctx, two, 2) == set()


def test_power_residue_squares_f7():
    ctx = field_from_order(7)
    squares = {ctx.index(ctx.mul(a, a)) for a in ctx.elements() if a != ctx.zero}
    assert squares == {1, 2, 4}
    for i in range(1, 7):
        sols = solve_power_residue(ctx, ctx.element(i), 2)
        assert len(sols) == (2 if i in squares else 0)


def test_power_residue_k_one_is_identity():
    ctx = field_from_order(9)
    for a in ctx.elements():
        assert solve_power_residue(ctx, a, 1) == {a}


def test_power_residue_rejects_bad_exponent():
    ctx = field_from_order(4)
    with pytest.raises(ValueError):
        solve_power_residue(ctx, ctx.one, 0)


def test_artin_schreier_fibers_f4():
    ctx = field_from_order(4)
    zero, one = ctx.zero, ctx.one
    w, w2 = ctx.element(2), ctx.element(3)
    assert solve_artin_schreier(ctx, 2, zero) == {zero, one}
    assert solve_artin_schreier(ctx, 2, one) == {w, w2}
    assert solve_artin_schreier(ctx, 2, w) == set()
    assert solve_artin_schreier(ctx, 2, w2) == set()


def test_artin_schreier_image_is_subfield_sized():
    for sub_q in (2, 3, 5):
        ctx = field_from_order(sub_q * sub_q)
        nonempty = sum(
            1 for c in ctx.elements() if solve_artin_schreier(ctx, sub_q, c)
        )
        assert nonempty == sub_q


def test_artin_schreier_requires_square_field():
    ctx = field_from_order(8)
    with pytest.raises(IncompatibleSubfield):
        solve_artin_schreier(ctx, 2, ctx.zero)
    ctx9 = field_from_order(9)
    with pytest.raises(IncompatibleSubfield):
        solve_artin_schreier(ctx9, 2, ctx9.zero)
