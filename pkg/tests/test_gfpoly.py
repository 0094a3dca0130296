"""Polynomial layer: hand-expansion oracles, algebraic properties, and the
frozen factor profile of f1 = (x+1)^19 + x^19 + 1 over F_5."""

from __future__ import annotations

import random

import pytest

from cyclopt.gfpoly import (
    Poly,
    distinct_degree_parts,
    distinct_degree_profile,
    is_irreducible,
    is_prime,
    one,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_monic,
    poly_mul,
    poly_pow,
    poly_pretty,
    poly_scale,
    poly_sub,
    powmod_frobenius,
    x,
    zero,
)


def P(p, *coeffs):
    return Poly(p, coeffs)


# F1 = (x+1)^19 + x^19 + 1 over F_5, used throughout the degree-profile tests.
def f1_poly():
    return poly_add(
        poly_add(poly_pow(P(5, 1, 1), 19), poly_pow(x(5), 19)), one(5)
    )


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}
    for n in range(60):
        assert is_prime(n) == (n in primes)
    assert is_prime(2**31 - 1)
    assert not is_prime(2**31 - 2)


def test_modulus_validation():
    with pytest.raises(ValueError):
        Poly(4, (1,))
    with pytest.raises(ValueError):
        Poly(1, (1,))


def test_normalization_strips_trailing_zeros():
    assert P(5, 1, 2, 0, 0).coeffs == (1, 2)
    assert P(5, 0, 0, 0).coeffs == ()
    assert P(5, 7, 3).coeffs == (2, 3)
    assert zero(5).degree == -1


def test_add_additive_inverse():
    # (x+1) + (4x+4) over F_5 -> 0
    assert poly_add(P(5, 1, 1), P(5, 4, 4)) == zero(5)


def test_add_disjoint_supports():
    # x^3 + (x+1) over F_5
    assert poly_add(P(5, 0, 0, 0, 1), P(5, 1, 1)) == P(5, 1, 1, 0, 1)


def test_add_hand_expansion_oracle():
    # (x-1)^2 + (2x-1) over F_7: x^2 - 2x + 1 + 2x - 1 = x^2
    lhs = poly_add(poly_pow(P(7, -1, 1), 2), P(7, -1, 2))
    assert lhs == P(7, 0, 0, 1)


def test_mul_difference_of_squares():
    assert poly_mul(P(5, 1, 1), P(5, -1, 1)) == P(5, 4, 0, 1)


def test_mul_hand_expansion_oracle():
    # 2(x+1)(x-1)^2 over F_5: (x+1)(x-1)^2 = x^3 - x^2 - x + 1, doubled gives
    # 2x^3 + 3x^2 + 3x + 2
    prod = poly_scale(poly_mul(P(5, 1, 1), poly_pow(P(5, -1, 1), 2)), 2)
    assert prod == P(5, 2, 3, 3, 2)
    # same polynomial arises as (x+1)^3 + x^3 + 1
    other = poly_add(poly_add(poly_pow(P(5, 1, 1), 3), poly_pow(x(5), 3)), one(5))
    assert prod == other


def test_mul_identity():
    f = P(11, 2, 7, 1)
    assert poly_mul(f, one(11)) == f


def test_mul_commutes_and_divmod_recombines():
    rng = random.Random(20240811)
    for _ in range(200):
        p = rng.choice([5, 7])
        a = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(9))])
        b = Poly(p, [rng.randrange(p) for _ in range(1 + rng.randrange(8))])
        assert poly_mul(a, b) == poly_mul(b, a)
        if b.is_zero():
            continue
        q, r = poly_divmod(a, b)
        assert r.degree < b.degree
        assert poly_add(poly_mul(q, b), r) == a


def test_divmod_exact_division():
    # (x^2+4) / (x+1) over F_5 = (x+4, 0)
    q, r = poly_divmod(P(5, 4, 0, 1), P(5, 1, 1))
    assert (q, r) == (P(5, 4, 1), zero(5))


def test_divmod_monomials():
    q, r = poly_divmod(P(5, 0, 0, 0, 0, 0, 1), P(5, 0, 0, 1))
    assert (q, r) == (P(5, 0, 0, 0, 1), zero(5))


def test_divmod_remainder_theorem_oracle():
    # remainder of f by (x - c) is f(c); here f = x^3+x+1, divisor x+2 over F_5
    f = P(5, 1, 1, 0, 1)
    q, r = poly_divmod(f, P(5, 2, 1))
    assert r == P(5, poly_eval(f, -2))
    assert r == P(5, 1)
    # randomized version of the same oracle
    rng = random.Random(7)
    for _ in range(100):
        p = rng.choice([5, 7, 11])
        f = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 10))])
        c = rng.randrange(p)
        _, r = poly_divmod(f, Poly(p, (-c, 1)))
        assert r == Poly(p, (poly_eval(f, c),))


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(one(5), zero(5))


def test_gcd_factor_construction_oracle():
    # gcd((x-1)(x-2), (x-2)(x-3)) over F_7 = x-2
    a = poly_mul(P(7, -1, 1), P(7, -2, 1))
    b = poly_mul(P(7, -2, 1), P(7, -3, 1))
    assert poly_gcd(a, b) == P(7, -2, 1)


def test_gcd_self_is_monic_associate():
    a = P(5, 3, 1, 2)
    assert poly_gcd(a, a) == poly_monic(a)


def test_gcd_divides_both_and_is_monic():
    rng = random.Random(99)
    for _ in range(100):
        p = rng.choice([5, 7])
        a = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 8))])
        b = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 8))])
        if a.is_zero() and b.is_zero():
            continue
        g = poly_gcd(a, b)
        assert g.is_monic()
        for f in (a, b):
            if not f.is_zero():
                assert poly_divmod(f, g)[1].is_zero()


def test_gcd_of_zeros_rejected():
    with pytest.raises(ValueError):
        poly_gcd(zero(5), zero(5))


def test_gcd_f1_with_x5_minus_x():
    # gcd(f1, x^5 - x) = (x+1)(x-1) over F_5
    f1 = f1_poly()
    xq = poly_sub(poly_pow(x(5), 5), x(5))
    assert poly_gcd(f1, xq) == poly_mul(P(5, 1, 1), P(5, -1, 1))


def test_gcd_f1_with_frobenius_powers():
    # the same gcd stays (x+1)(x-1) at 5^2 and 5^4, and jumps to the frozen
    # degree-18 polynomial at 5^8
    f1 = f1_poly()
    lin = poly_mul(P(5, 1, 1), P(5, -1, 1))
    for r in (2, 4):
        frob = powmod_frobenius(x(5), 5**r, f1)
        assert poly_gcd(f1, poly_sub(frob, x(5))) == lin
    frob8 = powmod_frobenius(x(5), 5**8, f1)
    got = poly_gcd(f1, poly_sub(frob8, x(5)))
    want = P(5, 4, 2, 4, 2, 4, 0, 4, 0, 4, 0, 1, 0, 1, 0, 1, 3, 1, 3, 1)
    assert got == want


def test_powmod_small_case():
    # x^5 mod (x^2+1) over F_5: x^2 = -1, so x^4 = 1 and x^5 = x
    assert powmod_frobenius(x(5), 5, P(5, 1, 0, 1)) == x(5)


def test_powmod_scalar_oracle():
    # x^q mod (x - c) is the constant c^q
    rng = random.Random(31)
    for _ in range(50):
        p = rng.choice([5, 7, 11])
        c = rng.randrange(p)
        q = rng.randrange(1, 10**6)
        got = powmod_frobenius(x(p), q, Poly(p, (-c, 1)))
        assert got == Poly(p, (pow(c, q, p),))


def test_powmod_matches_repeated_frobenius():
    # x^(p^r) mod f equals r applications of x -> x^p mod f
    rng = random.Random(5)
    for _ in range(25):
        p = rng.choice([5, 7])
        f = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(2, 7))] + [1])
        r = rng.randrange(1, 5)
        direct = powmod_frobenius(x(p), p**r, f)
        step = poly_divmod(x(p), f)[1]
        for _ in range(r):
            step = powmod_frobenius(step, p, f)
        assert direct == step


def test_powmod_rejects_bad_inputs():
    with pytest.raises(ZeroDivisionError):
        powmod_frobenius(x(5), 5, zero(5))
    with pytest.raises(ValueError):
        powmod_frobenius(x(5), 0, P(5, 1, 1))


def test_profile_f1_frozen():
    # f1 has factors of degree 1 totalling 3 (with (x-1) squared) and two
    # degree-8 irreducibles totalling 16
    f1 = f1_poly()
    assert f1.degree == 19
    assert distinct_degree_profile(f1) == {1: 3, 8: 16}
    parts = distinct_degree_parts(f1)
    lin = poly_mul(P(5, 1, 1), poly_pow(P(5, -1, 1), 2))
    assert parts[1] == lin
    assert parts[8].degree == 16
    # parts multiply back to monic(f1); leading coefficient of f1 is 2
    assert poly_scale(poly_mul(parts[1], parts[8]), 2) == f1


def test_profile_quadratic_nonresidue():
    # x^2+2 over F_5 is irreducible: -2 = 3 is a nonsquare mod 5
    assert distinct_degree_profile(P(5, 2, 0, 1)) == {2: 2}


def test_profile_split_linear():
    prod = poly_mul(P(7, -1, 1), P(7, -2, 1))
    assert distinct_degree_profile(prod) == {1: 2}


def test_profile_degrees_sum_to_degree():
    rng = random.Random(2024)
    for _ in range(60):
        p = rng.choice([5, 7])
        f = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 11))] + [1])
        profile = distinct_degree_profile(f)
        assert sum(profile.values()) == f.degree


def _naive_irreducible(f: Poly) -> bool:
    """Trial division by every monic polynomial of degree <= deg f / 2."""
    p = f.p
    if f.degree < 1:
        raise ValueError
    for d in range(1, f.degree // 2 + 1):
        for idx in range(p**d):
            coeffs = []
            t = idx
            for _ in range(d):
                coeffs.append(t % p)
                t //= p
            cand = Poly(p, coeffs + [1])
            if poly_divmod(f, cand)[1].is_zero():
                return False
    return True


def test_irreducible_matches_naive_oracle():
    rng = random.Random(424242)
    for _ in range(40):
        p = rng.choice([5, 7])
        deg = rng.randrange(1, 7)
        f = Poly(p, [rng.randrange(p) for _ in range(deg)] + [1])
        assert is_irreducible(f) == _naive_irreducible(f)


def test_irreducible_published_sextic():
    assert is_irreducible(P(5, 1, 3, 3, 3, 3, 3, 1))


def test_irreducible_quartic_field_definer():
    assert is_irreducible(P(5, 2, 4, 4, 0, 1))


def test_reducible_difference_of_squares():
    assert not is_irreducible(P(5, 4, 0, 1))


def test_irreducible_rejects_constants():
    with pytest.raises(ValueError):
        is_irreducible(one(5))


def test_pretty_form():
    assert poly_pretty(P(5, 2, 3, 3, 2)) == "2x^3 + 3x^2 + 3x + 2"
    assert poly_pretty(P(5, 1, 0, 1)) == "x^2 + 1"
    assert poly_pretty(zero(5)) == "0"
    assert poly_pretty(P(7, 4)) == "4"
