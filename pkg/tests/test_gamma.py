import random
from fractions import Fraction as F
from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import gamma_int, gamma_rat, least, mod_of
from supercong.errors import NonUnitDenominator, OrderTooLarge
from supercong.gamma import (block_polynomials, gamma_p, gamma_p_integer, gamma_p_integer_naive,
                             gamma_shift_ratio, prefix_table, reflection_sign, sigma,
                             taylor_coeffs, taylor_coeffs_at_zero, taylor_eval)


def test_integer_examples():
    assert gamma_p_integer(0, 5, 2).residue == 1
    assert gamma_p_integer(1, 7, 3).residue == 342
    assert gamma_p_integer(5, 5, 2).residue == 1


def test_rational_examples():
    assert gamma_p(1, 11, 2).residue == 121 - 1
    assert pow(gamma_p(F(1, 2), 5, 1).residue, 2, 5) == 4
    assert least(F(1, 5), 11, 5) == 128841
    assert gamma_p(F(1, 5), 11, 5).residue == gamma_int(128841, 11, 5)


def test_shift_ratio_examples():
    assert gamma_shift_ratio(3, 5, 2).residue == 22
    assert gamma_shift_ratio(5, 5, 2).residue == 24
    assert gamma_shift_ratio(F(1, 2), 7, 1).residue == 3


def test_bad_denominator():
    with pytest.raises(NonUnitDenominator):
        gamma_p(F(1, 7), 7, 2)


@pytest.mark.parametrize("p,N", [(3, 3), (5, 2), (7, 2), (11, 2), (5, 4)])
def test_paths_agree_with_definition(p, N):
    for n in range(0, 3 * p ** N, max(1, p ** N // 40)):
        want = gamma_int(n, p, N)
        assert gamma_p_integer_naive(n, p, N) == want
        assert gamma_p_integer(n, p, N).residue == want


def test_prefix_table_matches_blocks():
    p, N = 7, 3
    table = prefix_table(p, N)
    assert len(block_polynomials(p, N)) >= 1
    for n in range(0, p ** N, 13):
        assert gamma_p_integer(n, p, N).residue == gamma_int(n, p, N)
        assert (-1) ** n * table[n] % p ** N == gamma_int(n, p, N)


def test_large_precision_against_oracle():
    # block polynomial path at p^N far beyond the prefix limit
    for x in (F(1, 3), F(2, 5), F(-7, 4)):
        assert gamma_p(x, 7, 7).residue == gamma_rat(x, 7, 7)


def test_wilson():
    for p in sympy.primerange(3, 200):
        assert gamma_p_integer(p, p, 1).residue == 1


def _unit(rng, p):
    while True:
        d = rng.randint(1, 60)
        if d % p:
            return F(rng.randint(-3000, 3000), d)


def test_shift_identity_random():
    rng = random.Random(7)
    for _ in range(500):
        p = rng.choice([5, 7, 11, 13])
        N = rng.randint(1, 3)
        x = _unit(rng, p)
        m = p ** N
        lhs = gamma_p(x + 1, p, N).residue * pow(gamma_p(x, p, N).residue, -1, m) % m
        assert lhs == gamma_shift_ratio(x, p, N).residue


def test_reflection_random():
    rng = random.Random(8)
    for _ in range(300):
        p = rng.choice([5, 7, 11, 13])
        N = rng.randint(1, 3)
        x = _unit(rng, p)
        m = p ** N
        prod_ = gamma_p(x, p, N).residue * gamma_p(1 - x, p, N).residue % m
        assert prod_ == reflection_sign(x, p) % m


@settings(max_examples=200)
@given(st.sampled_from([5, 7, 11]), st.integers(1, 3), st.integers(-500, 500),
       st.integers(1, 30), st.integers(-20, 20))
def test_continuity(p, r, n, d, t):
    if d % p == 0:
        return
    x = F(n, d)
    y = x + t * p ** r
    assert gamma_p(x, p, r).residue == gamma_p(y, p, r).residue


def test_taylor_at_zero_examples():
    for p in (5, 7, 11):
        assert [c.residue for c in taylor_coeffs_at_zero(p, 1).coeffs] == [1]
    tc = taylor_coeffs_at_zero(5, 3)
    assert taylor_eval(tc, 4, 5) == gamma_int(20, 5, 3)
    tc = taylor_coeffs_at_zero(7, 4)
    assert tc.coeffs[1].residue % 7 == ((gamma_int(7, 7, 2) - 1) // 7) % 7


def test_taylor_rejects_high_order():
    with pytest.raises(OrderTooLarge):
        taylor_coeffs_at_zero(5, 4)
    with pytest.raises(OrderTooLarge):
        taylor_coeffs(F(1, 2), 5, 4)


def test_taylor_zero_base_matches():
    for p, r in ((7, 3), (11, 4)):
        a = [c.residue for c in taylor_coeffs(0, p, r).coeffs]
        b = [c.residue for c in taylor_coeffs_at_zero(p, r).coeffs]
        assert a == b


def test_taylor_half_at_seven():
    tc = taylor_coeffs(F(1, 2), 7, 3)
    m = 7 ** 3
    ratio = taylor_eval(tc, 1, 7)
    assert gamma_p(F(1, 2), 7, 3).residue * ratio % m == gamma_rat(F(1, 2) + 7, 7, 3)


def test_taylor_first_coefficient_finite_difference():
    # G_1(a) = (Gamma(a+p)/Gamma(a) - 1)/p mod p
    p = 5
    a = F(2, 3)
    tc = taylor_coeffs(a, p, 2)
    ratio = gamma_rat(a + p, p, 2) * pow(gamma_rat(a, p, 2), -1, 25) % 25
    assert tc.coeffs[1].residue == ((ratio - 1) // p) % p


def interpolated_coeffs(alpha, p, r):
    """G_k(alpha) from an exact rational Vandermonde solve on t = 0..r-1."""
    m = p ** r
    g0 = gamma_rat(alpha, p, r)
    inv = pow(g0, -1, m)
    vals = [gamma_rat(alpha + t * p, p, r) * inv % m for t in range(r)]
    V = sympy.Matrix(r, r, lambda i, k: sympy.Integer(i) ** k)
    c = V.LUsolve(sympy.Matrix(vals))
    out = []
    for k in range(r):
        ck = mod_of(F(int(c[k].p), int(c[k].q)), m)
        assert ck % p ** k == 0
        out.append((ck // p ** k) * factorial(k) % p ** (r - k))
    return out


@pytest.mark.parametrize("p", [7, 11, 13])
@pytest.mark.parametrize("alpha", [F(0), F(1, 2), F(1, 3), F(2, 3)])
def test_theorem_coefficients_vs_interpolation(p, alpha):
    for r in range(1, 5):
        got = [c.residue for c in taylor_coeffs(alpha, p, r).coeffs]
        assert got == interpolated_coeffs(alpha, p, r)


@pytest.mark.parametrize("p,r", [(7, 3), (11, 4), (13, 2)])
def test_expansion_every_t(p, r):
    m = p ** r
    for alpha in (F(1, 2), F(1, 3), F(-5, 4)):
        tc = taylor_coeffs(alpha, p, r)
        g = gamma_p(alpha, p, r).residue
        for t in range(p):
            assert g * taylor_eval(tc, t, p) % m == gamma_rat(alpha + t * p, p, r)


def test_sigma_vanishes_in_range():
    for p in (5, 7, 11, 13):
        for r in range(1, p - 1):
            assert sigma(r, p) == 0
