import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oracles import mod_of, nu, poch, series
from supercong.errors import LowerParameterPole, NotTerminating, ZeroProduct
from supercong.hyperseries import (SeriesSpec, agree_mod, chu_vandermonde, dougall_7f6, pfaff_saalschutz,
                                   pochhammer, pochhammer_valuation, terminating_identity_check,
                                   truncated_f_exact, truncated_f_naive, truncated_f_padic,
                                   weighted_harmonic_series)


def test_pochhammer_examples():
    assert pochhammer(F(3, 7), 0) == 1
    assert pochhammer(F(1, 2), 3) == F(15, 8)
    assert pochhammer(-3, 5) == 0


def test_pochhammer_valuation_examples():
    for p in (5, 7, 11):
        assert pochhammer_valuation(1, p - 1, p) == 0
        assert pochhammer_valuation(1, p, p) == 1
    assert pochhammer_valuation(F(1, 2), 5, 5) == 1
    with pytest.raises(ZeroProduct):
        pochhammer_valuation(-2, 4, 7)


@settings(max_examples=300)
@given(st.sampled_from([3, 5, 7, 11]), st.integers(-200, 200), st.integers(1, 40),
       st.integers(0, 30))
def test_pochhammer_valuation_property(p, n, d, k):
    if d % p == 0:
        return
    a = F(n, d)
    val = pochhammer(a, k)
    assert val == poch(a, k)
    if val != 0:
        assert pochhammer_valuation(a, k, p) == nu(val, p)


def test_exact_examples():
    assert truncated_f_exact(SeriesSpec.of([-3, 2], [4], 3)) == F(1, 5)
    assert truncated_f_exact(SeriesSpec.of([F(1, 3), F(2, 3)], [1], 0)) == 1
    v = truncated_f_exact(SeriesSpec.of([F(1, 2), F(1, 2)], [1], 4))
    assert v == F(25609, 16384) and mod_of(v, 25) == 1


def test_pole_raises():
    with pytest.raises(LowerParameterPole):
        truncated_f_exact(SeriesSpec.of([F(1, 2), F(1, 3)], [-2], 5))
    with pytest.raises(ValueError):
        SeriesSpec.of([1, 2], [3, 4], 2)


def _random_spec(rng, p, max_n=50):
    q = rng.randint(1, 3)
    def rat():
        while True:
            d = rng.randint(1, 12)
            if d % p:
                return F(rng.randint(-40, 40), d)
    upper = [rat() for _ in range(q + 1)]
    lower = []
    while len(lower) < q:
        b = rat()
        if not (b.denominator == 1 and b <= 0):
            lower.append(b)
    z = rng.choice([F(1), F(-1), F(1, 2), rat() or F(1)])
    if z.denominator % p == 0:
        z = F(1)
    return SeriesSpec.of(upper, lower, rng.randint(0, max_n), z)


def test_ratio_path_equals_naive_and_oracle():
    rng = random.Random(11)
    for _ in range(150):
        spec = _random_spec(rng, 7, 50)
        ex = truncated_f_exact(spec)
        assert ex == truncated_f_naive(spec)
    for _ in range(30):
        spec = _random_spec(rng, 7, 12)
        assert truncated_f_exact(spec) == series(spec.upper, spec.lower, spec.n, spec.z)


def test_trace_records_terms():
    sv = truncated_f_exact(SeriesSpec.of([F(1, 2), F(1, 2)], [1], 4), trace=True)
    assert sv.exact == F(25609, 16384)
    assert sum(sv.terms) == sv.exact


def test_padic_examples():
    for p in (5, 7, 11, 13):
        spec = SeriesSpec.of([F(1, 2), F(1, 2)], [1], p - 1)
        assert agree_mod(truncated_f_exact(spec), truncated_f_padic(spec, p, 2), 2)
    q = truncated_f_padic(SeriesSpec.of([F(1, 3)], [], 0), 7, 3)
    assert q.valuation == 0 and q.unit == 1
    spec = SeriesSpec.of([F(1, 3)] * 3, [1, 1], 6)
    assert agree_mod(truncated_f_exact(spec), truncated_f_padic(spec, 7, 3), 3)


def test_identity_examples():
    ok, lhs, rhs = chu_vandermonde(3, 2, 4)
    assert ok and lhs == rhs == F(1, 5)
    ok, lhs, rhs = pfaff_saalschutz(F(1, 3), F(1, 4), F(5, 7), 0)
    assert ok and lhs == 1
    ok, _, _ = dougall_7f6(F(1, 3), F(1, 4), F(1, 4), F(1, 4), 3)
    assert ok
    with pytest.raises(NotTerminating):
        terminating_identity_check("chu_vandermonde", n=-1, b=1, c=2)


def test_weighted_series_examples():
    assert weighted_harmonic_series(-1, 7) == -1
    w = weighted_harmonic_series(F(1, 2), 5)
    assert w.denominator % 5


def test_derivative_of_pochhammer():
    # d/dx (x)_k = (x)_k sum 1/(x+j), against sympy's polynomial derivative
    import sympy
    x = sympy.Symbol("x")
    for k in range(1, 8):
        poly = sympy.expand(sympy.rf(x, k))
        dpoly = sympy.diff(poly, x)
        for a in (F(1, 3), F(-5, 2), F(7, 4)):
            pa = pochhammer(a, k)
            formula = pa * sum((F(1) / (a + j) for j in range(k)), F(0))
            want = F(str(dpoly.subs(x, sympy.Rational(a.numerator, a.denominator))))
            assert formula == want
