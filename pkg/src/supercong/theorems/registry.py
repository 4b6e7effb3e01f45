"""The registered congruences.

Every entry carries its left side as a series builder, its right side as an
exact rational prefactor times a Gamma_p product, the modulus exponent and
the truncation rule.  Case conditions are evaluated in order.
"""
from __future__ import annotations

import math
from fractions import Fraction as Fr

from ..errors import UnknownTheorem
from ..harmonic import char_harmonic, h_sum_mod
from ..hyperseries import SeriesSpec, weighted_harmonic_series
from ..padic_core import fermat_quotient, legendre_symbol, least_residue, valuation
from .core import Case, Condition, Rhs, TheoremSpec

HALF = Fr(1, 2)


def _odd_prime(ctx):
    return ctx.p % 2 == 1


def _unit(name):
    return Condition(f"{name} is a p-adic unit", lambda c: valuation(c[name], c.p) == 0)


def _poch_ok(label, f):
    return Condition(f"p^2 does not divide ({label})_(p-1)", lambda c: c.poch_val(f(c)) < 2)


ODD = Condition("p is odd", _odd_prime)


def _even(name="alpha"):
    return Condition(f"<-{name}>_p is even", lambda c: c.res(name) % 2 == 0)


def _odd(name="alpha"):
    return Condition(f"<-{name}>_p is odd", lambda c: c.res(name) % 2 == 1)


# --- quadratic and cubic families -------------------------------------------

def _lhs_13(c):
    return SeriesSpec.of([HALF, HALF], [1], c.p - 1)


def _lhs_14(c):
    a = c["alpha"]
    return SeriesSpec.of([a, 1 - a], [1], c.p - 1)


def _lhs_17(c):
    a, b = c["alpha"], c["beta"]
    return SeriesSpec.of([a, a, b], [1, a - b + 1], c.p - 1)


def _rhs_17(c):
    a, b = c["alpha"], c["beta"]
    return Rhs(Fr(-2), [(1 + a / 2, 1), (1 + a - b, 1), (1 - a / 2 - b, 1),
                        (1 + a, -1), (1 - a / 2, -1), (1 - b, -1), (1 + a / 2 - b, -1)])


def _g51(c):
    a = c["alpha"]
    return [(1 + a / 2, 1), (1 - 3 * a / 2, 1), (1 + a, -1), (1 - a, -1), (1 - a / 2, -2)]


def _lhs_51(c):
    a = c["alpha"]
    return SeriesSpec.of([a, a, a], [1, 1], c.p - 1)


def _lhs_61(c):
    a = c["alpha"]
    return SeriesSpec.of([a, 1 - a, HALF], [1, 1], c.p - 1)


def _w61(c):
    a = c["alpha"]
    return [(HALF, 2), (1 - a / 2, -2), (HALF + a / 2, -2)]


def _lhs_71(c):
    a, b = c["alpha"], c["beta"]
    return SeriesSpec.of([a, b, 1 - a - b], [1, 1], c.p - 1)


def _g71(c):
    a, b = c["alpha"], c["beta"]
    return [(1 - a - b, 2), (1 - a, -2), (1 - b, -2)]


def _ps_poly(c):
    s, t = c.star("alpha"), c.star("beta")
    return c.p ** 2 * ((s - 1) ** 2 + (t - 1) ** 2 + s * t - 1)


# --- well-poised 7F6 families -----------------------------------------------

def _lhs_7f6_alpha(alpha, n):
    return SeriesSpec.of([alpha] * 5 + [1 + alpha / 2, 1 - 2 * alpha],
                         [1, 1, 1, 1, alpha / 2, 3 * alpha], n)


def _rhs_81(c):
    a = c["alpha"]
    d = a.denominator
    sign = -1 if ((c.p - 1) // d) % 2 else 1
    return Rhs(Fr(sign) / (3 * a - 1), [(a, 5), (3 * a, 1), (2 * a, -4)])


def _cond_81(c):
    a = c["alpha"]
    d, r = a.denominator, a.numerator
    return d >= 5 and 3 * r > d and 2 * r < d and math.gcd(r, d) == 1 and c.p % d == 1


def _lhs_85(c):
    return SeriesSpec.of([Fr(2, 5)] * 5, [1, 1, 1, 1], c.p - 1)


def _lhs_38(c):
    e = Fr(3, 8)
    return SeriesSpec.of([e] * 5 + [Fr(19, 16), Fr(1, 4)], [1, 1, 1, 1, Fr(3, 16), Fr(9, 8)],
                         c.p - 1)


def _rhs_38(c):
    sign = -1 if ((c.p - 1) // 8) % 2 else 1
    return Rhs(Fr(8 * sign), [(Fr(3, 8), 5), (Fr(9, 8), 1), (Fr(3, 4), -4)])


def _m82(c):
    return 2 * c.res("alpha") + c.res("beta")


def _lhs_82(c):
    a, b = c["alpha"], c["beta"]
    return SeriesSpec.of([a, a, a, a, 1 + a / 2, b, 1 - a - b],
                         [1, 1, 1, a / 2, a - b + 1, 2 * a + b], _m82(c))


def _rhs_82(c):
    a, b = c["alpha"], c["beta"]
    return Rhs(-a / (a - b), [(1 - a - b, 3), (1 - 2 * a, 1), (1 + a - b, 1),
                              (1 - b, -3), (1 - a, -3), (1 + a, -1), (1 - 2 * a - b, -1)])


def _proportional(c):
    # <-alpha>/alpha = <-beta>/beta, cross-multiplied
    return c.res("alpha") * c["beta"] == c.res("beta") * c["alpha"]


def _cond_82(c):
    a, b = c.res("alpha"), c.res("beta")
    return 2 * a + b <= c.p - 1 <= 3 * a + 2 * b


def _lhs_84(c):
    return _lhs_7f6_alpha(c["alpha"], 3 * c.res("alpha"))


def _rhs_84(c):
    a = c["alpha"]
    return Rhs(c.p * c.star("alpha"), [(1 - 2 * a, 4), (1 - a, -6), (1 + a, -1), (1 - 3 * a, -1)])


# --- 5F4 and 7F6 analogues ---------------------------------------------------

def _lhs_54(c):
    a, b = c["alpha"], c["beta"]
    return SeriesSpec.of([a, 1 + a / 2, a, a, b], [a / 2, 1, 1, 1 + a - b], c.p - 1)


def _g54(c):
    a, b = c["alpha"], c["beta"]
    return [(1 + a - b, 1), (1 - a - b, 1), (1 + a, -1), (1 - a, -1), (1 - b, -2)]


def _lhs_93(c):
    a = c["alpha"]
    return SeriesSpec.of([a, 1 + a / 2, a, a, a], [a / 2, 1, 1, 1], c.p - 1)


def _g93(c):
    a = c["alpha"]
    return [(1 - 2 * a, 1), (1 + a, -1), (1 - a, -3)]


def _lhs_whipple(c):
    a, b, g, d = c["alpha"], c["beta"], c["gamma"], c["delta"]
    return SeriesSpec.of([a, 1 + a / 2, a, a, b, g, d],
                         [a / 2, 1, 1, 1 + a - b, 1 + a - g, 1 + a - d], c.p - 1)


def whipple_gammas(a, b, g, d):
    return [(a - b + 1, 1), (a - g + 1, 1), (a - d + 1, 1), (a - b - g - d + 1, 1),
            (a + 1, -1), (a - b - g + 1, -1), (a - b - d + 1, -1), (a - g - d + 1, -1)]


def whipple_4f3(a, b, g, d, n):
    from ..hyperseries import truncated_f_exact
    return truncated_f_exact(SeriesSpec.of([1 - a, b, g, d], [1, 1, b + g + d - a], n))


def _rhs_whipple(c, pref):
    a, b, g, d = c["alpha"], c["beta"], c["gamma"], c["delta"]
    f43 = whipple_4f3(a, b, g, d, c.p - 1)
    return Rhs(pref * f43, whipple_gammas(a, b, g, d))


def _res4(c):
    return c.res("alpha"), c.res("beta"), c.res("gamma"), c.res("delta")


# --- harmonic ------------------------------------------------------------------

def _h102(c):
    """h_p(alpha) as an integer residue mod p^2."""
    p = c.p
    a = c["alpha"]
    m = p * p

    def H(x):
        return h_sum_mod(least_residue(-x, p, 2), 1, p, m)

    return Fr(2 * H(a) + H(a / 2) - H(3 * a / 2), 2)


def _lhs_102(c):
    return weighted_harmonic_series(c["alpha"], c.p)


def _lhs_103(c):
    return weighted_harmonic_series(c["alpha"], c.p)


def _rhs_103_half_1(c):
    # leading constant 1; the printed 2 disagrees with the general harmonic case
    q = fermat_quotient(2, c.p)
    return Rhs(2 * q - c.p * q * q, [(Fr(1, 4), 4)])


def _rhs_103_third_1(c):
    q = fermat_quotient(3, c.p)
    return Rhs(Fr(9, 8) * (2 * q - c.p * q * q), [(Fr(1, 6), 3), (HALF, 1)])


def _lhs_char(c):
    d = int(c["d"])
    p = c.p
    u, v = Fr(1, d), Fr(d - 1, d)
    total = Fr(0)
    term = Fr(1)
    for k in range(1, p):
        term *= (u + k - 1) * (v + k - 1) / (k * k)
        total += term * char_harmonic(d * k, d)
    return total


def _build():
    t = {}

    def add(spec):
        t[spec.id] = spec

    add(TheoremSpec(
        "eq_1_3", "2F1(1/2,1/2;1) truncated at p-1 against the Legendre symbol (-1|p)",
        (), 2, _lhs_13,
        [Case("legendre", [], lambda c: Rhs(Fr(legendre_symbol(-1, c.p))))],
        min_prime=5))
    add(TheoremSpec(
        "eq_1_4", "2F1(alpha,1-alpha;1) truncated at p-1 against (-1)^<-alpha>_p",
        ("alpha",), 2, _lhs_14,
        [Case("sign", [], lambda c: Rhs(Fr((-1) ** c.res("alpha"))))],
        side_conditions=[ODD, _unit("alpha")], proof="sun_2f1"))
    add(TheoremSpec(
        "eq_1_7", "Dixon-type 3F2(alpha,alpha,beta;1,alpha-beta+1) modulo p^2",
        ("alpha", "beta"), 2, _lhs_17, [Case("dixon", [], _rhs_17)],
        side_conditions=[ODD, _unit("alpha"), _even("alpha"),
                         Condition("<-alpha>_p <= <-beta>_p < (p - <-alpha>_p)/2",
                                   lambda c: c.res("alpha") <= c.res("beta")
                                   and 2 * c.res("beta") < c.p - c.res("alpha")),
                         _poch_ok("alpha-beta+1", lambda c: c["alpha"] - c["beta"] + 1)]))
    add(TheoremSpec(
        "thm_5_1", "3F2(alpha,alpha,alpha;1,1) modulo p^3, four parity/threshold cases",
        ("alpha",), 3, _lhs_51,
        [Case("even, <-alpha>_p < 2p/3", [_even(), Condition("", lambda c: 3 * c.res("alpha") < 2 * c.p)],
              lambda c: Rhs(Fr(2), _g51(c))),
         Case("even, <-alpha>_p >= 2p/3", [_even(), Condition("", lambda c: 3 * c.res("alpha") >= 2 * c.p)],
              lambda c: Rhs(c.p * (2 - 3 * c.star("alpha")), _g51(c))),
         Case("odd, <-alpha>_p < p/3", [_odd(), Condition("", lambda c: 3 * c.res("alpha") < c.p)],
              lambda c: Rhs(c.p * c.star("alpha"), _g51(c))),
         Case("odd, <-alpha>_p >= p/3", [_odd(), Condition("", lambda c: 3 * c.res("alpha") >= c.p)],
              lambda c: Rhs(Fr(c.p ** 2, 2) * c.star("alpha") * (1 - 3 * c.star("alpha")), _g51(c)))],
        side_conditions=[ODD, _unit("alpha")], proof="dixon"))
    add(TheoremSpec(
        "thm_6_1", "3F2(alpha,1-alpha,1/2;1,1) modulo p^3",
        ("alpha",), 3, _lhs_61,
        [Case("<-alpha>_p even", [_even()], lambda c: Rhs(Fr(1), _w61(c))),
         Case("<-alpha>_p odd", [_odd()],
              lambda c: Rhs(Fr(c.p ** 2, 4) * c.star("alpha") * (c.star("alpha") - 1), _w61(c)))],
        side_conditions=[ODD], proof="watson"))
    add(TheoremSpec(
        "thm_7_1", "3F2(alpha,beta,1-alpha-beta;1,1) modulo p^3",
        ("alpha", "beta"), 3, _lhs_71,
        [Case("a+b <= p-1", [Condition("", lambda c: c.res("alpha") + c.res("beta") <= c.p - 1)],
              lambda c: Rhs(Fr(1), _g71(c))),
         Case("a+b >= p", [Condition("", lambda c: c.res("alpha") + c.res("beta") >= c.p)],
              lambda c: Rhs(_ps_poly(c), _g71(c)))],
        side_conditions=[ODD], proof="pfaff_saalschutz"))
    add(TheoremSpec(
        "thm_8_1", "well-poised 7F6 at alpha=r/d, d/3 < r < d/2, p = 1 mod d, modulo p^5",
        ("alpha",), 5, lambda c: _lhs_7f6_alpha(c["alpha"], c.p - 1),
        [Case("main", [], _rhs_81)],
        side_conditions=[Condition("alpha = r/d with d >= 5, d/3 < r < d/2, gcd(r,d) = 1, p = 1 mod d",
                                   _cond_81)],
        proof="dougall", min_prime=11))
    add(TheoremSpec(
        "thm_8_1_alpha_3_8", "the alpha = 3/8 specialization with the simplified constant 8",
        (), 5, _lhs_38, [Case("main", [], _rhs_38)],
        side_conditions=[Condition("p = 1 mod 8", lambda c: c.p % 8 == 1)],
        proof="dougall", min_prime=17))
    add(TheoremSpec(
        "eq_8_5", "5F4(2/5 x5; 1 x4) against -Gamma_p(1/5)^5 Gamma_p(2/5)^5 modulo p^5",
        (), 5, _lhs_85,
        [Case("main", [], lambda c: Rhs(Fr(-1), [(Fr(1, 5), 5), (Fr(2, 5), 5)]))],
        side_conditions=[Condition("p = 1 mod 5", lambda c: c.p % 5 == 1)],
        proof="dougall", min_prime=11))
    add(TheoremSpec(
        "thm_8_2", "7F6 with beta and 1-alpha-beta, truncated at 2<-alpha>_p+<-beta>_p, modulo p^5",
        ("alpha", "beta"), 5, _lhs_82, [Case("main", [], _rhs_82)],
        side_conditions=[ODD,
                         Condition("<-beta>_p < <-alpha>_p", lambda c: c.res("beta") < c.res("alpha")),
                         Condition("2a+b <= p-1 <= 3a+2b", _cond_82),
                         Condition("<-alpha>_p/alpha = <-beta>_p/beta", _proportional),
                         _poch_ok("alpha-beta+1", lambda c: c["alpha"] - c["beta"] + 1)],
        truncation="M = 2<-alpha>_p+<-beta>_p", proof="dougall"))
    add(TheoremSpec(
        "thm_8_4", "well-poised 7F6 truncated at 3<-alpha>_p, modulo p^6",
        ("alpha",), 6, _lhs_84, [Case("main", [], _rhs_84)],
        side_conditions=[ODD, _unit("alpha"),
                         Condition("<-alpha>_p < p/3", lambda c: 3 * c.res("alpha") < c.p)],
        truncation="M = 3<-alpha>_p", proof="dougall_short"))
    add(TheoremSpec(
        "thm_9_1", "5F4 well-poised, proportional alpha and beta, modulo p^3",
        ("alpha", "beta"), 3, _lhs_54,
        [Case("main", [], lambda c: Rhs(c["alpha"] / (c["alpha"] - c["beta"]), _g54(c)))],
        side_conditions=[ODD,
                         Condition("<-beta>_p < <-alpha>_p", lambda c: c.res("beta") < c.res("alpha")),
                         Condition("<-alpha>_p/alpha = <-beta>_p/beta", _proportional),
                         Condition("<-alpha>_p + <-beta>_p < p",
                                   lambda c: c.res("alpha") + c.res("beta") < c.p),
                         _poch_ok("alpha-beta+1", lambda c: c["alpha"] - c["beta"] + 1)],
        proof="dougall_5f4"))
    add(TheoremSpec(
        "thm_9_2", "5F4 well-poised with <-alpha>_p <= <-beta>_p, modulo p^3",
        ("alpha", "beta"), 3, _lhs_54,
        [Case("a+b >= p", [Condition("", lambda c: c.res("alpha") + c.res("beta") >= c.p)],
              lambda c: Rhs(c.p ** 2 * c.star("alpha") * (1 - c.star("alpha") - c.star("beta")),
                            _g54(c))),
         Case("a+b < p", [Condition("", lambda c: c.res("alpha") + c.res("beta") < c.p)],
              lambda c: Rhs(c.p * c.star("alpha"), _g54(c)))],
        side_conditions=[ODD, _unit("alpha"),
                         Condition("<-alpha>_p <= <-beta>_p", lambda c: c.res("alpha") <= c.res("beta")),
                         _poch_ok("alpha-beta+1", lambda c: c["alpha"] - c["beta"] + 1)],
        proof="dougall_5f4_b"))
    add(TheoremSpec(
        "thm_9_3", "5F4 well-poised with beta = alpha, modulo p^4",
        ("alpha",), 4, _lhs_93,
        # overall sign and the strict second branch are corrected, see the README
        [Case("<-alpha>_p >= (p+1)/2", [Condition("", lambda c: 2 * c.res("alpha") >= c.p + 1)],
              lambda c: Rhs(-c.p ** 2 * c.star("alpha") * (1 - 2 * c.star("alpha")), _g93(c))),
         Case("<-alpha>_p <= (p-1)/2", [Condition("", lambda c: 2 * c.res("alpha") < c.p + 1)],
              lambda c: Rhs(-c.p * c.star("alpha"), _g93(c)))],
        side_conditions=[ODD, _unit("alpha")], proof="dougall_5f4_c"))
    add(TheoremSpec(
        "thm_9_4", "Whipple-type 7F6 against Gamma_p quotient times a truncated 4F3, proportional case",
        ("alpha", "beta", "gamma", "delta"), 3, _lhs_whipple,
        [Case("main", [], lambda c: _rhs_whipple(c, c["alpha"] / (c["alpha"] - c["beta"])))],
        side_conditions=[ODD,
                         Condition("<-beta>_p < <-alpha>_p <= min(<-gamma>_p, <-delta>_p)",
                                   lambda c: (lambda a, b, g, d: b < a <= min(g, d))(*_res4(c))),
                         Condition("p + a > b + c + d",
                                   lambda c: (lambda a, b, g, d: c.p + a > b + g + d)(*_res4(c))),
                         Condition("<-alpha>_p/alpha = <-beta>_p/beta", _proportional),
                         _poch_ok("alpha-beta+1", lambda c: c["alpha"] - c["beta"] + 1),
                         _poch_ok("alpha-gamma+1", lambda c: c["alpha"] - c["gamma"] + 1),
                         _poch_ok("alpha-delta+1", lambda c: c["alpha"] - c["delta"] + 1),
                         _poch_ok("beta+gamma+delta-alpha",
                                  lambda c: c["beta"] + c["gamma"] + c["delta"] - c["alpha"])],
        proof="whipple_a"))
    add(TheoremSpec(
        "thm_9_5", "Whipple-type 7F6 with b+c+d >= 2p-1, modulo p^3",
        ("alpha", "beta", "gamma", "delta"), 3, _lhs_whipple,
        [Case("main", [], lambda c: _rhs_whipple(
            c, c.p ** 2 * c.star("alpha") * (1 + c.star("alpha") - c.star("beta")
                                             - c.star("gamma") - c.star("delta"))))],
        side_conditions=[ODD,
                         Condition("<-alpha>_p <= min(<-beta>_p, <-gamma>_p, <-delta>_p)",
                                   lambda c: (lambda a, b, g, d: a <= min(b, g, d))(*_res4(c))),
                         Condition("p + a > max(b+c, b+d, c+d)",
                                   lambda c: (lambda a, b, g, d: c.p + a > max(b + g, b + d, g + d))(*_res4(c))),
                         Condition("2p-1 <= b + c + d",
                                   lambda c: (lambda a, b, g, d: 2 * c.p - 1 <= b + g + d)(*_res4(c))),
                         _poch_ok("alpha-beta+1", lambda c: c["alpha"] - c["beta"] + 1),
                         _poch_ok("alpha-gamma+1", lambda c: c["alpha"] - c["gamma"] + 1),
                         _poch_ok("alpha-delta+1", lambda c: c["alpha"] - c["delta"] + 1)],
        proof="whipple_b"))
    add(TheoremSpec(
        "thm_9_6", "Whipple-type 7F6 with p + a > b+c+d, modulo p^3",
        ("alpha", "beta", "gamma", "delta"), 3, _lhs_whipple,
        [Case("main", [], lambda c: _rhs_whipple(c, c.p * c.star("alpha")))],
        side_conditions=[ODD,
                         Condition("<-alpha>_p <= min(<-beta>_p, <-gamma>_p, <-delta>_p)",
                                   lambda c: (lambda a, b, g, d: a <= min(b, g, d))(*_res4(c))),
                         Condition("p + a > b + c + d",
                                   lambda c: (lambda a, b, g, d: c.p + a > b + g + d)(*_res4(c))),
                         _poch_ok("alpha-beta+1", lambda c: c["alpha"] - c["beta"] + 1),
                         _poch_ok("alpha-gamma+1", lambda c: c["alpha"] - c["gamma"] + 1),
                         _poch_ok("alpha-delta+1", lambda c: c["alpha"] - c["delta"] + 1),
                         _poch_ok("beta+gamma+delta-alpha",
                                  lambda c: c["beta"] + c["gamma"] + c["delta"] - c["alpha"])],
        proof="whipple_c"))
    add(TheoremSpec(
        "thm_10_2", "sum (alpha)_k^3/k!^3 H_k against g_p and h_p, modulo p^2",
        ("alpha",), 2, _lhs_102,
        [Case("even, <-alpha>_p < 2p/3", [_even(), Condition("", lambda c: 3 * c.res("alpha") < 2 * c.p)],
              lambda c: Rhs(2 * _h102(c), _g51(c))),
         Case("even, <-alpha>_p >= 2p/3", [_even(), Condition("", lambda c: 3 * c.res("alpha") >= 2 * c.p)],
              lambda c: Rhs(-1 + c.p * (2 - 3 * c.star("alpha")) * _h102(c), _g51(c))),
         Case("odd, <-alpha>_p < p/3", [_odd(), Condition("", lambda c: 3 * c.res("alpha") < c.p)],
              lambda c: Rhs(Fr(-1, 3) + c.p * c.star("alpha") * _h102(c), _g51(c))),
         Case("odd, <-alpha>_p >= p/3", [_odd(), Condition("", lambda c: 3 * c.res("alpha") >= c.p)],
              lambda c: Rhs(Fr(-c.p, 6), _g51(c)))],
        side_conditions=[_unit("alpha")], series_lhs=False, min_prime=5,
        truncation="sum over 1 <= k <= p-1"))
    add(TheoremSpec(
        "cor_10_3", "the harmonic sum at alpha = 1/2 and alpha = 1/3 via Fermat quotients",
        ("alpha",), 2, _lhs_103,
        [Case("alpha=1/2, p = 1 mod 4",
              [Condition("", lambda c: c["alpha"] == HALF and c.p % 4 == 1)], _rhs_103_half_1),
         Case("alpha=1/2, p = 3 mod 4",
              [Condition("", lambda c: c["alpha"] == HALF and c.p % 4 == 3)],
              lambda c: Rhs(Fr(-c.p, 12), [(Fr(1, 4), 4)])),
         Case("alpha=1/3, p = 1 mod 3",
              [Condition("", lambda c: c["alpha"] == Fr(1, 3) and c.p % 3 == 1)], _rhs_103_third_1),
         Case("alpha=1/3, p = 2 mod 3",
              [Condition("", lambda c: c["alpha"] == Fr(1, 3) and c.p % 3 == 2)],
              lambda c: Rhs(Fr(-c.p, 12), [(Fr(1, 6), 3), (HALF, 1)]))],
        side_conditions=[Condition("alpha is 1/2 or 1/3", lambda c: c["alpha"] in (HALF, Fr(1, 3)))],
        series_lhs=False, min_prime=5, truncation="sum over 1 <= k <= p-1"))
    add(TheoremSpec(
        "char_sum", "sum (1/d)_k((d-1)/d)_k/k!^2 H_{dk,chi_d} vanishes modulo p, d in {3,4,6}",
        ("d",), 1, _lhs_char, [Case("zero", [], lambda c: Rhs(Fr(0)))],
        side_conditions=[Condition("d is 3, 4 or 6", lambda c: c["d"] in (3, 4, 6))],
        series_lhs=False, min_prime=5, truncation="sum over 1 <= k <= p-1"))
    return t


REGISTRY = _build()


def get(theorem_id: str) -> TheoremSpec:
    try:
        return REGISTRY[theorem_id]
    except KeyError:
        raise UnknownTheorem(theorem_id) from None


def list_theorems() -> list[dict]:
    return [REGISTRY[k].metadata() for k in sorted(REGISTRY)]
