"""Harmonic-type partial sums over p-coprime indices.

``h_sum`` is the power sum of 1/k^s and ``fh_sum`` the elementary symmetric
sum of the reciprocals, both restricted to 1 <= k <= n with p not dividing k.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import MissingOrder, UnsupportedModulus
from .padic_core import PadicApprox, least_residue, mod_inverse, to_fraction, valuation


def h_sum(n: int, s: int, p: int) -> Fraction:
    # accumulate over a common denominator, Fraction per term is slow
    num, den = 0, 1
    for k in range(1, n + 1):
        if k % p == 0:
            continue
        ks = k ** s
        num = num * ks + den
        den *= ks
    return Fraction(num, den)


def fh_sum(n: int, s: int, p: int) -> Fraction:
    """Elementary symmetric sum of {1/k : k <= n, p does not divide k}."""
    if s == 0:
        return Fraction(1)
    # e[i] stored as numerators over a shared denominator D
    e = [1] + [0] * s
    D = 1
    for k in range(1, n + 1):
        if k % p == 0:
            continue
        # e_i <- e_i + e_{i-1}/k, scale everything by k
        for i in range(s, 0, -1):
            e[i] = e[i] * k + e[i - 1]
        e[0] *= k
        D *= k
    return Fraction(e[s], D)


def h_sum_mod(n: int, s: int, p: int, modulus: int) -> int:
    """h_sum(n,s,p) modulo a power of p."""
    acc = 0
    for k in range(1, n + 1):
        if k % p:
            acc += pow(k, -s, modulus)
    return acc % modulus


def fh_sums_mod(n: int, smax: int, p: int, modulus: int) -> list[int]:
    """[fh_sum(n, s, p) mod modulus for s = 0..smax] by the same DP."""
    e = [1] + [0] * smax
    for k in range(1, n + 1):
        if k % p == 0:
            continue
        inv = pow(k, -1, modulus)
        for i in range(smax, 0, -1):
            e[i] = (e[i] + e[i - 1] * inv) % modulus
    return e


def newton_girard(h_values: Sequence[Fraction], s: int) -> Fraction:
    """Elementary symmetric sum of order s from power sums P_1..P_s.

    Uses the recurrence s*E_s = sum_{i=1}^s (-1)^(i-1) E_{s-i} P_i, which is
    the partition sum in closed recursive form.
    """
    if s == 0:
        return Fraction(1)
    if len(h_values) < s:
        raise MissingOrder(f"need power sums of orders 1..{s}, got {len(h_values)}")
    E = [Fraction(1)]
    for m in range(1, s + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            term = E[m - i] * to_fraction(h_values[i - 1])
            acc += term if i % 2 else -term
        E.append(acc / m)
    return E[s]


def newton_girard_partitions(h_values: Sequence[Fraction], s: int) -> Fraction:
    """The literal partition-sum form; slower, used to cross-check."""
    if len(h_values) < s:
        raise MissingOrder(f"need power sums of orders 1..{s}")
    total = Fraction(0)

    def rec(i, remaining, acc):
        nonlocal total
        if i > s:
            if remaining == 0:
                total += acc
            return
        j = 0
        term = acc
        while i * j <= remaining:
            rec(i + 1, remaining - i * j, term / math.factorial(j))
            term = term * (-to_fraction(h_values[i - 1]) / i)
            j += 1

    rec(1, s, Fraction(1))
    return total * (-1) ** s


def eta(s: int, p: int) -> int:
    q = s // (p - 1)
    return q + int(valuation(math.factorial(q), p))


@dataclass(frozen=True)
class HarmonicValue:
    index: object
    order: int
    prime: int
    value: object
    representative: Optional[int] = None
    certified: Optional[int] = None


def _padic_rep_precision(s: int, p: int, r: int) -> int:
    if s % (p - 1) == 0:
        return r + int(valuation(s, p)) + 1
    return r


def h_sum_padic(alpha, s: int, p: int, r: int) -> PadicApprox:
    """H_alpha^{(s)}(p) modulo p^r via the least-residue representative."""
    alpha = to_fraction(alpha)
    m = _padic_rep_precision(s, p, r)
    n = least_residue(alpha, p, m)
    return PadicApprox(h_sum_mod(n, s, p, p ** r), r, p)


def h_sum_padic_value(alpha, s: int, p: int, r: int) -> HarmonicValue:
    alpha = to_fraction(alpha)
    m = _padic_rep_precision(s, p, r)
    n = least_residue(alpha, p, m)
    return HarmonicValue(alpha, s, p, PadicApprox(h_sum_mod(n, s, p, p ** r), r, p), n, r)


def fh_sum_padic(alpha, s: int, p: int, r: int) -> PadicApprox:
    alpha = to_fraction(alpha)
    if s == 0:
        return PadicApprox(1, r, p)
    n = least_residue(alpha, p, r + eta(s, p))
    return PadicApprox(fh_sums_mod(n, s, p, p ** r)[s], r, p)


_CHAR_TABLES = {
    3: {1: 1, 2: -1},
    4: {1: 1, 3: -1},
    6: {1: 1, 5: -1},
}


def character(d: int):
    if d not in _CHAR_TABLES:
        raise UnsupportedModulus(f"no character table for modulus {d}")
    table = _CHAR_TABLES[d]
    return lambda j: table.get(j % d, 0)


def char_harmonic(k: int, d: int) -> Fraction:
    chi = character(d)
    num, den = 0, 1
    for j in range(1, k + 1):
        c = chi(j)
        if c:
            num = num * j + c * den
            den *= j
    return Fraction(num, den)
