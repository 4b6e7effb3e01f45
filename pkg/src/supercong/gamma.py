"""Morita's p-adic Gamma function and its Taylor coefficients.

Evaluation modulo p^N goes through one of three paths that agree exactly:

* ``gamma_p_integer_naive``: the defining product, O(n) multiplications.
* a prefix-product table for one (p, N), built once in O(p^N) and then
  answering any argument with a lookup (used when p^N is small).
* block polynomials: the product over a full block of p^m consecutive
  integers starting at a multiple of p^m is a polynomial in the block offset,
  and modulo p^N only its first N coefficients matter.  One evaluation then
  costs O(N * p) polynomial evaluations regardless of p^N.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import NonUnitDenominator, OrderTooLarge
from .harmonic import fh_sums_mod
from .padic_core import PadicApprox, least_residue, mod_inverse, to_fraction, valuation

PREFIX_LIMIT = 1 << 18

_prefix_lock = threading.Lock()
_prefix_tables: dict[tuple[int, int], list[int]] = {}


def _modulus_period(p: int, N: int) -> int:
    # Gamma_p(n + p^N) = Gamma_p(n) mod p^N except for p = 2, N = 2
    if p == 2 and N == 2:
        return 8
    return p ** N


def gamma_p_integer_naive(n: int, p: int, N: int) -> int:
    m = p ** N
    acc = 1
    for k in range(1, n):
        if k % p:
            acc = acc * k % m
    return (-acc if n % 2 else acc) % m


def prefix_table(p: int, N: int) -> list[int]:
    """Unsigned prefix products: table[n] = prod_{k<n, p not | k} k mod p^N."""
    key = (p, N)
    table = _prefix_tables.get(key)
    if table is not None:
        return table
    m = p ** N
    size = _modulus_period(p, N)
    t = [1] * (size + 1)
    acc = 1
    for k in range(1, size + 1):
        t[k] = acc
        if k % p:
            acc = acc * k % m
    # idempotent publication; a racing builder produces the same list
    with _prefix_lock:
        _prefix_tables.setdefault(key, t)
    return _prefix_tables[key]


def _poly_mul(a: list[int], b: list[int], N: int, m: int) -> list[int]:
    out = [0] * N
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(N - i):
            out[i + j] += ai * b[j]
    return [c % m for c in out]


def _poly_shift(a: list[int], s: int, N: int, m: int) -> list[int]:
    """Coefficients of a(y + s)."""
    out = [0] * N
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        # binomial expansion of (y+s)^i
        c = 1
        spow = 1
        for j in range(i, -1, -1):
            out[j] += ai * c * spow
            # next: C(i, j-1) s^(i-j+1)
            c = c * j // (i - j + 1)
            spow *= s
    return [c % m for c in out]


@lru_cache(maxsize=64)
def block_polynomials(p: int, N: int) -> tuple[tuple[int, ...], ...]:
    """levels[m] = coefficients (in y) of prod_{0<k<p^m, p not | k} (p*y + k).

    Index 0 is unused.  Coefficient j carries an implicit factor p^j, so
    truncating at degree N is exact modulo p^N.
    """
    m = p ** N
    q1 = [1] + [0] * (N - 1)
    for k in range(1, p):
        # multiply by (p*y + k)
        lin = [k, p] + [0] * (N - 2) if N >= 2 else [k]
        q1 = _poly_mul(q1, lin, N, m)
    levels = [(), tuple(q1)]
    for lev in range(1, N - 1):
        prev = list(levels[lev])
        acc = [1] + [0] * (N - 1)
        step = p ** (lev - 1)
        for j in range(p):
            acc = _poly_mul(acc, _poly_shift(prev, j * step, N, m), N, m)
        levels.append(tuple(acc))
    return tuple(levels)


def _poly_eval(a, y: int, m: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * y + c) % m
    return acc


def _unsigned_product_block(n: int, p: int, N: int) -> int:
    m = p ** N
    levels = block_polynomials(p, N)
    digits = []
    x = n
    for _ in range(N):
        digits.append(x % p)
        x //= p
    acc = 1
    base = 0
    for lev in range(N - 1, 0, -1):
        d = digits[lev]
        step = p ** lev
        poly = levels[lev]
        for _ in range(d):
            acc = acc * _poly_eval(poly, base // p, m) % m
            base += step
    for i in range(1, digits[0]):
        acc = acc * (base + i) % m
    return acc


def gamma_p_integer(n: int, p, N: int) -> PadicApprox:
    """Gamma_p(n) mod p^N for an integer n >= 0."""
    p = int(p)
    m = p ** N
    period = _modulus_period(p, N)
    nn = n % period
    if nn < 64:
        acc = 1
        for k in range(1, nn):
            if k % p:
                acc = acc * k % m
    elif period <= PREFIX_LIMIT:
        acc = prefix_table(p, N)[nn]
    else:
        acc = _unsigned_product_block(nn, p, N)
    return PadicApprox((-acc if nn % 2 else acc) % m, N, p)


def gamma_p(x, p, N: int) -> PadicApprox:
    """Gamma_p(x) mod p^N for a rational x with p-unit denominator."""
    x = to_fraction(x)
    p = int(p)
    if x.denominator % p == 0:
        raise NonUnitDenominator(f"denominator of {x} divisible by {p}")
    if x.denominator == 1 and x >= 0 and x < 64:
        return gamma_p_integer(int(x), p, N)
    n = least_residue(x, p, N) if _modulus_period(p, N) == p ** N else \
        x.numerator * mod_inverse(x.denominator, 8) % 8
    return gamma_p_integer(n, p, N)


def gamma_p_residue(x, p: int, N: int) -> int:
    return gamma_p(x, p, N).residue


def gamma_shift_ratio(x, p, N: int) -> PadicApprox:
    x = to_fraction(x)
    p = int(p)
    if x.denominator % p == 0:
        raise NonUnitDenominator(f"denominator of {x} divisible by {p}")
    if x != 0 and valuation(x, p) == 0:
        return PadicApprox.of(-x, p, N)
    return PadicApprox((-1) % p ** N, N, p)


def reflection_sign(x, p) -> int:
    """(-1)^(<-x>_p - 1), the value of Gamma_p(x) * Gamma_p(1-x)."""
    a = least_residue(-to_fraction(x), p, 1)
    return -1 if a % 2 == 0 else 1


@dataclass(frozen=True)
class GammaValue:
    argument: Fraction
    value: PadicApprox


@dataclass(frozen=True)
class TaylorCoeffs:
    """G_k at a base point; coeffs[k] is known modulo p^(order-k)."""

    base: Fraction
    order: int
    prime: int
    coeffs: tuple

    def precision_of(self, k: int) -> int:
        return self.order - k


def sigma(r: int, p: int) -> int:
    """Precision loss of the order-r Taylor truncation of Gamma_p."""
    best = None
    # the bracket decreases once k passes a few multiples of p
    for k in range(r, r + 4 * p + 8):
        val = int(valuation(math.factorial(k), p)) + k // p - k + r
        best = val if best is None else max(best, val)
    return max(best, 0)


def omega(r: int, p: int) -> int:
    from .harmonic import eta
    return max(eta(r - 1 - j, p) + int(valuation(math.factorial(j), p)) + j // p for j in range(r))


def taylor_coeffs_at_zero(p, r: int, N: Optional[int] = None) -> TaylorCoeffs:
    """G_k(0) mod p^(r-k) from interpolating Gamma_p(tp), t = 0..r-1."""
    from .localglobal import vandermonde_solve

    p = int(p)
    if r > p - 2:
        raise OrderTooLarge(f"order {r} exceeds p-2 = {p - 2}")
    N = r if N is None else max(N, r)
    nodes = list(range(r))
    values = [gamma_p_integer(t * p, p, r).residue for t in nodes]
    ext = vandermonde_solve(nodes, values, p, r)
    coeffs = []
    for k, c in enumerate(ext.coefficients):
        prec = r - k
        if c % p ** k:
            raise ArithmeticError("interpolated coefficient not divisible by p^k")
        g = (c // p ** k) * math.factorial(k) % p ** prec
        coeffs.append(PadicApprox(g, prec, p))
    return TaylorCoeffs(Fraction(0), r, p, tuple(coeffs))


def taylor_coeffs(alpha, p, r: int) -> TaylorCoeffs:
    """G_k(alpha) mod p^(r-k) via the fH convolution with G_j(0)."""
    alpha = to_fraction(alpha)
    p = int(p)
    if r > p - 2:
        raise OrderTooLarge(f"order {r} exceeds p-2 = {p - 2}")
    if alpha.denominator % p == 0:
        raise NonUnitDenominator(f"denominator of {alpha} divisible by {p}")
    g0 = taylor_coeffs_at_zero(p, r)
    mod_r = p ** r
    # fH^{(s)}_{a_i - 1} for i = 1..r, s < r
    fh_at = {}
    for i in range(1, r + 1):
        a_i = p ** i - least_residue(-alpha, p, i)
        fh_at[i] = fh_sums_mod(a_i - 1, r - 1, p, mod_r)
    coeffs = []
    for k in range(r):
        prec = r - k
        m = p ** prec
        acc = 0
        for j in range(k + 1):
            gj = g0.coeffs[j].residue
            acc += gj * mod_inverse(math.factorial(j), m) * fh_at[r - j][k - j]
        coeffs.append(PadicApprox(acc * math.factorial(k) % m, prec, p))
    return TaylorCoeffs(alpha, r, p, tuple(coeffs))


def taylor_eval(tc: TaylorCoeffs, t, p: int) -> int:
    """sum_k G_k (tp)^k / k! mod p^order (value of Gamma_p(alpha+tp)/Gamma_p(alpha))."""
    r = tc.order
    m = p ** r
    tt = least_residue(t, p, r)
    acc = 0
    for k, g in enumerate(tc.coeffs):
        acc += g.residue * pow(tt * p, k, m) * mod_inverse(math.factorial(k), m)
    return acc % m
