"""Pochhammer symbols and truncated hypergeometric series.

The exact path builds every term from integer numerators and denominators
of the term ratio and keeps the partial sum over one running denominator, so
only a single Fraction is normalized at the end.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import LowerParameterPole, NonUnitDenominator, NotTerminating, ZeroProduct
from .padic_core import QpApprox, int_valuation, mod_inverse, to_fraction, valuation


@dataclass(frozen=True)
class SeriesSpec:
    upper: tuple
    lower: tuple
    n: int
    z: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(to_fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(to_fraction(b) for b in self.lower))
        object.__setattr__(self, "z", to_fraction(self.z))
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError("need one more upper parameter than lower parameters")
        if self.n < 0:
            raise ValueError("truncation must be nonnegative")

    @classmethod
    def of(cls, upper, lower, n, z=1) -> "SeriesSpec":
        return cls(tuple(upper), tuple(lower), n, to_fraction(z))


@dataclass
class SeriesValue:
    exact: Optional[Fraction] = None
    padic: Optional[QpApprox] = None
    terms: Optional[list] = None


def pochhammer(alpha, k: int) -> Fraction:
    alpha = to_fraction(alpha)
    n, d = alpha.numerator, alpha.denominator
    num = 1
    for j in range(k):
        num *= n + j * d
        if num == 0:
            return Fraction(0)
    return Fraction(num, d ** k)


def pochhammer_valuation(alpha, k: int, p: int) -> int:
    alpha = to_fraction(alpha)
    if alpha.denominator % p == 0:
        raise NonUnitDenominator(f"denominator of {alpha} divisible by {p}")
    n, d = alpha.numerator, alpha.denominator
    total = 0
    for j in range(k):
        f = n + j * d
        if f == 0:
            raise ZeroProduct(f"({alpha})_{k} vanishes")
        total += int_valuation(f, p)
    return total


def _ratio_parts(spec: SeriesSpec):
    """Numerator/denominator integer pairs for every parameter."""
    ups = [(a.numerator, a.denominator) for a in spec.upper]
    los = [(b.numerator, b.denominator) for b in spec.lower]
    return ups, los


def truncated_f_exact(spec: SeriesSpec, trace: bool = False):
    """Exact sum_{k=0}^{n} prod (a_i)_k / (prod (b_j)_k k!) z^k."""
    ups, los = _ratio_parts(spec)
    zn, zd = spec.z.numerator, spec.z.denominator
    # fixed per-step denominator contributions of the parameters
    up_den = 1
    for _, d in ups:
        up_den *= d
    lo_den = 1
    for _, d in los:
        lo_den *= d
    T, S, D = 1, 1, 1
    terms = [Fraction(1)] if trace else None
    for k in range(spec.n):
        rn = zn * lo_den
        for n_, d in ups:
            rn *= n_ + k * d
        if rn == 0:
            break
        rd = zd * up_den * (k + 1)
        for n_, d in los:
            f = n_ + k * d
            if f == 0:
                raise LowerParameterPole(Fraction(n_, d), k + 1)
            rd *= f
        T *= rn
        S = S * rd + T
        D *= rd
        if trace:
            terms.append(Fraction(T, D))
        if k % 24 == 23:
            g = math.gcd(math.gcd(S, T), D)
            if g > 1:
                S //= g
                T //= g
                D //= g
    value = Fraction(S, D)
    if trace:
        return SeriesValue(exact=value, terms=terms)
    return value


def truncated_f_naive(spec: SeriesSpec) -> Fraction:
    """Per-term Pochhammer products; the slow reference for the ratio path."""
    total = Fraction(0)
    for k in range(spec.n + 1):
        num = Fraction(1)
        for a in spec.upper:
            num *= pochhammer(a, k)
        if num == 0:
            break
        den = Fraction(math.factorial(k))
        for b in spec.lower:
            pb = pochhammer(b, k)
            if pb == 0:
                raise LowerParameterPole(b, k)
            den *= pb
        total += num / den * spec.z ** k
    return total


def _term_valuations_units(spec: SeriesSpec, p: int, W: int):
    """(valuation, unit mod p^W) for each nonzero term."""
    m = p ** W
    ups, los = _ratio_parts(spec)
    for a in list(spec.upper) + list(spec.lower) + [spec.z]:
        if a.denominator % p == 0:
            raise NonUnitDenominator(f"denominator of {a} divisible by {p}")
    zn, zd = spec.z.numerator, spec.z.denominator
    out = [(0, 1)]
    V, U = 0, 1
    for k in range(spec.n):
        factors_num = [zn] + [d for _, d in los] + [n_ + k * d for n_, d in ups]
        factors_den = [zd, k + 1] + [d for _, d in ups] + [n_ + k * d for n_, d in los]
        if any(f == 0 for f in factors_num):
            break
        for f in factors_den:
            if f == 0:
                raise LowerParameterPole(next(b for b in spec.lower
                                              if b.numerator + k * b.denominator == 0), k + 1)
        for f in factors_num:
            e = int_valuation(f, p)
            V += e
            U = U * (f // p ** e) % m
        for f in factors_den:
            e = int_valuation(f, p)
            V -= e
            U = U * mod_inverse(f // p ** e, m) % m
        out.append((V, U))
    return out


def truncated_f_padic(spec: SeriesSpec, p: int, r: int, max_raises: int = 16) -> QpApprox:
    """The truncated series in Q_p, certified to absolute precision >= r."""
    p = int(p)
    W = max(r, 1)
    for _ in range(max_raises):
        terms = _term_valuations_units(spec, p, W)
        vmin = min(v for v, _ in terms)
        if vmin + W >= r:
            m = p ** W
            acc = 0
            for v, u in terms:
                acc = (acc + u * p ** (v - vmin)) % m
            return QpApprox._normalize(vmin, acc, vmin + W, p)
        W += 2
    from .errors import PrecisionUnreachable
    raise PrecisionUnreachable(f"could not certify precision {r}")


def agree_mod(exact: Fraction, q: QpApprox, r: int) -> bool:
    """Does the Q_p approximation match the exact rational to absolute precision r?"""
    p = q.prime
    if q.absolute_precision < r:
        return False
    if q.valuation is None:
        return valuation(exact, p) >= r
    qv = Fraction(q.unit) * Fraction(p) ** q.valuation
    return valuation(exact - qv, p) >= r


# terminating classical identities


def chu_vandermonde(n: int, b, c):
    b, c = to_fraction(b), to_fraction(c)
    lhs = truncated_f_exact(SeriesSpec.of([-n, b], [c], n))
    rhs = pochhammer(c - b, n) / pochhammer(c, n)
    return lhs == rhs, lhs, rhs


def pfaff_saalschutz(a, b, c, n: int):
    a, b, c = to_fraction(a), to_fraction(b), to_fraction(c)
    d = a + b + 1 - c - n
    lhs = truncated_f_exact(SeriesSpec.of([a, b, -n], [c, d], n))
    rhs = pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n))
    return lhs == rhs, lhs, rhs


def dougall_7f6(alpha, beta, gamma_, delta, n: int):
    al, be, ga, de = (to_fraction(x) for x in (alpha, beta, gamma_, delta))
    eps = n + 2 * al + 1 - be - ga - de
    lhs = truncated_f_exact(SeriesSpec.of(
        [al, 1 + al / 2, be, ga, de, eps, -n],
        [al / 2, al - be + 1, al - ga + 1, al - de + 1, al - eps + 1, al + n + 1], n))
    rhs = (pochhammer(al + 1, n) * pochhammer(al - be - ga + 1, n)
           * pochhammer(al - be - de + 1, n) * pochhammer(al - ga - de + 1, n)) / (
        pochhammer(al - be + 1, n) * pochhammer(al - ga + 1, n)
        * pochhammer(al - de + 1, n) * pochhammer(al - be - ga - de + 1, n))
    return lhs == rhs, lhs, rhs


IDENTITIES = {
    "chu_vandermonde": chu_vandermonde,
    "pfaff_saalschutz": pfaff_saalschutz,
    "dougall_7f6": dougall_7f6,
}


def terminating_identity_check(identity: str, **params):
    """Evaluate both sides of a terminating identity; returns (equal, lhs, rhs)."""
    if identity not in IDENTITIES:
        raise KeyError(identity)
    n = params.get("n")
    if not isinstance(n, int) or n < 0:
        raise NotTerminating(f"n={n!r} is not a nonnegative integer")
    return IDENTITIES[identity](**params)


def weighted_harmonic_series(alpha, p: int) -> Fraction:
    """sum_{k=1}^{p-1} (alpha)_k^3 / k!^3 * H_k with ordinary harmonic H_k."""
    alpha = to_fraction(alpha)
    an, ad = alpha.numerator, alpha.denominator
    total = Fraction(0)
    poch_num, poch_den = 1, 1
    h = Fraction(0)
    for k in range(1, p):
        poch_num *= an + (k - 1) * ad
        poch_den *= ad * k
        if poch_num == 0:
            break
        h += Fraction(1, k)
        total += Fraction(poch_num ** 3, poch_den ** 3) * h
    return total
