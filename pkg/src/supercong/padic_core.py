"""Exact rationals, p-adic valuations, residues and small modular helpers.

Rationals are ``fractions.Fraction``.  Two approximation types live here:
``PadicApprox`` (an element of Z_p known modulo p^N) and ``QpApprox``
(u * p^v with the unit u known modulo p^N).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import sympy

from .errors import NonUnitDenominator, NotAUnit, NotPrime

INF = math.inf

RationalLike = Union[int, Fraction, str]


class Prime(int):
    """An int that has passed a primality test once at construction."""

    def __new__(cls, value):
        if isinstance(value, Prime):
            return value
        v = int(value)
        if v < 2 or not sympy.isprime(v):
            raise NotPrime(f"{value} is not prime")
        return super().__new__(cls, v)


def as_prime(p) -> Prime:
    return p if isinstance(p, Prime) else Prime(p)


def to_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"u/d"``, ``"-3"`` or ``"u"`` into a Fraction."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    x = to_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def int_valuation(n: int, p: int) -> float:
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    # strip large powers first; numbers here can have many factors of p
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: RationalLike, p) -> float:
    """nu_p(x); math.inf for zero."""
    x = to_fraction(x)
    if x == 0:
        return INF
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def _check_unit_den(x: Fraction, p: int) -> None:
    if x.denominator % p == 0:
        raise NonUnitDenominator(f"denominator of {x} is divisible by {p}")


def mod_inverse(a: int, modulus: int) -> int:
    try:
        return pow(a, -1, modulus)
    except ValueError:
        raise NotAUnit(f"{a} is not invertible modulo {modulus}") from None


def residue_mod(x: RationalLike, modulus: int) -> int:
    """x mod `modulus` for a rational whose denominator is coprime to it."""
    x = to_fraction(x)
    if x.denominator == 1:
        return x.numerator % modulus
    return x.numerator * mod_inverse(x.denominator, modulus) % modulus


def least_residue(x: RationalLike, p, m: int = 1) -> int:
    """The unique 0 <= a < p^m with a = x (mod p^m)."""
    x = to_fraction(x)
    _check_unit_den(x, p)
    return residue_mod(x, p ** m)


def dash(alpha: RationalLike, p) -> Fraction:
    """(alpha + <-alpha>_p) / p."""
    alpha = to_fraction(alpha)
    return (alpha + least_residue(-alpha, p, 1)) / p


def legendre_symbol(a: int, p) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def fermat_quotient(x: int, p) -> Fraction:
    if x % p == 0:
        raise NotAUnit(f"{p} divides {x}")
    return Fraction(pow(x, p - 1) - 1, p)


@dataclass(frozen=True)
class PadicApprox:
    """An element of Z_p known modulo p^precision."""

    residue: int
    precision: int
    prime: int

    def __post_init__(self):
        m = self.prime ** self.precision
        if not 0 <= self.residue < m:
            object.__setattr__(self, "residue", self.residue % m)

    @classmethod
    def of(cls, x: RationalLike, p, N: int) -> "PadicApprox":
        return cls(least_residue(x, p, N), N, int(p))

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    def _common(self, other) -> tuple[int, int, int]:
        if isinstance(other, PadicApprox):
            if other.prime != self.prime:
                raise ValueError("mixed primes")
            n = min(self.precision, other.precision)
            return self.residue, other.residue, n
        return self.residue, least_residue(other, self.prime, self.precision), self.precision

    def __add__(self, other):
        a, b, n = self._common(other)
        return PadicApprox((a + b) % self.prime ** n, n, self.prime)

    __radd__ = __add__

    def __neg__(self):
        return PadicApprox(-self.residue % self.modulus, self.precision, self.prime)

    def __sub__(self, other):
        a, b, n = self._common(other)
        return PadicApprox((a - b) % self.prime ** n, n, self.prime)

    def __rsub__(self, other):
        a, b, n = self._common(other)
        return PadicApprox((b - a) % self.prime ** n, n, self.prime)

    def __mul__(self, other):
        a, b, n = self._common(other)
        return PadicApprox(a * b % self.prime ** n, n, self.prime)

    __rmul__ = __mul__

    def inverse(self) -> "PadicApprox":
        return PadicApprox(mod_inverse(self.residue, self.modulus), self.precision, self.prime)

    def reduce_to(self, n: int) -> "PadicApprox":
        if n > self.precision:
            raise ValueError("cannot raise precision")
        return PadicApprox(self.residue % self.prime ** n, n, self.prime)

    def compare(self, other) -> tuple[bool, int]:
        """Equality at the lower of the two precisions, plus that precision."""
        a, b, n = self._common(other)
        m = self.prime ** n
        return (a - b) % m == 0, n

    def __eq__(self, other):
        if isinstance(other, (PadicApprox, int, Fraction)):
            return self.compare(other)[0]
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.precision, self.prime))

    def signed(self) -> int:
        """Residue in the symmetric range around zero."""
        m = self.modulus
        return self.residue - m if self.residue > m // 2 else self.residue

    def to_json(self) -> dict:
        return {"p": self.prime, "N": self.precision, "residue": str(self.residue)}


@dataclass(frozen=True)
class QpApprox:
    """unit * p^valuation with the unit known modulo p^precision.

    ``valuation is None`` marks an exact zero.  ``zero_to`` set means the
    value is zero modulo p^zero_to (cancellation ate all known digits).
    """

    valuation: Optional[int]
    unit: int
    precision: int
    prime: int
    zero_to: Optional[int] = None

    @classmethod
    def exact_zero(cls, p, N: int = 0) -> "QpApprox":
        return cls(None, 0, N, int(p))

    @classmethod
    def from_rational(cls, x: RationalLike, p, N: int) -> "QpApprox":
        return reduce(x, p, N)

    @property
    def is_exact_zero(self) -> bool:
        return self.valuation is None and self.zero_to is None

    @property
    def absolute_precision(self) -> float:
        if self.zero_to is not None:
            return self.zero_to
        if self.valuation is None:
            return INF
        return self.valuation + self.precision

    @staticmethod
    def _normalize(v: int, value: int, absprec: float, p: int) -> "QpApprox":
        """Build from value*p^v known mod p^absprec (value an integer)."""
        if absprec == INF:
            if value == 0:
                return QpApprox(None, 0, 0, p)
        if value == 0 or (absprec != INF and v >= absprec):
            return QpApprox(None, 0, 0, p, zero_to=int(absprec))
        e = int_valuation(value, p)
        v2 = v + e
        if absprec != INF and v2 >= absprec:
            return QpApprox(None, 0, 0, p, zero_to=int(absprec))
        n = int(absprec - v2)
        u = value // p ** e
        return QpApprox(v2, u % p ** n, n, p)

    def __add__(self, other: "QpApprox") -> "QpApprox":
        p = self.prime
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        absprec = min(self.absolute_precision, other.absolute_precision)
        terms = [t for t in (self, other) if t.valuation is not None]
        if not terms:
            return QpApprox(None, 0, 0, p, zero_to=int(absprec))
        v = min(t.valuation for t in terms)
        total = sum(t.unit * p ** (t.valuation - v) for t in terms)
        n = int(absprec - v)
        if n <= 0:
            return QpApprox(None, 0, 0, p, zero_to=int(absprec))
        return QpApprox._normalize(v, total % p ** n, absprec, p)

    def __neg__(self):
        if self.valuation is None:
            return self
        return QpApprox(self.valuation, -self.unit % self.prime ** self.precision,
                        self.precision, self.prime)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "QpApprox") -> "QpApprox":
        p = self.prime
        if self.is_exact_zero or other.is_exact_zero:
            return QpApprox.exact_zero(p)
        if self.valuation is None or other.valuation is None:
            # zero to known precision times something of known valuation
            z, o = (self, other) if self.valuation is None else (other, self)
            if o.valuation is None:
                return QpApprox(None, 0, 0, p, zero_to=z.zero_to + other.zero_to)
            return QpApprox(None, 0, 0, p, zero_to=z.zero_to + o.valuation)
        n = min(self.precision, other.precision)
        return QpApprox(self.valuation + other.valuation,
                        self.unit * other.unit % p ** n, n, p)

    def inverse(self) -> "QpApprox":
        if self.valuation is None:
            raise ZeroDivisionError("inverse of zero")
        m = self.prime ** self.precision
        return QpApprox(-self.valuation, mod_inverse(self.unit, m), self.precision, self.prime)

    def __truediv__(self, other):
        return self * other.inverse()

    def residue(self, r: int) -> int:
        """The value modulo p^r; requires valuation >= 0 part to be known."""
        p = self.prime
        if self.valuation is None:
            if self.zero_to is not None and self.zero_to < r:
                raise ValueError("precision too low")
            return 0
        if self.valuation < 0:
            raise ValueError("value is not a p-adic integer")
        if self.absolute_precision < r:
            raise ValueError("precision too low")
        return self.unit * p ** self.valuation % p ** r

    def to_json(self) -> dict:
        return {"p": self.prime, "valuation": self.valuation, "unit": str(self.unit),
                "N": self.precision, "zero_to": self.zero_to}


def reduce(x: RationalLike, p, N: int) -> QpApprox:
    """Embed a rational into Q_p with unit known mod p^N."""
    x = to_fraction(x)
    p = int(p)
    if x == 0:
        return QpApprox.exact_zero(p, N)
    v = valuation(x, p)
    unit = x / Fraction(p) ** v
    return QpApprox(int(v), residue_mod(unit, p ** N), N, p)
