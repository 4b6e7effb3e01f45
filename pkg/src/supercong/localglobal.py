"""Hyperplanes over Z_p^n, line selection, Vandermonde extraction and the
sampling validators for local-to-global congruence arguments.

A ``FunctionHandle`` evaluates psi(s_1 p, ..., s_n p) for a point (s_i) and
returns the p-adic valuation of the value (``math.inf`` for exact zero),
which is all a "vanishes mod p^r" check needs.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Optional, Sequence

from .errors import (BasePointOnIntersection, DegeneratePlane, GridTooLarge,
                     NodesCollide, PrimeTooSmall)
from .padic_core import mod_inverse, residue_mod, to_fraction


@dataclass(frozen=True)
class Hyperplane:
    """a_1 x_1 + ... + a_n x_n + b = 0."""

    coefficients: tuple
    constant: Fraction = Fraction(0)

    @classmethod
    def of(cls, coefficients, constant=0) -> "Hyperplane":
        return cls(tuple(to_fraction(c) for c in coefficients), to_fraction(constant))

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def reduced(self, p: int) -> tuple[list[int], int]:
        a = [residue_mod(c, p) for c in self.coefficients]
        if not any(a):
            raise DegeneratePlane(f"{self} has no unit coefficient mod {p}")
        return a, residue_mod(self.constant, p)

    def value(self, point) -> Fraction:
        return sum((c * to_fraction(x) for c, x in zip(self.coefficients, point)), Fraction(0)) \
            + self.constant

    def __str__(self):
        terms = [f"{c}*x{i + 1}" for i, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) + f" + {self.constant}"


@dataclass(frozen=True)
class Line:
    direction: tuple
    base: tuple


@dataclass
class FunctionHandle:
    """psi over Z_p^n, evaluated at p-scaled points.

    ``evaluator(point, p, r)`` returns nu_p(psi(s_1 p, ..., s_n p)), capped
    or exact; the caller only compares it with r.  ``domain(point, p)``, when
    given, marks the points where psi is p-integral; the validators skip the
    rest and count them.
    """

    arity: int
    evaluator: Callable
    order: int
    loss: Callable = field(default=lambda alpha, r: 0)
    name: str = ""
    metadata: dict = field(default_factory=dict)
    domain: Optional[Callable] = None

    def __call__(self, point, p, r):
        return self.evaluator(tuple(to_fraction(x) for x in point), p, r)

    def defined_at(self, point, p) -> bool:
        return self.domain is None or self.domain(tuple(to_fraction(x) for x in point), p)


@dataclass(frozen=True)
class ExtractionResult:
    """Solution of sum_k c_k a_i^k = v_i (mod p^r).

    c_0 is psi(0); c_k for k >= 1 is A_k p^k / k!, certified mod p^r, so
    A_k itself is certified modulo p^(r-k).
    """

    prime: int
    order: int
    coefficients: tuple

    @property
    def psi0(self) -> int:
        return self.coefficients[0]

    def certified_exponents(self) -> list[int]:
        return [self.order - k for k in range(len(self.coefficients))]

    def scaled_taylor(self) -> list[int]:
        """A_k mod p^(r-k) reconstructed from the scaled column."""
        p, r = self.prime, self.order
        out = []
        for k, c in enumerate(self.coefficients):
            m = p ** (r - k)
            out.append((c // p ** k) * math.factorial(k) % m if c % p ** k == 0
                       else None)
        return out

    def evaluate(self, a) -> int:
        m = self.prime ** self.order
        a = residue_mod(a, m)
        return sum(c * pow(a, k, m) for k, c in enumerate(self.coefficients)) % m


def admissible(planes: Sequence[Hyperplane], p: int) -> bool:
    """True iff the mod-p images are pairwise distinct hyperplanes."""
    reduced = []
    for h in planes:
        a, b = h.reduced(p)
        vec = a + [b]
        # normalize so the first nonzero coefficient is 1
        lead = next(v for v in a if v)
        inv = mod_inverse(lead, p)
        reduced.append(tuple(v * inv % p for v in vec))
    return len(set(reduced)) == len(reduced)


def _on_pairwise_intersection(reduced, c, p) -> bool:
    on = [(sum(ai * ci for ai, ci in zip(a, c)) + b) % p == 0 for a, b in reduced]
    return sum(on) >= 2


def find_direction(planes: Sequence[Hyperplane], c: Sequence[int], p: int,
                   check_prime: bool = True):
    """Lexicographically first v with lambda_i(v) != 0 and distinct t_i.

    Returns (v, [t_1..t_r]).
    """
    r = len(planes)
    if check_prime and p <= comb(r + 1, 2):
        raise PrimeTooSmall(f"p={p} must exceed C({r + 1},2)={comb(r + 1, 2)}")
    reduced = [h.reduced(p) for h in planes]
    c = [int(x) % p for x in c]
    if _on_pairwise_intersection(reduced, c, p):
        raise BasePointOnIntersection(f"{c} lies on two of the hyperplanes mod {p}")
    n = len(c)
    mus = [(sum(ai * ci for ai, ci in zip(a, c)) + b) % p for a, b in reduced]
    for v in itertools.product(range(p), repeat=n):
        if not any(v):
            continue
        lams = [sum(ai * vi for ai, vi in zip(a, v)) % p for a, _ in reduced]
        if not all(lams):
            continue
        ts = [(-mu * mod_inverse(lam, p)) % p for mu, lam in zip(mus, lams)]
        if len(set(ts)) == r:
            return tuple(v), ts
    # unreachable when p > C(r+1, 2)
    raise PrimeTooSmall(f"no admissible direction exists at p={p}")


def vandermonde_solve(nodes: Sequence, values: Sequence[int], p: int, r: int) -> ExtractionResult:
    """Solve sum_{k<r} c_k a_i^k = v_i over Z/p^r with unit pivots."""
    m = p ** r
    if len(nodes) != r or len(values) != r:
        raise ValueError("need exactly r nodes and r values")
    red = [residue_mod(a, p) for a in nodes]
    if len(set(red)) != r:
        raise NodesCollide(f"nodes {list(nodes)} collide mod {p}")
    A = []
    for a, v in zip(nodes, values):
        a = residue_mod(a, m)
        A.append([pow(a, k, m) for k in range(r)] + [int(v) % m])
    for col in range(r):
        piv = next((i for i in range(col, r) if A[i][col] % p), None)
        if piv is None:
            raise ArithmeticError("non-unit pivot in Vandermonde system")
        A[col], A[piv] = A[piv], A[col]
        inv = mod_inverse(A[col][col], m)
        A[col] = [x * inv % m for x in A[col]]
        for i in range(r):
            if i != col and A[i][col]:
                f = A[i][col]
                A[i] = [(x - f * y) % m for x, y in zip(A[i], A[col])]
    return ExtractionResult(p, r, tuple(A[i][r] for i in range(r)))


def random_unit_rational(rng: random.Random, p: int, span: int = 50) -> Fraction:
    while True:
        d = rng.randint(1, span)
        if d % p:
            return Fraction(rng.randint(-span * p, span * p), d)


@dataclass
class LocalGlobalReport:
    name: str
    prime: int
    exponent: int
    checked: int = 0
    failures: list = field(default_factory=list)
    per_plane: dict = field(default_factory=dict)
    proved_regime: bool = True
    outside_domain: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"schema_version": 1, "kind": "localglobal", "handle": self.name,
                "p": self.prime, "exponent": self.exponent, "checked": self.checked,
                "outside_domain": self.outside_domain, "passed": self.passed,
                "regime": "proved" if self.proved_regime else "outside proved regime",
                "per_plane": self.per_plane,
                "failures": [{"point": [f"{x.numerator}/{x.denominator}" for x in pt],
                              "valuation": v} for pt, v in sorted(self.failures)]}


def plane_points(h: Hyperplane, p: int, count: int, rng: random.Random):
    """Points of the plane: integer sweep of free coordinates plus rational lifts."""
    n = h.dimension
    j = next(i for i, c in enumerate(h.coefficients) if residue_mod(c, p))
    free = [i for i in range(n) if i != j]
    pts = []

    def solve(vals):
        pt = [Fraction(0)] * n
        acc = h.constant
        for i, v in zip(free, vals):
            pt[i] = v
            acc += h.coefficients[i] * v
        pt[j] = -acc / h.coefficients[j]
        return tuple(pt)

    sweep = min(p, count)
    for t in range(sweep):
        # walk the free coordinates along a diagonal-ish integer path
        vals = [Fraction((t * (k + 1) + k) % p) for k in range(len(free))]
        pts.append(solve(vals))
    while len(pts) < count:
        vals = [random_unit_rational(rng, p) for _ in free]
        pts.append(solve(vals))
    return pts


def verify_on_hyperplanes(f: FunctionHandle, planes: Sequence[Hyperplane], p: int, r: int,
                          samples: int, seed: int = 0, require_admissible: bool = True) -> LocalGlobalReport:
    if require_admissible and not admissible(planes, p):
        raise ValueError("plane family is not admissible")
    rng = random.Random(seed)
    rep = LocalGlobalReport(f.name, p, r, proved_regime=p > comb(r + 1, 2))
    for h in planes:
        ok = 0
        for pt in plane_points(h, p, samples, rng):
            if not f.defined_at(pt, p):
                rep.outside_domain += 1
                continue
            v = f(pt, p, r)
            rep.checked += 1
            if v < r:
                rep.failures.append((pt, v))
            else:
                ok += 1
        rep.per_plane[str(h)] = ok
    return rep


def verify_global(f: FunctionHandle, p: int, r: int, budget: int, seed: int = 0,
                  grid: bool = True) -> LocalGlobalReport:
    rng = random.Random(seed)
    rep = LocalGlobalReport(f.name, p, r, proved_regime=p > comb(r + 1, 2))
    pts = []
    if grid:
        # a few all-integer points first
        for k in range(min(budget // 5, p)):
            pts.append(tuple(Fraction((k * (i + 2) + i) % p) for i in range(f.arity)))
    pts = [pt for pt in pts if f.defined_at(pt, p)]
    rep.outside_domain = min(budget // 5, p) - len(pts) if grid else 0
    tries = 0
    while len(pts) < budget and tries < 50 * budget:
        tries += 1
        pt = tuple(random_unit_rational(rng, p) for _ in range(f.arity))
        if f.defined_at(pt, p):
            pts.append(pt)
        else:
            rep.outside_domain += 1
    for pt in pts:
        v = f(pt, p, r)
        rep.checked += 1
        if v < r:
            rep.failures.append((pt, v))
    return rep


def multivar_coeffs(values_at: Callable, arity: int, p: int, r: int,
                    max_grid: int = 4096) -> dict:
    """Coefficients c_{k_1..k_n} of sum c_k prod s_i^{k_i}, total degree < r.

    ``values_at(point)`` returns psi(s p) mod p^r as an integer for points of
    the grid {0..r-1}^n.  Nested one-dimensional solves recover the scaled
    coefficients A_k p^|k| / k! modulo p^r; the returned table maps the
    multi-index to (coefficient, certified exponent r - |k|).
    """
    if r ** arity > max_grid:
        raise GridTooLarge(f"grid {r}^{arity} exceeds {max_grid}")
    nodes = list(range(r))
    grid = {pt: int(values_at(tuple(Fraction(x) for x in pt))) % p ** r
            for pt in itertools.product(nodes, repeat=arity)}

    def solve_axis(table, axis):
        out = {}
        others = sorted({pt[:axis] + pt[axis + 1:] for pt in table})
        for rest in others:
            vals = [table[rest[:axis] + (a,) + rest[axis:]] for a in nodes]
            ext = vandermonde_solve(nodes, vals, p, r)
            for k, c in enumerate(ext.coefficients):
                out[rest[:axis] + (k,) + rest[axis:]] = c
        return out

    table = grid
    for axis in range(arity):
        table = solve_axis(table, axis)
    result = {}
    for k, c in table.items():
        deg = sum(k)
        if deg < r:
            result[k] = (c, r - deg)
    return result
