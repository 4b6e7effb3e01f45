"""Data types of the registry and the congruence comparison."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from ..errors import LowerParameterPole, NonUnitDenominator
from ..gamma import gamma_p
from ..hyperseries import SeriesSpec, truncated_f_exact, truncated_f_padic, agree_mod
from ..padic_core import (dash, format_rational, least_residue, mod_inverse, to_fraction,
                          valuation)

SCHEMA_VERSION = 1


@dataclass
class Rhs:
    """factor * prod Gamma_p(arg)^exp.  ``factor`` is an exact rational."""

    factor: Fraction
    gammas: list = field(default_factory=list)

    def times(self, c) -> "Rhs":
        return Rhs(self.factor * to_fraction(c), list(self.gammas))


def gamma_product(gammas: Sequence, p: int, prec: int) -> int:
    m = p ** prec
    num, den = 1, 1
    for arg, e in gammas:
        g = gamma_p(arg, p, prec).residue
        if e > 0:
            num = num * pow(g, e, m) % m
        elif e < 0:
            den = den * pow(g, -e, m) % m
    return num * mod_inverse(den, m) % m


def rhs_value(rhs: Rhs, p: int, r: int) -> Fraction:
    """A rational equal to the RHS modulo p^r (absolute)."""
    F = to_fraction(rhs.factor)
    if F == 0:
        return Fraction(0)
    vF = valuation(F, p)
    prec = r - min(0, int(vF))
    if prec <= 0:
        return Fraction(0)
    return F * gamma_product(rhs.gammas, p, prec)


def congruence_valuation(lhs: Fraction, rhs: Rhs, p: int, r: int) -> float:
    """nu_p(lhs - rhs), exact when below r, otherwise some value >= r."""
    diff = to_fraction(lhs) - rhs_value(rhs, p, r)
    v = valuation(diff, p)
    return v if v < r else max(v, r)


def residue_str(x: Fraction, p: int, r: int) -> str:
    x = to_fraction(x)
    if x.denominator % p == 0:
        return format_rational(x)
    return str(least_residue(x, p, r))


class Ctx:
    """Per-instance view of (p, params) with cached residues and dashes."""

    def __init__(self, p: int, params: dict):
        self.p = p
        self.params = {k: to_fraction(v) for k, v in params.items()}

    def __getitem__(self, name) -> Fraction:
        return self.params[name]

    def res(self, name) -> int:
        """<-x>_p for a parameter."""
        return least_residue(-self.params[name], self.p, 1)

    def star(self, name) -> Fraction:
        return dash(self.params[name], self.p)

    def poch_val(self, x, k=None) -> float:
        from ..hyperseries import pochhammer_valuation
        from ..errors import ZeroProduct
        k = self.p - 1 if k is None else k
        try:
            return pochhammer_valuation(x, k, self.p)
        except ZeroProduct:
            return math.inf


@dataclass
class Condition:
    label: str
    test: Callable


@dataclass
class Case:
    label: str
    conditions: list
    rhs: Callable

    def applies(self, ctx) -> bool:
        return all(c.test(ctx) for c in self.conditions)


@dataclass
class TheoremSpec:
    id: str
    summary: str
    params: tuple
    exponent: int
    lhs: Callable
    cases: list
    side_conditions: list = field(default_factory=list)
    truncation: str = "p-1"
    proof: Optional[str] = None
    series_lhs: bool = True
    min_prime: int = 3
    notes: str = ""

    def metadata(self) -> dict:
        return {"id": self.id, "summary": self.summary, "params": list(self.params),
                "exponent": self.exponent, "truncation": self.truncation,
                "cases": [c.label for c in self.cases],
                "side_conditions": [c.label for c in self.side_conditions],
                "min_prime": self.min_prime,
                "proof_handle": self.proof is not None}


@dataclass
class CongruenceReport:
    theorem: str
    p: int
    params: dict
    case: Optional[str]
    truncation: Optional[int]
    exponent: int
    lhs_residue: Optional[str] = None
    rhs_residue: Optional[str] = None
    holds: Optional[bool] = None
    skipped: Optional[str] = None
    diff_valuation: Optional[Union[int, str]] = None
    timing: float = 0.0
    regime: Optional[str] = None
    error: Optional[str] = None

    def sort_key(self):
        return (self.theorem, self.p, tuple(sorted(self.params.items())))

    def to_json(self, timing: bool = False) -> dict:
        d = {"schema_version": SCHEMA_VERSION, "theorem": self.theorem, "p": self.p,
             "params": dict(sorted(self.params.items())), "case": self.case,
             "truncation": self.truncation, "exponent": self.exponent,
             "lhs_residue": self.lhs_residue, "rhs_residue": self.rhs_residue,
             "holds": self.holds, "skipped": self.skipped,
             "diff_valuation": self.diff_valuation}
        if self.regime is not None:
            d["regime"] = self.regime
        if self.error is not None:
            d["error"] = self.error
        if timing:
            d["timing"] = round(self.timing, 6)
        return d


def series_pole(spec: SeriesSpec):
    """(b, k) if some lower (b)_k vanishes for k <= n, else None.

    Checked before summing: a numerator factor reaching zero first would
    otherwise hide an indeterminate 0/0 term.
    """
    for b in spec.lower:
        if b.denominator == 1 and b <= 0 and -b + 1 <= spec.n:
            return b, int(-b) + 1
    return None


def evaluate_lhs(spec: TheoremSpec, ctx: Ctx):
    """(value, truncation) of the left side."""
    out = spec.lhs(ctx)
    if isinstance(out, SeriesSpec):
        pole = series_pole(out)
        if pole is not None:
            raise LowerParameterPole(*pole)
        return truncated_f_exact(out), out.n, out
    return to_fraction(out), None, None


def check_instance(spec: TheoremSpec, p: int, params: dict, exponent: Optional[int] = None,
                   cross_check: bool = False) -> CongruenceReport:
    t0 = time.perf_counter()
    r = spec.exponent if exponent is None else exponent
    pstr = {k: format_rational(to_fraction(v)) for k, v in params.items()}
    rep = CongruenceReport(spec.id, p, pstr, None, None, r)
    try:
        ctx = Ctx(p, params)
        if p < spec.min_prime:
            rep.skipped = f"requires p >= {spec.min_prime}"
            return rep
        for name, val in ctx.params.items():
            if val.denominator % p == 0:
                rep.skipped = f"parameter {name} has denominator divisible by p"
                return rep
        for cond in spec.side_conditions:
            if not cond.test(ctx):
                rep.skipped = cond.label
                return rep
        active = [c for c in spec.cases if c.applies(ctx)]
        if not active:
            rep.skipped = "no case applies"
            return rep
        rep.case = "+".join(c.label for c in active)
        try:
            lhs, trunc, series = evaluate_lhs(spec, ctx)
        except LowerParameterPole as exc:
            rep.skipped = f"lower parameter pole: {exc}"
            return rep
        rep.truncation = trunc
        rep.lhs_residue = residue_str(lhs, p, r)
        holds = True
        worst = math.inf
        rres = []
        for case in active:
            try:
                rhs = case.rhs(ctx)
            except LowerParameterPole as exc:
                rep.skipped = f"lower parameter pole on the right side: {exc}"
                rep.holds = None
                return rep
            v = congruence_valuation(lhs, rhs, p, r)
            worst = min(worst, v)
            holds = holds and v >= r
            rres.append(residue_str(rhs_value(rhs, p, r), p, r))
        rep.rhs_residue = "|".join(rres)
        rep.holds = holds
        rep.diff_valuation = ">=%d" % r if worst >= r else int(worst)
        if cross_check and series is not None:
            q = truncated_f_padic(series, p, r)
            if not agree_mod(lhs, q, r):
                rep.error = "exact and p-adic series paths disagree"
                rep.holds = False
    except NonUnitDenominator as exc:
        rep.skipped = str(exc)
    finally:
        rep.timing = time.perf_counter() - t0
    return rep
