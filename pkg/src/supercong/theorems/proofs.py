"""Difference functions over the substitution variables, with the hyperplane
families on which they vanish identically.

A handle maps a point s = (s_1..s_n) to nu_p(Psi(s_1 p, ..., s_n p)).  Psi is
a truncated series minus a rational multiple of a Gamma_p product.  Where the
series has a removable singularity (a well-poised pair 1+A/2 over A/2 at a
nonpositive integer A, or a vanishing lower factor cancelled by the
numerator), the variable is moved by p^K; since Psi = P/Q with p-integral
coefficients and Q a unit near the origin, that changes the value by a
multiple of p^K only.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Fr
from typing import Callable, Optional

from ..errors import LowerParameterPole, NonUnitDenominator, UnsupportedDecomposition, ZeroProduct
from ..hyperseries import SeriesSpec, pochhammer_valuation, truncated_f_exact
from ..localglobal import FunctionHandle, Hyperplane
from ..padic_core import to_fraction
from .core import Ctx, Rhs, congruence_valuation, series_pole
from .registry import get, whipple_4f3, whipple_gammas

# extra digits carried past r when stepping off a removable singularity
PERTURB_MARGIN = 3


@dataclass
class ProofHandle:
    handle: FunctionHandle
    planes: list
    point: tuple
    exponent: int
    notes: str = ""

    def at_point(self, p: int, r: Optional[int] = None) -> float:
        return self.handle(self.point, p, self.exponent if r is None else r)


def _difference_valuation(build, X, p, r):
    series, rhs = build(X)
    if series_pole(series) is not None:
        raise LowerParameterPole(*series_pole(series))
    return congruence_valuation(truncated_f_exact(series), rhs, p, r)


def _evaluator(build, arity):
    def ev(point, p, r):
        X = [to_fraction(s) * p for s in point]
        try:
            return _difference_valuation(build, X, p, r)
        except (LowerParameterPole, ZeroDivisionError):
            pass
        K = r + PERTURB_MARGIN
        # step every coordinate off the singular locus by distinct multiples of p^K
        for attempt in range(1, 4):
            Y = [x + (i + attempt) * Fr(p) ** K for i, x in enumerate(X)]
            try:
                return _difference_valuation(build, Y, p, max(r, 1))
            except (LowerParameterPole, ZeroDivisionError):
                continue
        raise LowerParameterPole("perturbed point", 0)
    return ev


def _poch_domain(build, params):
    """Restrict a handle to points where the constrained lower parameters keep
    p^2 out of their (.)_{p-1}, the hypothesis that makes psi p-integral."""
    def dom(X, p):
        for v in params(X):
            try:
                if pochhammer_valuation(v, p - 1, p) >= 2:
                    return False
            except (ZeroProduct, NonUnitDenominator):
                return False
        return True
    build.domain = dom
    return build


def _planes(*rows):
    return [Hyperplane.of(coeffs, const) for coeffs, const in rows]


# --- builders -----------------------------------------------------------------

def _sun(c):
    a, p = c.res("alpha"), c.p
    sign = Fr((-1) ** a)

    def build(X):
        x, = X
        return SeriesSpec.of([-a + x, 1 + a - x], [1], p - 1), Rhs(sign)
    return build, 1, _planes(([1], 0), ([1], -1)), (c.star("alpha"),), 2


def _dixon_gammas(a, x, y, z):
    h = Fr(1, 2)
    return [(1 - h * a + h * x, 1), (1 + x - y, 1), (1 + x - z, 1), (1 + 3 * h * a + h * x - y - z, 1),
            (1 - a + x, -1), (1 + h * a + h * x - y, -1), (1 + h * a + h * x - z, -1),
            (1 + a + x - y - z, -1)]


def _dixon_prefactor(a, p):
    even, low = a % 2 == 0, (3 * a < 2 * p if a % 2 == 0 else 3 * a < p)
    if even and low:
        return lambda x, y, z: Fr(2)
    if even:
        return lambda x, y, z: 2 * (p - y - z) + x
    if low:
        return lambda x, y, z: x
    return lambda x, y, z: x * (p + x - 2 * y - 2 * z) / 2


def _dixon(c):
    a, p = c.res("alpha"), c.p
    pref = _dixon_prefactor(a, p)

    def build(X):
        x, y, z = X
        s = SeriesSpec.of([-a + x, -a + y, -a + z], [1 + x - y, 1 + x - z], p - 1)
        return s, Rhs(pref(x, y, z), _dixon_gammas(a, x, y, z))
    st = c.star("alpha")
    return build, 3, _planes(([1, 0, 0], 0), ([0, 1, 0], 0), ([0, 0, 1], 0)), (st, st, st), 3


def _watson(c):
    a, p = c.res("alpha"), c.p
    h = Fr(1, 2)
    if a % 2:
        # the two Gamma factors at (1-a)/2 + ... sit at poles; their residues
        # leave this quadratic behind
        pref = lambda x, y, z: (x * (x - p) - z * (y + z)) / 4
    else:
        pref = lambda x, y, z: Fr(1)

    def build(X):
        x, y, z = X
        s = SeriesSpec.of([-a + x, 1 + a - x, h * (1 - y)], [1 + z, 1 - y - z], p - 1)
        g = [(h * (1 + z), 1), (1 + h * z, 1), (h * (1 - y - z), 1), (1 - h * (y + z), 1),
             (h * (1 - a) + h * (x + z), -1), (h * (1 - a) + h * (x - y - z), -1),
             (1 + h * a + h * (z - x), -1), (1 + h * a - h * (x + y + z), -1)]
        return s, Rhs(pref(x, y, z), g)
    return build, 3, _planes(([0, 1, 0], -1), ([1, 0, 0], 0), ([1, 0, 0], -1)), \
        (c.star("alpha"), Fr(0), Fr(0)), 3


def _pfaff(c):
    a, b, p = c.res("alpha"), c.res("beta"), c.p
    big = a + b >= p

    def build(X):
        x, y = X
        s = SeriesSpec.of([-a + x, -b + y, 1 + a + b - x - y], [1, 1], p - 1)
        g = [(1 + a + b - x - y, 2), (1 + a - x, -2), (1 + b - y, -2)]
        pref = ((x - p) ** 2 + (y - p) ** 2 + x * y - p * p) if big else Fr(1)
        return s, Rhs(pref, g)
    return build, 2, _planes(([1, 0], 0), ([0, 1], 0), ([1, 1], -1)), \
        (c.star("alpha"), c.star("beta")), 3


def _dougall_params(c):
    """(alpha, beta) for the 7F6 family with a proportional pair."""
    tid = c.params.get("_tid")
    if tid in ("thm_8_1",):
        al = c["alpha"]
        return al, 1 - 2 * al
    if tid == "eq_8_5":
        return Fr(2, 5), Fr(1, 5)
    if tid == "thm_8_1_alpha_3_8":
        return Fr(3, 8), Fr(1, 4)
    return c["alpha"], c["beta"]


def _dougall(c):
    al, be = _dougall_params(c)
    p = c.p
    cc = Ctx(p, {"alpha": al, "beta": be})
    a, b = cc.res("alpha"), cc.res("beta")
    M = 2 * a + b

    def build(X):
        x, y, z, w = X
        A = -a + a * x
        B = -b + b * x
        G, D, E = -a + y, -a + z, -a + w
        R = 1 + 2 * A - B - G - D - E
        s = SeriesSpec.of([A, 1 + A / 2, B, G, D, E, R],
                          [A / 2, A - B + 1, A - G + 1, A - D + 1, A - E + 1, A - R + 1], M)
        g = [(-2 * a - b - a * x + b * x + y + z + w, 1), (1 - a + a * x, -1),
             (-a - a * x + z + w, 1), (1 + b - b * x + a * x - y, -1),
             (-a - a * x + y + w, 1), (1 + b - b * x + a * x - z, -1),
             (-b - a * x + b * x + w, 1), (1 + a + a * x - y - z, -1),
             (1 - a + b + a * x - b * x, 1), (-2 * a - a * x + y + z + w, -1),
             (1 + a * x - y, 1), (-a - b - a * x + b * x + z + w, -1),
             (1 + a * x - z, 1), (-a - b - a * x + b * x + y + w, -1),
             (1 + a + b + a * x - b * x - y - z, 1), (-a * x + w, -1)]
        return s, Rhs(Fr(a, a - b), g)
    planes = _planes(([1, 0, 0, 0], 0), ([0, 1, 0, 0], 0), ([0, 0, 1, 0], 0), ([0, 0, 0, 1], 0),
                     ([2 * a - b, -1, -1, -1], 1))
    st = cc.star("alpha")
    return build, 4, planes, (st / a, st, st, st), 5


def _whipple_a(c):
    p = c.p
    a, b, cg, dd = (c.res(n) for n in ("alpha", "beta", "gamma", "delta"))

    def build(X):
        x, y, z = X
        A, B = a * (x - 1), b * (x - 1)
        G, D = -cg + y, -dd + z
        s = SeriesSpec.of([A, 1 + A / 2, A, A, B, G, D],
                          [A / 2, 1, 1, A - B + 1, A - G + 1, A - D + 1], p - 1)
        f43 = whipple_4f3(A, B, G, D, p - 1)
        return s, Rhs(Fr(a, a - b) * f43, whipple_gammas(A, B, G, D))

    def lowers(X):
        x, y, z = X
        A, B, G, D = a * (x - 1), b * (x - 1), -cg + y, -dd + z
        return A - B + 1, A - G + 1, A - D + 1, B + G + D - A
    _poch_domain(build, lowers)
    st = c.star("alpha")
    return build, 3, _planes(([1, 0, 0], 0), ([0, 1, 0], 0), ([0, 0, 1], 0)), \
        (st / a, c.star("gamma"), c.star("delta")), 3


def _whipple_free(c, p2_branch):
    """alpha..delta each shifted by its own variable; prefactor x or x(p+x-y-z-w)."""
    p = c.p
    a, b, cg, dd = (c.res(n) for n in ("alpha", "beta", "gamma", "delta"))

    def build(X):
        x, y, z, w = X
        A, B, G, D = -a + x, -b + y, -cg + z, -dd + w
        s = SeriesSpec.of([A, 1 + A / 2, A, A, B, G, D],
                          [A / 2, 1, 1, A - B + 1, A - G + 1, A - D + 1], p - 1)
        pref = x * (p + x - y - z - w) if p2_branch else x
        return s, Rhs(pref * whipple_4f3(A, B, G, D, p - 1), whipple_gammas(A, B, G, D))

    def lowers(X):
        x, y, z, w = X
        A, B, G, D = -a + x, -b + y, -cg + z, -dd + w
        out = [A - B + 1, A - G + 1, A - D + 1]
        return out if p2_branch else out + [B + G + D - A]
    _poch_domain(build, lowers)
    point = tuple(c.star(n) for n in ("alpha", "beta", "gamma", "delta"))
    return build, 4, _planes(([0, 1, 0, 0], 0), ([0, 0, 1, 0], 0), ([0, 0, 0, 1], 0)), point, 3


def dougall_5f4_gammas(A, B, G, D):
    return [(A - B + 1, 1), (A - G + 1, 1), (A - D + 1, 1), (A - B - G - D + 1, 1),
            (A + 1, -1), (A - B - G + 1, -1), (A - B - D + 1, -1), (A - G - D + 1, -1)]


def _f54(p, params, pref):
    def build(X):
        A, B, G, D = params(X)
        s = SeriesSpec.of([A, 1 + A / 2, B, G, D], [A / 2, A - B + 1, A - G + 1, A - D + 1], p - 1)
        return s, Rhs(pref(X), dougall_5f4_gammas(A, B, G, D))

    def lowers(X):
        A, B, G, D = params(X)
        return A - B + 1, A - G + 1, A - D + 1
    return _poch_domain(build, lowers)


def _dougall_5f4(c):
    p, a, b = c.p, c.res("alpha"), c.res("beta")
    build = _f54(p, lambda X: (a * (X[0] - 1), b * (X[0] - 1), -a + X[1], -a + X[2]),
                 lambda X: Fr(a, a - b))
    st = c.star("alpha")
    return build, 3, _planes(([1, 0, 0], 0), ([0, 1, 0], 0), ([0, 0, 1], 0)), (st / a, st, st), 3


def _dougall_5f4_b(c):
    p, a, b = c.p, c.res("alpha"), c.res("beta")
    big = a + b >= p
    build = _f54(p, lambda X: (-a + X[0], -b + X[1], -a + X[2], -a + X[3]),
                 lambda X: X[0] * (p + X[0] - sum(X[1:])) if big else X[0])
    st = c.star("alpha")
    return build, 4, _planes(([0, 1, 0, 0], 0), ([0, 0, 1, 0], 0), ([0, 0, 0, 1], 0)), \
        (st, c.star("beta"), st, st), 3


def _dougall_5f4_c(c):
    # Gamma_p(1)^3 = -1 at the diagonal accounts for the sign of the stated form
    p, a = c.p, c.res("alpha")
    big = 2 * a >= p + 1
    build = _f54(p, lambda X: tuple(-a + x for x in X),
                 lambda X: X[0] * (p + X[0] - sum(X[1:])) if big else X[0])
    st = c.star("alpha")
    return build, 4, _planes(([1, 0, 0, 0], 0), ([0, 1, 0, 0], 0), ([0, 0, 1, 0], 0),
                             ([0, 0, 0, 1], 0)), (st,) * 4, 4


BUILDERS: dict[str, Callable] = {
    "sun_2f1": _sun,
    "dixon": _dixon,
    "watson": _watson,
    "pfaff_saalschutz": _pfaff,
    "dougall": _dougall,
    "whipple_a": _whipple_a,
    "whipple_b": lambda c: _whipple_free(c, True),
    "whipple_c": lambda c: _whipple_free(c, False),
    "dougall_5f4": _dougall_5f4,
    "dougall_5f4_b": _dougall_5f4_b,
    "dougall_5f4_c": _dougall_5f4_c,
}

# entries whose proof needs no decomposition or has none here
NO_DECOMPOSITION = {"eq_1_3", "eq_1_7", "thm_10_2", "cor_10_3", "char_sum"}


def build_proof_function(theorem_id: str, p: int, params: Optional[dict] = None) -> ProofHandle:
    spec = get(theorem_id)
    if theorem_id in NO_DECOMPOSITION:
        raise UnsupportedDecomposition(f"{theorem_id} is checked directly, not by hyperplanes")
    key = spec.proof
    if key not in BUILDERS:
        raise UnsupportedDecomposition(f"no hyperplane decomposition registered for {theorem_id}")
    params = dict(params or {})
    c = Ctx(int(p), params)
    c.params["_tid"] = theorem_id
    build, arity, planes, point, r = BUILDERS[key](c)
    h = _handle(build, arity, r, f"{theorem_id}:{key}",
                {"theorem": theorem_id, "params": {k: str(v) for k, v in params.items()}})
    return ProofHandle(h, planes, tuple(point), r)


def _handle(build, arity, r, name, metadata=None):
    dom = getattr(build, "domain", None)
    domain = None
    if dom is not None:
        def domain(pt, p):
            return dom([to_fraction(x) * p for x in pt], p)
    return FunctionHandle(arity, _evaluator(build, arity), r, name=name,
                          metadata=metadata or {}, domain=domain)


def handle_by_name(name: str, p: int, params: dict) -> ProofHandle:
    """A registered builder by its own key (used by the CLI config files)."""
    if name not in BUILDERS:
        raise UnsupportedDecomposition(f"unknown handle {name}")
    c = Ctx(int(p), dict(params))
    build, arity, planes, point, r = BUILDERS[name](c)
    h = _handle(build, arity, r, name)
    return ProofHandle(h, planes, tuple(point), r)


def instances_per_case(theorem_id: str, p: int, seed: int = 0) -> dict:
    """First generated admissible parameter set for each case at p."""
    from .core import check_instance
    from .generators import generate
    spec = get(theorem_id)
    out = {}
    for params in generate(theorem_id, p, seed=seed):
        rep = check_instance(spec, p, params)
        if rep.skipped is None and rep.case not in out:
            out[rep.case] = params
        if len(out) == len(spec.cases):
            break
    return out


def verify_proof(theorem_id: str, p: int, params: dict, samples: Optional[int] = None,
                 budget: int = 50, seed: int = 0):
    """(plane report, global report) for the handle of one instance."""
    from ..localglobal import verify_global, verify_on_hyperplanes
    ph = build_proof_function(theorem_id, p, params)
    r = ph.exponent
    planes = verify_on_hyperplanes(ph.handle, ph.planes, p, r, samples or p, seed=seed)
    glob = verify_global(ph.handle, p, r, budget, seed=seed + 1)
    return planes, glob
