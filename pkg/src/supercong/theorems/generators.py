"""Default parameter generators for sweeps.

Representatives of Z_p are small-denominator rationals u/d plus integer
residues in [1, p^3].  Conditions that pin residues down (proportional
pairs, bounds on sums of residues) are met by construction: a parameter
with prescribed <-x>_p = c is written -c + p*s for a small rational s.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction as Fr
from typing import Iterable, Optional

DEFAULT_DENOMS = (2, 3, 4, 5, 6, 8, 12)


def family(p: int, denoms: Iterable[int] = DEFAULT_DENOMS) -> list[Fr]:
    out = []
    for d in denoms:
        if d % p == 0:
            continue
        for u in range(1, d):
            if math.gcd(u, d) == 1:
                out.append(Fr(u, d))
    return sorted(set(out))


def integer_residues(p: int, count: int, rng: random.Random) -> list[Fr]:
    return [Fr(rng.randint(1, p ** 3)) for _ in range(count)]


def _shift_choices(p: int, denoms) -> list[Fr]:
    # small p-adic perturbations s used as -c + p*s
    return [Fr(0)] + family(p, denoms)[:6] + [Fr(-1), Fr(1)]


def with_residue(c: int, p: int, s: Fr) -> Fr:
    return -c + p * s


def _rng(seed: int, tid: str, p: int) -> random.Random:
    return random.Random(f"{seed}:{tid}:{p}")


def generate(tid: str, p: int, seed: int = 0, denoms=DEFAULT_DENOMS, ints: int = 20,
             limit: Optional[int] = None) -> list[dict]:
    rng = _rng(seed, tid, p)
    fam = family(p, denoms)
    singles = fam + integer_residues(p, ints, rng)
    shifts = _shift_choices(p, denoms)
    out: list[dict] = []
    if tid in ("eq_1_3", "eq_8_5", "thm_8_1_alpha_3_8"):
        out = [{}]
    elif tid in ("eq_1_4", "thm_5_1", "thm_6_1", "thm_8_4", "thm_9_3", "thm_10_2"):
        out = [{"alpha": a} for a in singles]
    elif tid == "cor_10_3":
        out = [{"alpha": Fr(1, 2)}, {"alpha": Fr(1, 3)}]
    elif tid == "char_sum":
        out = [{"d": Fr(d)} for d in (3, 4, 6)]
    elif tid == "thm_8_1":
        for d in sorted(set(denoms) | {5, 7, 8}):
            for r in range(1, d):
                if 3 * r > d and 2 * r < d and math.gcd(r, d) == 1 and d >= 5:
                    out.append({"alpha": Fr(r, d)})
    elif tid in ("eq_1_7", "thm_7_1", "thm_9_2"):
        out = [{"alpha": a, "beta": b} for a in fam for b in fam]
        ipool = integer_residues(p, 6, rng)
        out += [{"alpha": a, "beta": b} for a in ipool for b in fam[:4] + ipool]
        if tid in ("eq_1_7", "thm_9_2"):
            # residues arranged to satisfy the ordering hypotheses
            for _ in range(60):
                a = rng.randrange(0, p)
                b = rng.randrange(a, p)
                out.append({"alpha": with_residue(a, p, rng.choice(shifts)),
                            "beta": with_residue(b, p, rng.choice(shifts))})
    elif tid in ("thm_8_2", "thm_9_1"):
        for a_val in fam + integer_residues(p, 8, rng):
            a = (-a_val.numerator * pow(a_val.denominator, -1, p)) % p
            for b in range(1, a):
                out.append({"alpha": a_val, "beta": a_val * b / a})
        for _ in range(40):
            a = rng.randrange(2, p)
            b = rng.randrange(1, a)
            s = rng.choice(shifts[1:])
            alpha = with_residue(a, p, s)
            out.append({"alpha": alpha, "beta": alpha * b / a})
    elif tid in ("thm_9_4", "thm_9_5", "thm_9_6"):
        # rejection sampling on the residues, then random lifts
        for _ in range(4000):
            if len(out) >= 120:
                break
            a = rng.randrange(1, p)
            if tid == "thm_9_4":
                if a < 2:
                    continue
                b = rng.randrange(1, a)
                room = p + a - b - 1          # need c + d <= room
                if room - a < a:
                    continue
                c = rng.randrange(a, min(p, room - a + 1))
                d = rng.randrange(a, min(p, room - c + 1))
            elif tid == "thm_9_5":
                b, c, d = (rng.randrange(a, p) for _ in range(3))
                if not (2 * p - 1 <= b + c + d and p + a > max(b + c, b + d, c + d)):
                    continue
            else:
                room = p + a - 1              # need b + c + d <= room
                if room - 2 * a < a:
                    continue
                b = rng.randrange(a, room - 2 * a + 1)
                c = rng.randrange(a, room - b - a + 1)
                d = rng.randrange(a, room - b - c + 1)
            alpha = with_residue(a, p, rng.choice(shifts[1:]))
            beta = alpha * b / a if tid == "thm_9_4" else with_residue(b, p, rng.choice(shifts))
            out.append({"alpha": alpha, "beta": beta,
                        "gamma": with_residue(c, p, rng.choice(shifts)),
                        "delta": with_residue(d, p, rng.choice(shifts))})
    else:
        raise KeyError(tid)
    if limit is not None and len(out) > limit:
        out = rng.sample(out, limit)
    return out
