"""Command-line front end.

Exit codes: 0 every checked instance holds, 1 at least one counterexample,
2 usage or config error, 3 everything was skipped.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import re
import sys
import time
from typing import Optional

from sympy import isprime, primerange

from . import __version__
from .errors import SupercongError, UnknownTheorem, UnsupportedDecomposition
from .padic_core import format_rational, parse_rational

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_SKIPPED = 0, 1, 2, 3
PARAM_NAMES = ("alpha", "beta", "gamma", "delta", "d")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --- parsing helpers ----------------------------------------------------------

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*(?:,\s*mod\s+(\d+)\s*=\s*(-?\d+)\s*)?$")


def parse_primes(text: str) -> list[int]:
    """'7..53', '7..53,mod 4=1' or a comma list '7,11,13'."""
    m = _RANGE.match(text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        ps = list(primerange(lo, hi + 1))
        if m.group(3):
            d, r = int(m.group(3)), int(m.group(4))
            if d <= 0:
                raise UsageError("modulus in a prime filter must be positive")
            ps = [p for p in ps if p % d == r % d]
        return ps
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot read prime list {text!r}")
    bad = [p for p in ps if not isprime(p)]
    if bad:
        raise UsageError(f"not prime: {bad}")
    return ps


def primes_from_config(spec) -> list[int]:
    if isinstance(spec, list):
        return parse_primes(",".join(str(x) for x in spec))
    if isinstance(spec, dict):
        try:
            lo, hi = int(spec["min"]), int(spec["max"])
        except (KeyError, TypeError, ValueError):
            raise UsageError("primes needs integer min and max")
        ps = list(primerange(lo, hi + 1))
        cong = spec.get("congruence")
        if cong:
            d, r = int(cong[0]), int(cong[1])
            ps = [p for p in ps if p % d == r % d]
        return ps
    if isinstance(spec, (str, int)):
        return parse_primes(str(spec))
    raise UsageError("unreadable primes entry")


def _rational(text) -> Fraction:
    try:
        return parse_rational(str(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational: {text!r}")


def _param_lists(source: dict) -> Optional[list[dict]]:
    """Cartesian product of explicitly given parameter values, or None."""
    given = {k: v for k, v in source.items() if v is not None}
    if not given:
        return None
    names = sorted(given)
    pools = []
    for k in names:
        v = given[k]
        vals = v if isinstance(v, list) else str(v).split(",")
        pools.append([_rational(x) for x in vals])
    return [dict(zip(names, combo)) for combo in itertools.product(*pools)]


def _denoms(text):
    if text is None:
        return None
    try:
        ds = tuple(int(x) for x in str(text).split(",") if str(x).strip())
    except ValueError:
        raise UsageError(f"bad denominator list {text!r}")
    if not ds or min(ds) < 2:
        raise UsageError("denominators must be integers >= 2")
    return ds


# --- output -------------------------------------------------------------------

def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(reports, fmt: str, timing: bool) -> str:
    from .theorems import to_csv, to_jsonl
    return to_csv(reports) if fmt == "csv" else to_jsonl(reports, timing)


def _exit_for(reports) -> int:
    checked = [r for r in reports if r.skipped is None]
    if any(r.holds is False for r in checked):
        return EXIT_COUNTEREXAMPLE
    if not checked:
        return EXIT_SKIPPED
    return EXIT_OK


def _summary(reports, elapsed: float):
    n = len(reports)
    held = sum(1 for r in reports if r.holds)
    failed = sum(1 for r in reports if r.holds is False)
    print(f"{n} instances: {held} hold, {failed} fail, {n - held - failed} skipped "
          f"({elapsed:.2f}s)", file=sys.stderr)


# --- subcommands --------------------------------------------------------------

def cmd_list(args) -> int:
    from .theorems import list_theorems
    rows = list_theorems()
    if args.format == "json":
        _emit("".join(json.dumps(r, sort_keys=True) + "\n" for r in rows), args.out)
    else:
        lines = [f"{r['id']:<20} r={r['exponent']}  {r['summary']}" for r in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cli_params(args) -> dict:
    return {k: getattr(args, k, None) for k in PARAM_NAMES}


def cmd_verify(args) -> int:
    from .theorems import check_instance, get
    spec = get(args.theorem)
    plist = _param_lists(_cli_params(args)) or [{}]
    for params in plist:
        missing = [n for n in spec.params if n not in params]
        if missing:
            raise UsageError(f"{args.theorem} needs --{' --'.join(missing)}")
    t0 = time.perf_counter()
    reports = [check_instance(args.theorem, args.p, pr, args.exponent, args.cross_check)
               for pr in plist]
    _emit(_render(reports, args.format, args.timing), args.out)
    _summary(reports, time.perf_counter() - t0)
    return _exit_for(reports)


def _sweep_run(tid, primes, params, exponent, seed, denoms, ints, limit, workers, cross,
               fmt, timing, out) -> int:
    from .theorems import get, sweep
    from .theorems.generators import DEFAULT_DENOMS
    get(tid)
    if not primes:
        raise UsageError("empty prime selection")
    t0 = time.perf_counter()
    reports = sweep(tid, primes, params=params, exponent=exponent, seed=seed,
                    denoms=denoms or DEFAULT_DENOMS, ints=ints, limit=limit,
                    workers=workers, cross_check=cross)
    _emit(_render(reports, fmt, timing), out)
    _summary(reports, time.perf_counter() - t0)
    return _exit_for(reports)


def _load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"config is not JSON: {exc}")
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    return cfg


def cmd_sweep(args) -> int:
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    if args.config:
        cfg = _load_config(args.config)
        unknown = set(cfg) - {"theorem", "primes", "params", "exponent", "seed", "alpha_denoms",
                              "ints", "limit"}
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        if "theorem" not in cfg or "primes" not in cfg:
            raise UsageError("config needs theorem and primes")
        params = _param_lists(cfg.get("params") or {})
        return _sweep_run(cfg["theorem"], primes_from_config(cfg["primes"]), params,
                          cfg.get("exponent", args.exponent), cfg.get("seed", args.seed),
                          _denoms(cfg.get("alpha_denoms", args.alpha_denoms)),
                          cfg.get("ints", args.ints), cfg.get("limit", args.limit), workers,
                          args.cross_check, args.format, args.timing, args.out)
    if not args.theorem or not args.primes:
        raise UsageError("sweep needs --theorem and --primes, or --config")
    return _sweep_run(args.theorem, parse_primes(args.primes), _param_lists(_cli_params(args)),
                      args.exponent, args.seed, _denoms(args.alpha_denoms), args.ints,
                      args.limit, workers, args.cross_check, args.format, args.timing,
                      args.out)


def cmd_gamma(args) -> int:
    from .gamma import gamma_p
    g = gamma_p(_rational(args.arg), args.p, args.precision)
    _emit(f"{g.residue}\n", args.out)
    return EXIT_OK


def cmd_harmonic(args) -> int:
    from .harmonic import fh_sum, h_sum
    if args.alpha is not None:
        from .harmonic import fh_sum_padic, h_sum_padic
        fn = fh_sum_padic if args.elementary else h_sum_padic
        v = fn(_rational(args.alpha), args.s, args.p, args.r)
        _emit(f"{v.residue} mod {args.p}^{v.precision}\n", args.out)
        return EXIT_OK
    if args.n is None:
        raise UsageError("harmonic needs --n (or --alpha with --r)")
    val = (fh_sum if args.elementary else h_sum)(args.n, args.s, args.p)
    _emit(format_rational(val) + "\n", args.out)
    return EXIT_OK


def cmd_hyper(args) -> int:
    from .hyperseries import SeriesSpec, truncated_f_exact
    from .theorems.core import residue_str, series_pole
    upper = [_rational(x) for x in args.upper.split(",")]
    lower = [_rational(x) for x in args.lower.split(",")] if args.lower else []
    try:
        spec = SeriesSpec.of(upper, lower, args.n, _rational(args.z))
    except ValueError as exc:
        raise UsageError(str(exc))
    if series_pole(spec) is not None:
        raise UsageError("lower parameter pole at (%s)_%d" % series_pole(spec))
    val = truncated_f_exact(spec)
    if args.p is None:
        _emit(format_rational(val) + "\n", args.out)
        return EXIT_OK
    if not isprime(args.p):
        raise UsageError(f"--p {args.p} is not prime")
    _emit(residue_str(val, args.p, args.mod_exp) + "\n", args.out)
    return EXIT_OK


def _plane_list(raw, arity):
    from .localglobal import Hyperplane
    out = []
    for row in raw:
        if not isinstance(row, list) or len(row) != arity + 1:
            raise UsageError(f"plane {row!r} needs {arity} coefficients and a constant")
        vals = [_rational(x) for x in row]
        out.append(Hyperplane.of(vals[:-1], vals[-1]))
    return out


def cmd_localglobal(args) -> int:
    """Run a proof handle through both local-global checks.

    A config names either a theorem (its registered handle and planes) or
    a handle key directly; explicit planes in the config replace the handle's.
    """
    from math import comb

    from .localglobal import verify_global, verify_on_hyperplanes
    from .theorems.proofs import build_proof_function, handle_by_name
    cfg = _load_config(args.config) if args.config else {}
    unknown = set(cfg) - {"theorem", "handle", "p", "params", "planes", "r", "samples",
                          "budget", "seed"}
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    tid = cfg.get("theorem", args.theorem)
    name = cfg.get("handle")
    p = cfg.get("p", args.p)
    if p is None or not (tid or name):
        raise UsageError("localglobal needs a theorem (or handle) and a prime")
    p = int(p)
    if not isprime(p):
        raise UsageError(f"p = {p} is not prime")
    if "params" in cfg:
        params = {k: _rational(v) for k, v in cfg["params"].items()}
    else:
        given = _param_lists(_cli_params(args))
        params = given[0] if given else {}
    samples = cfg.get("samples", args.samples)
    budget = cfg.get("budget", args.budget)
    seed = cfg.get("seed", args.seed)
    try:
        ph = handle_by_name(name, p, params) if name else build_proof_function(tid, p, params)
    except UnsupportedDecomposition as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_SKIPPED
    except (KeyError, ValueError) as exc:
        raise UsageError(f"cannot build handle: {exc}")
    r = int(cfg.get("r", ph.exponent))
    if p <= comb(r + 1, 2) and not args.probe_small_primes:
        print(f"p = {p} <= C({r + 1},2): outside the proved regime; pass --probe-small-primes "
              "to run anyway", file=sys.stderr)
        return EXIT_SKIPPED
    planes = _plane_list(cfg["planes"], ph.handle.arity) if "planes" in cfg else ph.planes
    try:
        on_planes = verify_on_hyperplanes(ph.handle, planes, p, r, samples or p, seed=seed)
    except ValueError as exc:
        raise UsageError(str(exc))
    glob = verify_global(ph.handle, p, r, budget, seed=seed + 1)
    v = ph.at_point(p, r)
    doc = {"schema_version": 1, "handle": ph.handle.name, "p": p, "exponent": r,
           "params": {k: format_rational(x) for k, x in sorted(params.items())},
           "planes": on_planes.to_json(), "global": glob.to_json(),
           "point_valuation": ">=%d" % r if v >= r else int(v)}
    _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    print(f"planes: {on_planes.checked} points, {len(on_planes.failures)} failures; "
          f"global: {glob.checked} points, {len(glob.failures)} failures", file=sys.stderr)
    if on_planes.checked + glob.checked == 0:
        return EXIT_SKIPPED
    return EXIT_OK if on_planes.passed and glob.passed and v >= r else EXIT_COUNTEREXAMPLE


# --- argument parser ----------------------------------------------------------

def _add_params(sp):
    for n in PARAM_NAMES:
        sp.add_argument(f"--{n}", help=f"{n} as u/d (comma list allowed)")


def _add_output(sp):
    sp.add_argument("--out", help="write data here instead of standard output")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--timing", action="store_true", help="include per-instance timings")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="supercong", description="Check truncated hypergeometric supercongruences.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    sp = sub.add_parser("list", help="print the theorem registry")
    sp.add_argument("--out")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("verify", help="check one instance")
    sp.add_argument("--theorem", required=True)
    sp.add_argument("--p", type=int, required=True)
    _add_params(sp)
    sp.add_argument("--exponent", type=int)
    sp.add_argument("--cross-check", action="store_true")
    _add_output(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="check generated instances over a prime range")
    sp.add_argument("--theorem")
    sp.add_argument("--primes", help="A..B[,mod d=r] or a comma list")
    sp.add_argument("--config", help="JSON sweep config")
    _add_params(sp)
    sp.add_argument("--exponent", type=int)
    sp.add_argument("--alpha-denoms", help="denominators of the rational family, e.g. 2,3,4,6")
    sp.add_argument("--ints", type=int, default=20, help="random integer residues per prime")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int)
    sp.add_argument("--cross-check", action="store_true")
    _add_output(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("gamma", help="Morita Gamma_p(x) modulo p^prec")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--arg", required=True, help="rational argument a/b")
    sp.add_argument("--precision", type=int, default=3)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gamma)

    sp = sub.add_parser("harmonic", help="p-coprime harmonic sums")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--s", type=int, default=1)
    sp.add_argument("--alpha", help="p-adic index alpha in Z_p instead of --n")
    sp.add_argument("--r", type=int, default=2, help="precision for --alpha")
    sp.add_argument("--elementary", action="store_true", help="elementary symmetric version")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_harmonic)

    sp = sub.add_parser("hyper", help="evaluate a truncated series")
    sp.add_argument("--upper", required=True)
    sp.add_argument("--lower", default="")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--z", default="1")
    sp.add_argument("--p", type=int)
    sp.add_argument("--mod-exp", type=int, default=3, help="print the residue mod p^r")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_hyper)

    sp = sub.add_parser("localglobal", help="check a proof handle on its planes and globally")
    sp.add_argument("--theorem")
    sp.add_argument("--p", type=int)
    sp.add_argument("--config")
    _add_params(sp)
    sp.add_argument("--samples", type=int, help="points per plane (default p)")
    sp.add_argument("--budget", type=int, default=50, help="global sample points")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--probe-small-primes", action="store_true",
                    help="run even when p <= C(r+1,2); results are labelled")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_localglobal)
    return ap


def main(argv: Optional[list] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("missing subcommand (try: list, verify, sweep)")
        for name in ("p",):
            v = getattr(args, name, None)
            if v is not None and not isprime(v):
                raise UsageError(f"--p {v} is not prime")
        return args.func(args)
    except UsageError as exc:
        print(f"supercong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownTheorem as exc:
        print(f"supercong: error: unknown theorem {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SupercongError as exc:
        print(f"supercong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
