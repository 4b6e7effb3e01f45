"""Sweeps over primes and generated parameters, plus report I/O."""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from ..padic_core import format_rational, to_fraction
from .core import CongruenceReport, check_instance
from .generators import DEFAULT_DENOMS, generate
from .registry import get


def _one(args):
    tid, p, params, exponent, cross = args
    return check_instance(get(tid), p, params, exponent, cross)


def _dedupe(params_list):
    seen, out = set(), []
    for params in params_list:
        key = tuple(sorted((k, format_rational(to_fraction(v))) for k, v in params.items()))
        if key not in seen:
            seen.add(key)
            out.append(params)
    return out


def sweep(theorem_id: str, primes: Iterable[int], params: Optional[list] = None,
          exponent: Optional[int] = None, seed: int = 0, denoms=DEFAULT_DENOMS,
          ints: int = 20, limit: Optional[int] = None, workers: Optional[int] = 1,
          cross_check: bool = False) -> list[CongruenceReport]:
    """Check every generated (or given) parameter set at every prime.

    Output is sorted by (theorem, p, params), independent of ``workers``.
    """
    get(theorem_id)
    jobs = []
    for p in primes:
        plist = params if params is not None else generate(theorem_id, p, seed, denoms, ints, limit)
        for pr in _dedupe(plist):
            jobs.append((theorem_id, int(p), pr, exponent, cross_check))
    if not jobs:
        return []
    if workers is None:
        workers = os.cpu_count() or 1
    if workers > 1 and len(jobs) > 8:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            reports = list(ex.map(_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        reports = [_one(j) for j in jobs]
    reports.sort(key=CongruenceReport.sort_key)
    return reports


def to_jsonl(reports, timing: bool = False) -> str:
    return "".join(json.dumps(r.to_json(timing), sort_keys=True) + "\n" for r in reports)


CSV_FIELDS = ["schema_version", "theorem", "p", "params", "case", "truncation", "exponent",
              "lhs_residue", "rhs_residue", "holds", "skipped", "diff_valuation"]


def to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in reports:
        row = r.to_json()
        row["params"] = ";".join(f"{k}={v}" for k, v in row["params"].items())
        w.writerow(row)
    return buf.getvalue()


def read_jsonl(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]
