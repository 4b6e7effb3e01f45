"""Registry of supercongruences and the machinery to check them."""
from .core import CongruenceReport, Rhs, TheoremSpec, check_instance as _check
from .generators import family, generate
from .registry import REGISTRY, get, list_theorems
from .sweep import read_jsonl, sweep, to_csv, to_jsonl


def check_instance(theorem_id, p, params=None, exponent=None, cross_check=False):
    return _check(get(theorem_id), int(p), dict(params or {}), exponent, cross_check)
