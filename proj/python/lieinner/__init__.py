"""Exact computations with inner ideals of classical and finitary Lie algebras."""

import json

from . import _core

SCHEMA_VERSION = _core.SCHEMA_VERSION
CRITERION_COUNT = _core.CRITERION_COUNT

__all__ = [
    "delta",
    "check_inner",
    "classify_sl",
    "analyze_embedding",
    "finitary_demo",
    "limit_demo",
    "verify_suite",
    "matrix",
]


def _unwrap(result):
    text, passed = result
    out = json.loads(text)
    return out, passed


def delta(type, rank=0, weight=()):
    """delta on fundamental weights and simple roots; with weight, classify that module."""
    return _unwrap(_core.delta(type, rank, list(weight)))[0]


def check_inner(candidate):
    """candidate: {"algebra": {"kind", "n"}, "elements": [matrix, ...]}."""
    return _unwrap(_core.check_inner(json.dumps(candidate)))[0]


def classify_sl(candidate):
    return _unwrap(_core.classify_sl(json.dumps(candidate)))[0]


def analyze_embedding(description):
    return _unwrap(_core.analyze_embedding(json.dumps(description)))[0]


def finitary_demo(seed=1, samples=20):
    return _unwrap(_core.finitary_demo(seed, samples))[0]


def limit_demo(signature="2,0,0", depth=4, kind="plain", inner_cap=16):
    return _unwrap(_core.limit_demo(signature, depth, kind, inner_cap))[0]


def verify_suite(seed=None, minimal=False, only=(), large=False):
    kwargs = {"minimal": minimal, "only": list(only), "large": large}
    if seed is not None:
        kwargs["seed"] = seed
    return _unwrap(_core.verify_suite(**kwargs))[0]


def matrix(rows):
    """Dense rows of ints, Fractions or strings to the JSON matrix form."""
    rows = [list(r) for r in rows]
    return {
        "rows": len(rows),
        "cols": len(rows[0]) if rows else 0,
        "entries": [str(x) for r in rows for x in r],
    }
