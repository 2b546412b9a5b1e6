"""Graph products, independence complexes, and certified shellability checks."""

import json as _json

from ._core import (
    BudgetExceeded,
    Complex,
    Graph,
    NotPureError,
    ParseError,
    ResourceError,
    alpha,
    circulant,
    circulant_lex_connection,
    complete,
    deletion,
    describe,
    edgeless,
    expansion,
    independence_complex,
    is_cohen_macaulay,
    is_pure,
    lex_product,
    link,
    parse_graph,
    suite_names,
    to_dot,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "Complex",
    "Graph",
    "NotPureError",
    "ParseError",
    "ResourceError",
    "alpha",
    "circulant",
    "circulant_lex_connection",
    "complete",
    "deletion",
    "describe",
    "edgeless",
    "expansion",
    "independence_complex",
    "is_cohen_macaulay",
    "is_pure",
    "lex_product",
    "link",
    "parse_graph",
    "reduced_homology",
    "run_check",
    "run_suite",
    "shelling",
    "suite_names",
    "to_dot",
    "verify_shed_tree",
    "verify_shelling",
    "vertex_decomposition",
]


def shelling(complex, timeout=None, threads=1):
    """Search for a shelling order. Returns a dict with verdict, certificate and stats."""
    return _json.loads(_core._shelling(complex, timeout, threads))


def vertex_decomposition(complex, timeout=None, threads=1, cyclic_symmetry=False):
    """Search for a shed tree. Returns a dict with verdict, certificate and stats."""
    return _json.loads(_core._vertex_decomposition(complex, timeout, threads, cyclic_symmetry))


def verify_shelling(complex, certificate):
    return _core._verify_shelling(complex, _json.dumps(certificate))


def verify_shed_tree(complex, certificate):
    return _core._verify_shed_tree(complex, _json.dumps(certificate))


def reduced_homology(complex):
    """Betti numbers and torsion keyed by dimension, starting at -1."""
    raw = _json.loads(_core._reduced_homology(complex))
    return {
        "betti": {int(k): v for k, v in raw["betti"].items()},
        "torsion": {int(k): v for k, v in raw["torsion"].items()},
    }


def run_check(kind, descriptor, timeout=None, threads=1):
    """Same report as `lexshell check`, as a dict."""
    return _json.loads(_core._run_check(kind, descriptor, timeout, threads))


def run_suite(name, seed=20140101, deep=False, threads=1):
    """Same report as `lexshell suite`, as a dict."""
    return _json.loads(_core._run_suite(name, seed, deep, threads))
