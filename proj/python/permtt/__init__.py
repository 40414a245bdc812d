"""Exact checks for permutation modules, residue complexes and residual regularity."""

import json

from . import _core
from ._core import DEFAULT_MAX_ORDER, DescriptorError, OrderCapExceeded, group_order, hom_dimension

__all__ = [
    "DEFAULT_MAX_ORDER",
    "DescriptorError",
    "OrderCapExceeded",
    "census",
    "classify",
    "closed_points",
    "group_order",
    "hom_dimension",
    "run_cli",
    "trichotomy",
    "verify_residue",
    "verify_separable",
]


def classify(group, p, max_order=DEFAULT_MAX_ORDER):
    return json.loads(_core.classify(group, p, max_order))


def census(groups, primes, max_order=DEFAULT_MAX_ORDER):
    return json.loads(_core.census(list(groups), list(primes), max_order))


def closed_points(group, p, max_order=DEFAULT_MAX_ORDER):
    return json.loads(_core.closed_points(group, p, max_order))


def verify_residue(group, p):
    return json.loads(_core.verify_residue(group, p))


def verify_separable(group, p, max_order=DEFAULT_MAX_ORDER):
    return json.loads(_core.verify_separable(group, p, max_order))


def trichotomy(group, max_order=DEFAULT_MAX_ORDER):
    return json.loads(_core.trichotomy(group, max_order))


def run_cli(*args):
    """Runs the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
