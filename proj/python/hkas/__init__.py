"""Hierarchical key assignment schemes: access graphs, exact entropy checks, generators."""

import json

from ._hkas import (
    Error,
    Graph,
    Scheme,
    entropy,
    gen_correlated,
    gen_leaky,
    gen_random_correct,
    gen_trivial,
    run_cli,
)
from . import _hkas

__all__ = [
    "Error",
    "Graph",
    "Scheme",
    "check",
    "entropy",
    "gen_correlated",
    "gen_leaky",
    "gen_random_correct",
    "gen_trivial",
    "run_cli",
    "validate",
]


def check(scheme, mode="ki", exhaustive=False):
    """Run one check ("correctness", "ki", "ski" or "key-indep"); returns the report as a dict."""
    return json.loads(_hkas._check(scheme, mode, exhaustive))


def validate(schemes):
    """KI/SKI agreement and entropy identities over a list of schemes; returns the summary dict."""
    return json.loads(_hkas._validate(list(schemes)))
