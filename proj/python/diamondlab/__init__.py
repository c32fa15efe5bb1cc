"""Exact Lubell, pattern, graph-invariant and certificate computations.

Rationals come back as fractions.Fraction; families are (n, list of element lists).
"""

import json

from . import _core
from ._core import (
    DiamondlabError,
    binomial,
    c_weight,
    class_names,
    dstar,
    e_value,
    f_value,
    f_value_of_family,
    find_pattern,
    format_family,
    g_claimed_max,
    g_eval,
    gamma,
    is_diamond_free,
    la,
    lubell,
    lubell_star,
    middle_layers,
    parse_family,
    psi_census,
    subgraph_census,
    worst_case_f,
)

__all__ = [
    "DiamondlabError",
    "binomial",
    "c_weight",
    "class_names",
    "dstar",
    "e_value",
    "f_value",
    "f_value_of_family",
    "find_pattern",
    "format_family",
    "g_claimed_max",
    "g_eval",
    "gamma",
    "is_diamond_free",
    "la",
    "lemma3_scan",
    "lubell",
    "lubell_star",
    "middle_layers",
    "parse_family",
    "psi_census",
    "subgraph_census",
    "verify_fh",
    "verify_lemma2",
    "verify_sq_identity",
    "verify_tables",
    "worst_case_f",
]


def _reports(text):
    data = json.loads(text)
    return data if isinstance(data, list) else [data]


def verify_lemma2(**kwargs):
    return _reports(_core.verify_lemma2(**kwargs))


def verify_fh(**kwargs):
    return _reports(_core.verify_fh(**kwargs))


def verify_sq_identity(**kwargs):
    return _reports(_core.verify_sq_identity(**kwargs))


def verify_tables(which="all"):
    return _reports(_core.verify_tables(which))


def lemma3_scan(**kwargs):
    return _reports(_core.lemma3_scan(**kwargs))
