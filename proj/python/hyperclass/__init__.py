"""Exact classification of algebraic Appell-Lauricella and Horn hypergeometric
functions.

Thin convenience layer over the C++ extension: the heavy operations return
JSON text, decoded here into plain dictionaries.
"""

import json as _json

from hyperclass._core import (  # noqa: F401
    InputError,
    HyperclassError,
    check_json,
    classify_csv,
    classify_json,
    family_json,
    gauss_is_algebraic,
    gauss_triple_kind,
    interlace_json,
    reference_csv,
    reference_table_ids,
    schwarz_csv,
    signature,
    type2_count,
    verify,
    volume,
)


def check(family, params, n=2, full_k_report=False):
    """Non-resonance / algebraicity report for one parameter tuple."""
    return _json.loads(check_json(family, n, [str(p) for p in params], full_k_report))


def family(name, n=2):
    """Combinatorial data of the family (points, facets, volume, ...)."""
    return _json.loads(family_json(name, n))


def interlace(name, n=2):
    """Derived maximal-signature floor vectors with witnesses."""
    return _json.loads(interlace_json(name, n))


def classify(name, n=2, max_family_denominator=24):
    """Full solution set of the family as a dictionary."""
    return _json.loads(classify_json(name, n, max_family_denominator))
