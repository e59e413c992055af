"""Brane tilings, Kasteleyn determinants and toric Calabi-Yau data.

Functions taking a ``source`` accept a built-in fixture name (see
``fixture_names()``) or the JSON text of a quiver or map document.
"""

import json

from . import _core
from ._core import (
    TilingForgeError,
    determinant,
    dualize,
    fixture_document,
    fixture_names,
    genus,
    isomorphic,
    klein_j,
    matching_count,
    modulus,
    mutate,
    passport,
    pe,
    pl,
    rcharges,
    same_polygon,
    sample_curve,
    series,
    tau_reduce,
    toric_diagram,
    validate,
)

__all__ = [
    "TilingForgeError",
    "determinant",
    "dualize",
    "fixture_document",
    "fixture_names",
    "genus",
    "isomorphic",
    "klein_j",
    "matching_count",
    "modulus",
    "mutate",
    "passport",
    "pe",
    "pipeline",
    "pl",
    "rcharges",
    "same_polygon",
    "sample_curve",
    "series",
    "tau_reduce",
    "toric_diagram",
    "validate",
]


def pipeline(source, mutate_node=None, check_invariance=False):
    """Run every stage; returns (ok, report dict, summary text)."""
    ok, report, summary = _core.pipeline(source, mutate_node, check_invariance)
    return ok, json.loads(report), summary
