# Copyright 2026 The mseq Authors
# SPDX-License-Identifier: Apache-2.0
"""Exact crosscorrelation spectra of decimated m-sequences."""

import json

from ._mseq import (
    MseqError,
    catalog_ids,
    kloosterman,
    kloosterman_R,
    niho_values,
    resolve_fraction,
    set_threads,
    trace_sequence,
)
from . import _mseq

__all__ = [
    "MseqError",
    "catalog_ids",
    "field",
    "kloosterman",
    "kloosterman_R",
    "niho_values",
    "resolve_fraction",
    "set_threads",
    "spectrum",
    "trace_sequence",
    "verify",
    "weight_distribution",
]


def field(p, n):
    """Canonical primitive polynomial of GF(p^n) as a dict."""
    return json.loads(_mseq.field_json(p, n))


def spectrum(p, n, d, method="fast"):
    """Spectrum of C_d as {value: count}.

    Integer values are Python ints; any other value is a tuple of its
    coordinates in the basis 1, w, ..., w^{p-2}.
    """
    table = json.loads(_mseq.spectrum_json(p, n, d, method))
    out = {}
    for entry in table["entries"]:
        value = entry["value"]
        key = value if isinstance(value, int) else tuple(value["coords"])
        out[key] = entry["count"]
    return out


def verify(family, p, n, **params):
    """Verdict record for one catalog family at (p, n, params)."""
    return json.loads(_mseq.verify_json(family, p, n, params))


def weight_distribution(p, n, d):
    """{weight: number of codewords} of the two-nonzero cyclic code."""
    data = json.loads(_mseq.weights_json(p, n, d))
    return {w["w"]: w["count"] for w in data["weights"]}
