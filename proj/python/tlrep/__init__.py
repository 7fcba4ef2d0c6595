"""Indecomposable modules of the (dilute) Temperley-Lieb algebras at roots of unity."""

import json

from ._tlrep import (
    DomainError,
    ParseError,
    cover,
    dual,
    ext,
    factors,
    hom,
    hull,
    ind,
    indecomposables,
    loewy,
    normalize,
    normalize_json,
    orbits,
    quiver_dot,
    quiver_json,
    res,
    verify,
)


def quiver(family, n, ell, k, show_tau=True):
    """AR quiver of the block containing k, as a dict."""
    return json.loads(quiver_json(family, n, ell, k, show_tau))


def summands(family, n, ell, spec):
    """Normalized summands of a module spec, as a list of dicts."""
    return json.loads(normalize_json(family, n, ell, spec))["summands"]


__all__ = [
    "DomainError", "ParseError", "cover", "dual", "ext", "factors", "hom", "hull", "ind",
    "indecomposables", "loewy", "normalize", "normalize_json", "orbits", "quiver", "quiver_dot",
    "quiver_json", "res", "summands", "verify",
]
