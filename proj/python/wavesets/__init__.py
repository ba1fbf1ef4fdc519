"""Exact dyadic wavelet sets in one and two dimensions.

Sets are passed and returned as literals of the set grammar, e.g. ``"[-2pi,-pi) | [pi,2pi)"``.
Reports are plain dicts with ``"schema": 1``; rationals are ``"p/q"`` strings.
"""

from fractions import Fraction

from ._wavesets import (
    SCHEMA,
    DomainError,
    ParseError,
    ResourceError,
    canonical,
    catalog_get,
    catalog_list,
    check,
    domain,
    fuzz,
    lemma5,
    measure,
    pair,
    render_1d,
    render_2d,
    sigma,
    sigma_eval,
    sigma_image,
)


def rational(text: str) -> Fraction:
    """A "p/q" string from a report as a Fraction."""
    return Fraction(text)


def is_wavelet_set(expr: str) -> bool:
    return check(expr)["is_wavelet_set"]


__all__ = [
    "SCHEMA",
    "DomainError",
    "ParseError",
    "ResourceError",
    "canonical",
    "catalog_get",
    "catalog_list",
    "check",
    "domain",
    "fuzz",
    "is_wavelet_set",
    "lemma5",
    "measure",
    "pair",
    "rational",
    "render_1d",
    "render_2d",
    "sigma",
    "sigma_eval",
    "sigma_image",
]
