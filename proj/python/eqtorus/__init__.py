"""Torus-equivariant and intersection homology over Z, Q and F_p."""

from ._core import (
    ParseError,
    ValidationError,
    cartan,
    homology,
    ih,
    ih_equivariant,
    pullback,
    suite_names,
    verify,
)

__all__ = [
    "ParseError",
    "ValidationError",
    "cartan",
    "homology",
    "ih",
    "ih_equivariant",
    "pullback",
    "suite_names",
    "verify",
]
