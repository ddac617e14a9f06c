"""Finite-dimensional quiver algebras: homological invariants and tilting."""

from ._quiverfg import (
    Algebra,
    Module,
    QuiverError,
    admissible_sequence,
    catalog,
    catalog_names,
    ext_dims,
    fg_verdict,
    gorenstein,
    hh_dims,
    is_nakayama,
    is_tilting,
    load_algebra,
    module,
    parse_algebra,
    run,
)

__all__ = [
    "Algebra",
    "Module",
    "QuiverError",
    "admissible_sequence",
    "catalog",
    "catalog_names",
    "ext_dims",
    "fg_verdict",
    "gorenstein",
    "hh_dims",
    "is_nakayama",
    "is_tilting",
    "load_algebra",
    "module",
    "parse_algebra",
    "run",
]
