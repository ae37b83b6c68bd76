"""Exact computations on nilpotent Lie algebras over the rationals."""

from ._carnot import (
    CarnotError,
    LieAlgebra,
    ParseError,
    UnknownCatalogEntry,
    catalog_names,
    center_dim,
    declared_layers,
    derivation_dim,
    g0_dim,
    homogeneous_dimension,
    is_stratifiable,
    jacobi_violations,
    lower_central_series,
    nilpotentisation,
    prolong,
    report,
    ultrarigidity,
)

__all__ = [
    "CarnotError",
    "LieAlgebra",
    "ParseError",
    "UnknownCatalogEntry",
    "catalog_names",
    "center_dim",
    "declared_layers",
    "derivation_dim",
    "g0_dim",
    "homogeneous_dimension",
    "is_stratifiable",
    "jacobi_violations",
    "lower_central_series",
    "nilpotentisation",
    "prolong",
    "report",
    "ultrarigidity",
]
