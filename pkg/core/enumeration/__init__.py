"""
Canonical basis enumeration, dimensions and codimensions.
"""

from core.enumeration.catalog import (
    BasisCatalog,
    basis_monomials,
    dim_relatively_free,
    multilinear_codim,
    multilinear_words,
)

__all__ = [
    "BasisCatalog",
    "basis_monomials",
    "dim_relatively_free",
    "multilinear_codim",
    "multilinear_words",
]
