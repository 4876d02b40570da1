"""
Pydantic models of every JSON document the command line emits.
"""

from core.schemas.catalog import CatalogDocument, CodimensionDocument, DimensionDocument
from core.schemas.command_response import (
    ClassifyDocument,
    CrossCheckDocument,
    ErrorDocument,
    EvalDocument,
    HeadDocument,
    IdentityDocument,
    PreimageDocument,
    ReduceDocument,
    RootModuloDocument,
    SuiteDocument,
    VerifyDocument,
)
from core.schemas.descriptor import (
    DescriptorDocument,
    PowerIdealDescriptorDocument,
    PuncturedConeDescriptorDocument,
    ZeroDescriptorDocument,
)
from core.schemas.element import AlgebraDocument, ElementDocument, FiniteAlgebraDocument

__all__ = [
    "AlgebraDocument",
    "CatalogDocument",
    "ClassifyDocument",
    "CodimensionDocument",
    "CrossCheckDocument",
    "DescriptorDocument",
    "DimensionDocument",
    "ElementDocument",
    "ErrorDocument",
    "EvalDocument",
    "FiniteAlgebraDocument",
    "HeadDocument",
    "IdentityDocument",
    "PowerIdealDescriptorDocument",
    "PreimageDocument",
    "PuncturedConeDescriptorDocument",
    "ReduceDocument",
    "RootModuloDocument",
    "SuiteDocument",
    "VerifyDocument",
    "ZeroDescriptorDocument",
]
