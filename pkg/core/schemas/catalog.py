# Schema definitions for enumeration results
# core/schemas/catalog.py

from pydantic import BaseModel, Field
from typing import Dict, List, Optional

from core.schemas.element import AlgebraDocument


class CatalogDocument(BaseModel):
    """Canonical word counts per degree of a relatively free algebra."""

    n: Optional[int] = Field(None, description="Dimension n, or null for L_inf")
    m: int = Field(..., ge=1, description="Number of variables")
    by_degree: Dict[str, int] = Field(..., description="Degree -> number of canonical words")
    unit: int = Field(default=1, ge=0, le=1, description="The unit in degree 0")
    total: int = Field(..., ge=1, description="Unit plus every counted word")
    words: Optional[Dict[str, List[str]]] = Field(
        None, description="Degree -> canonical words, only with --words"
    )


class DimensionDocument(BaseModel):
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    dim: int = Field(..., ge=1, description="Dimension of the relatively free algebra")


class CodimensionDocument(BaseModel):
    algebra: AlgebraDocument
    m: int = Field(..., ge=1)
    codim: int = Field(..., ge=0, description="Dimension of P_m modulo identities")
    words: List[str] = Field(default_factory=list, description="Canonical multilinear words")
