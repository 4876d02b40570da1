# Schema definitions for algebra handles and elements
# core/schemas/element.py

from pydantic import BaseModel, Field
from typing import Dict, Literal, Union


class FiniteAlgebraDocument(BaseModel):
    n: int = Field(..., ge=1, description="Dimension of the null-filiform algebra L_n")


AlgebraDocument = Union[FiniteAlgebraDocument, Literal["inf"]]


class ElementDocument(BaseModel):
    """Element of L_n or L_inf: nonzero coefficients keyed by basis index."""

    algebra: AlgebraDocument = Field(..., description='{"n": N} or "inf"')
    coeffs: Dict[str, str] = Field(
        default_factory=dict,
        description='Basis index -> exact coefficient text (e.g. {"1": "1", "3": "2/5"})',
    )
