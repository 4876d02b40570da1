# Schema definitions for image descriptors
# core/schemas/descriptor.py

from pydantic import BaseModel, Field
from typing import Annotated, Literal, Union


class ZeroDescriptorDocument(BaseModel):
    kind: Literal["zero"] = "zero"


class PowerIdealDescriptorDocument(BaseModel):
    kind: Literal["power_ideal"] = "power_ideal"
    k: int = Field(..., ge=1, description="Image is L^k = span(e_k, ...)")
    closure_required: bool = Field(
        default=False,
        description="Surjectivity onto L^k needs roots that may lie outside the field",
    )


class PuncturedConeDescriptorDocument(BaseModel):
    kind: Literal["punctured_cone"] = "punctured_cone"
    d: int = Field(..., ge=1, description="Image is {0} together with K* e_d + L^(d+1)")
    closure_required: Literal[True] = True


DescriptorDocument = Annotated[
    Union[ZeroDescriptorDocument, PowerIdealDescriptorDocument, PuncturedConeDescriptorDocument],
    Field(discriminator="kind"),
]
