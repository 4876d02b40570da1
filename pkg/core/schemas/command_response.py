# Schema definitions for CLI command documents
# core/schemas/command_response.py
#
# Every --format json result re-parses under one of these models.

from pydantic import BaseModel, Field
from typing import Any, Dict, List, Literal, Optional

from core.schemas.descriptor import DescriptorDocument
from core.schemas.element import AlgebraDocument, ElementDocument


FieldSpec = str
ImageCaseType = Literal["identity", "sum_zero", "linear_head", "cone"]
PreimageStatus = Literal["assignment", "not_in_image", "needs_root"]
EqualityType = Literal["exact", "split_only", "skipped_divisor"]


class HeadDocument(BaseModel):
    """Head coefficients of a multihomogeneous normal form"""

    multidegree: Dict[str, int] = Field(..., description="Variable index -> multiplicity")
    degree: int = Field(..., ge=1, description="Total degree d")
    alphas: Dict[str, str] = Field(..., description="Variable index -> alpha_j")
    sum: str = Field(..., description="Sum of all alpha_j")
    linear_variables: List[int] = Field(default_factory=list, description="Variables with d_j = 1")


class ReduceDocument(BaseModel):
    algebra: AlgebraDocument
    field: FieldSpec = Field(..., description='"q" or "fp:P"')
    input: str = Field(..., description="Polynomial as parsed, in canonical text")
    left_normed: str = Field(..., description="Left-normed expansion")
    rule_applications: int = Field(..., ge=0, description="Leibniz rewrite steps taken")
    normal_form: str = Field(..., description="Canonical normal form on the algebra")
    is_identity: bool = Field(..., description="The normal form is zero")
    head: Optional[HeadDocument] = Field(None, description="Only for multihomogeneous input")


class IdentityDocument(BaseModel):
    algebra: AlgebraDocument
    polynomial: str
    is_identity: bool = Field(..., description="Decided by the normal form")
    oracle: bool = Field(..., description="Decided by generic evaluation")
    agree: bool


class ClassifyDocument(BaseModel):
    algebra: AlgebraDocument
    field: FieldSpec
    polynomial: str
    case: ImageCaseType
    descriptor: DescriptorDocument
    label: str = Field(..., description="Human-readable descriptor, e.g. L^3")
    is_subspace: bool
    closure_required: bool
    head_variable: Optional[int] = None
    head: Optional[HeadDocument] = None


class RootModuloDocument(BaseModel):
    p: int = Field(..., ge=2, description="Prime at which the root exists")
    root: str


class PreimageDocument(BaseModel):
    algebra: AlgebraDocument
    field: FieldSpec
    polynomial: str
    target: ElementDocument
    status: PreimageStatus
    assignment: Optional[Dict[str, ElementDocument]] = Field(
        None, description='Variable name ("x1") -> element, when status is assignment'
    )
    reason: Optional[str] = Field(None, description="NotInImage reason tag")
    detail: Optional[str] = None
    exponent: Optional[int] = Field(None, ge=1, description="Root degree that is missing")
    value: Optional[str] = Field(None, description="Value whose root is missing")
    root_modulo: Optional[RootModuloDocument] = Field(
        None, description="A prime field where the missing root exists"
    )


class EvalDocument(BaseModel):
    algebra: AlgebraDocument
    field: FieldSpec
    polynomial: str
    assignment: Dict[str, ElementDocument]
    value: ElementDocument
    text: str


class CrossCheckDocument(BaseModel):
    f: str
    n: int = Field(..., ge=1)
    p: int = Field(..., ge=2)
    descriptor: DescriptorDocument
    inclusion: bool
    equality: EqualityType
    equality_holds: Optional[bool] = Field(None, description="null when equality is skipped")
    divisor_ok: bool
    image_size: int = Field(..., ge=1)
    reduced_descriptor: DescriptorDocument


class SuiteDocument(BaseModel):
    name: str
    passed: bool
    checked: int = Field(..., ge=0, description="Number of individual checks run")
    skipped: int = Field(default=0, ge=0)
    failures: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)


class VerifyDocument(BaseModel):
    seed: int
    passed: bool
    suites: List[SuiteDocument]
    error: Optional[str] = Field(None, description="verification_failed when a suite fails")


class ErrorDocument(BaseModel):
    """Structured error emitted on stdout in JSON mode"""

    error: str = Field(..., description="Machine-readable error tag, e.g. parse_error")
    message: str
    details: Optional[Dict[str, Any]] = None
