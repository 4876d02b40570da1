"""
Image classification of multihomogeneous polynomials.

With alpha_j the head coefficients of the normal form, d the total degree and
d_j the multiplicity of x_j:

    normal form zero                        -> {0}
    sum alpha_j = 0                         -> L^{d+1}
    some j with d_j = 1 and alpha_j != 0    -> L^d
    otherwise                               -> {0} with K* e_d + L^{d+1}

The last shape is a subspace only over an algebraically closed field when
d = n, and never when d < n.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional

from core.algebra import AlgebraHandle
from core.exceptions import NotHomogeneousError
from core.images.descriptor import ImageDescriptor
from core.model.element import Element
from core.rewrite.normal_form import HeadCoefficients, NormalFormPoly, head_coefficients, reduce
from core.scalars import Scalar
from core.terms.polynomial import FreePolynomial, MultiDegree, multidegree_of


class ImageCase(str, Enum):
    IDENTITY = "identity"
    SUM_ZERO = "sum_zero"
    LINEAR_HEAD = "linear_head"
    CONE = "cone"


@dataclass(frozen=True)
class Classification:
    """Everything the classifier derived on the way to a descriptor."""

    polynomial: FreePolynomial
    algebra: AlgebraHandle
    case: ImageCase
    descriptor: ImageDescriptor
    normal_form: Optional[NormalFormPoly] = None
    head: Optional[HeadCoefficients] = None
    head_variable: Optional[int] = None
    head_alpha: Optional[Scalar] = None

    @property
    def multidegree(self) -> Optional[MultiDegree]:
        return self.head.multidegree if self.head else None

    @property
    def degree(self) -> Optional[int]:
        return self.head.degree if self.head else None

    @property
    def closure_required(self) -> bool:
        return self.descriptor.closure_required

    @property
    def is_subspace(self) -> bool:
        """Vector-space criterion: false exactly for the cone case below degree n."""
        return self.descriptor.is_subspace


def _first_nonzero(head: HeadCoefficients, candidates) -> Optional[int]:
    return next((v for v in candidates if head.alpha(v)), None)


def analyse(f: FreePolynomial, algebra: AlgebraHandle) -> Classification:
    """
    Classify f and keep the intermediate data.

    The zero polynomial is treated as an identity. Works over any field; the
    image theorems themselves assume an infinite one.

    Raises:
        NotHomogeneousError: f mixes multidegrees
    """
    if f.is_zero:
        return Classification(f, algebra, ImageCase.IDENTITY, ImageDescriptor.zero(algebra))
    if multidegree_of(f) is None:
        raise NotHomogeneousError(
            "Image classification needs a multihomogeneous polynomial",
            details={"algebra": algebra.spec},
        )
    nf = reduce(f, algebra)
    head = head_coefficients(nf)
    if nf.is_zero or head.vanishes:
        return Classification(
            f, algebra, ImageCase.IDENTITY, ImageDescriptor.zero(algebra), nf, head
        )

    d = head.degree
    variables = head.multidegree.variables
    at_top = algebra.is_finite and d == algebra.n

    if not head.total:
        j = _first_nonzero(head, variables)
        return Classification(
            f, algebra, ImageCase.SUM_ZERO, ImageDescriptor.power_ideal(algebra, d + 1),
            nf, head, j, head.alpha(j),
        )

    if at_top and head.linear_variables:
        # All head words coincide in degree n, so any linear variable can carry the mass.
        j = head.linear_variables[0]
        return Classification(
            f, algebra, ImageCase.LINEAR_HEAD, ImageDescriptor.power_ideal(algebra, d),
            nf, head, j, head.total,
        )
    j = _first_nonzero(head, head.linear_variables)
    if j is not None:
        return Classification(
            f, algebra, ImageCase.LINEAR_HEAD, ImageDescriptor.power_ideal(algebra, d),
            nf, head, j, head.alpha(j),
        )

    j = _first_nonzero(head, variables)
    return Classification(
        f, algebra, ImageCase.CONE, ImageDescriptor.punctured_cone(algebra, d),
        nf, head, j, head.alpha(j),
    )


def classify(f: FreePolynomial, algebra: AlgebraHandle) -> ImageDescriptor:
    """The canonical image descriptor of a multihomogeneous polynomial."""
    return analyse(f, algebra).descriptor


def closed_form_evaluation(
    head: HeadCoefficients,
    assignment: Mapping[int, Element],
    algebra: AlgebraHandle,
) -> Element:
    """
    Evaluate a multihomogeneous normal form from its head coefficients.

    With x_l = sum_i a_{i,l} e_i and b_l = a_{1,l}:

        f = sum_j alpha_j * prod_l b_l^(d_l - [l = j]) * sum_i a_{i,j} e_{i+d-1}

    whose e_d coefficient is prod_l b_l^(d_l) * sum_j alpha_j.
    """
    field = head.field
    total = Element.zero(algebra, field)
    for var, alpha in head.alphas:
        if not alpha:
            continue
        factor = alpha
        for other, mult in head.multidegree.entries:
            exponent = mult - 1 if other == var else mult
            factor = factor * assignment[other].coefficient(1) ** exponent
        total = total + assignment[var].shift(head.degree - 1).scale(factor)
    return total
