"""
Constructive preimages.

Given a head variable x_j, substitute x_l = c_l e_1 for l != j and
x_j = c_j e_1 + sum_{i>=2} a_i e_i. With P = prod_l c_l^(d_l) the
closed-form evaluation collapses to

    P * (sum alpha) e_d + alpha_j * (P / c_j) * sum_{i>=2} a_i e_{i+d-1}

and each case solves these equations for the c_l and a_2, a_3, ... The values
P reaches are exactly the g-th powers, g = gcd(d_1, ..., d_m). Every
assignment is re-evaluated before it is returned.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Dict, Mapping, Optional, Union

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from core.algebra import AlgebraHandle
from core.exceptions import PreimageVerificationError
from core.images.classifier import Classification, ImageCase, analyse
from core.model.element import Element
from core.model.evaluation import evaluate
from core.scalars import Scalar
from core.terms.parser import format_polynomial
from core.terms.polynomial import FreePolynomial, MultiDegree


class NotInImageReason(str, Enum):
    WRONG_SUPPORT = "wrong_support"
    BETA_D_ZERO = "beta_d_zero"
    IDENTITY_NONZERO_TARGET = "identity_nonzero_target"


@dataclass(frozen=True)
class Assignment:
    values: Dict[int, Element]

    def format(self) -> str:
        return ", ".join(f"x{var} = {value.format()}" for var, value in sorted(self.values.items()))


@dataclass(frozen=True)
class NotInImage:
    reason: NotInImageReason
    detail: str = ""


@dataclass(frozen=True)
class NeedsRoot:
    """
    value is not an exponent-th power in the field, so no witness exists there.

    exponent is the gcd of the multiplicities.
    """

    exponent: int
    value: Scalar


PreimageResult = Union[Assignment, NotInImage, NeedsRoot]


def root_exponent(multidegree: MultiDegree) -> int:
    """gcd of the multiplicities: P = prod c_l^(d_l) ranges over the g-th powers."""
    return gcd(*(mult for _, mult in multidegree.entries))


def spread_exponents(multidegree: MultiDegree, head: int) -> Dict[int, int]:
    """
    Integers k_l with sum k_l d_l = gcd(d_1, ..., d_m).

    The head variable gets k_j = 1 and the others 0 whenever d_j already is
    the gcd. Setting c_l = r^(k_l) then gives P = r^g.
    """
    exponents = {head: 1}
    reached = multidegree.multiplicity(head)
    for var, mult in multidegree.entries:
        if var == head:
            continue
        if mult % reached == 0:
            exponents[var] = 0
            continue
        s, t, reached = (int(value) for value in igcdex(reached, mult))
        exponents = {v: k * s for v, k in exponents.items()}
        exponents[var] = t
    return exponents


def build_witness(
    classification: Classification,
    target: Element,
    a1: Scalar,
    leading: Optional[Mapping[int, Scalar]] = None,
) -> Assignment:
    """
    The substitution for a chosen leading coefficient a_1 of the head variable.

    leading gives the e_1 coefficients c_l of the other variables (default 1).
    The tail is solved from the target; the e_d equation is left to the caller.
    """
    head = classification.head
    j = classification.head_variable
    field = target.field
    algebra = target.algebra
    d = head.degree
    scales = {var: field.one for var in head.multidegree.variables}
    scales.update(leading or {})
    scales[j] = a1

    divisor = classification.head_alpha
    for var, mult in head.multidegree.entries:
        divisor *= field.power(scales[var], mult - 1 if var == j else mult)

    coeffs = {1: a1}
    for index, beta in target.items():
        if index > d:
            coeffs[index - d + 1] = field.div(beta, divisor)
    values = {
        var: Element.basis(algebra, field, 1).scale(scale)
        for var, scale in scales.items()
        if var != j
    }
    values[j] = Element(algebra, field, coeffs)
    return Assignment(values)


def _zero_assignment(classification: Classification, target: Element) -> Assignment:
    return Assignment(
        {
            var: Element.zero(target.algebra, target.field)
            for var in classification.polynomial.variables()
        }
    )


def _verified(f: FreePolynomial, assignment: Assignment, target: Element) -> Assignment:
    value = evaluate(f, assignment.values, target.algebra)
    if value != target:
        raise PreimageVerificationError(
            f"Assignment {assignment.format()} evaluates to {value.format()}, "
            f"expected {target.format()}",
            details={"polynomial": format_polynomial(f), "target": target.format()},
        )
    return assignment


def preimage_from(classification: Classification, target: Element) -> PreimageResult:
    """preimage for an already computed classification."""
    f = classification.polynomial
    f.field.check_same(target.field)
    classification.algebra.check_same(target.algebra)
    field = target.field

    if target.is_zero:
        return _verified(f, _zero_assignment(classification, target), target)
    if classification.case is ImageCase.IDENTITY:
        return NotInImage(
            NotInImageReason.IDENTITY_NONZERO_TARGET, "the polynomial is an identity"
        )

    d = classification.degree
    lowest = target.lowest_index()
    if classification.case is ImageCase.SUM_ZERO:
        if lowest < d + 1:
            return NotInImage(
                NotInImageReason.WRONG_SUPPORT, f"target must lie in L^{d + 1}"
            )
        # a_1 only enters through a_1^(d_j - 1); zero keeps multilinear witnesses sparse.
        d_j = classification.multidegree.multiplicity(classification.head_variable)
        a1 = field.zero if d_j == 1 else field.one
        return _verified(f, build_witness(classification, target, a1), target)

    if lowest < d:
        return NotInImage(NotInImageReason.WRONG_SUPPORT, f"target must lie in L^{d}")
    beta_d = target.coefficient(d)
    total = classification.head.total

    if classification.case is ImageCase.LINEAR_HEAD:
        a1 = field.div(beta_d, total)
        return _verified(f, build_witness(classification, target, a1), target)

    if not beta_d:
        return NotInImage(
            NotInImageReason.BETA_D_ZERO,
            f"nonzero image points have a nonzero e{d} coefficient",
        )
    j = classification.head_variable
    value = field.div(beta_d, total)
    roots = field.roots(value, classification.multidegree.multiplicity(j))
    if roots:
        return _verified(f, build_witness(classification, target, roots[0]), target)
    g = root_exponent(classification.multidegree)
    roots = field.roots(value, g)
    if not roots:
        return NeedsRoot(g, value)
    # Spread the g-th root over every variable so that P = root^g.
    leading = {
        var: field.power(roots[0], k)
        for var, k in spread_exponents(classification.multidegree, j).items()
    }
    return _verified(f, build_witness(classification, target, leading[j], leading), target)


def preimage(f: FreePolynomial, algebra: AlgebraHandle, target: Element) -> PreimageResult:
    """
    Decide whether target lies in the image of f and construct a witness.

    Returns:
        Assignment: verified substitution with evaluate(f, assignment) == target
        NotInImage: with a machine-readable reason
        NeedsRoot: a root of the given exponent is missing from the field
    """
    return preimage_from(analyse(f, algebra), target)
