"""
Cross-check of the image classifier against exhaustive search over F_p.

Inclusion (image inside the realized descriptor) is always checked. Exact
equality is claimed only when the divisors the constructions use (every
nonzero alpha_j and a nonzero alpha sum) stay nonzero modulo p. Descriptors
that need an algebraically closed field are compared through the split of the
image by the e_d coefficient instead.

f is first scaled to its primitive integer multiple, so rational
coefficients whose denominators vanish modulo p still reduce.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd, lcm
from typing import Any, Dict, Optional

import numpy as np
from sympy.polys.domains import QQ

from config.config_validator import OracleConfig
from config.logging_config import get_logger, log_with_context
from core.algebra import AlgebraHandle
from core.exceptions import DivisionByZeroError, UnsupportedFieldError
from core.images.classifier import Classification, analyse
from core.images.descriptor import ImageDescriptor, ImageKind
from core.oracle.brute_force import ImageSet, brute_force_image
from core.scalars import ScalarField
from core.terms.parser import format_polynomial
from core.terms.polynomial import FreePolynomial

logger = get_logger(__name__)


class EqualityMode(str, Enum):
    EXACT = "exact"
    SPLIT_ONLY = "split_only"
    SKIPPED_DIVISOR = "skipped_divisor"


@dataclass(frozen=True)
class CrossCheckReport:
    polynomial: str
    n: int
    p: int
    descriptor: ImageDescriptor
    reduced_descriptor: ImageDescriptor
    inclusion: bool
    equality: EqualityMode
    equality_holds: Optional[bool]
    divisor_ok: bool
    image_size: int

    @property
    def passed(self) -> bool:
        return self.inclusion and self.equality_holds is not False

    def to_json(self) -> Dict[str, Any]:
        return {
            "f": self.polynomial,
            "n": self.n,
            "p": self.p,
            "descriptor": self.descriptor.to_json(),
            "inclusion": self.inclusion,
            "equality": self.equality.value,
            "equality_holds": self.equality_holds,
            "divisor_ok": self.divisor_ok,
            "image_size": self.image_size,
            "reduced_descriptor": self.reduced_descriptor.to_json(),
        }


def divisors_survive(classification: Classification, p: int) -> bool:
    """True when every coefficient, nonzero alpha_j and nonzero alpha sum stays nonzero mod p."""
    target = ScalarField.prime(p)
    field = classification.polynomial.field
    try:
        for _, coeff in classification.polynomial.items():
            field.reduce_to(coeff, target)
        if classification.head is None:
            return True
        values = [a for _, a in classification.head.alphas if a]
        if classification.head.total:
            values.append(classification.head.total)
        return all(field.reduce_to(value, target) for value in values)
    except DivisionByZeroError:
        return False


def primitive_part(f: FreePolynomial) -> FreePolynomial:
    """
    Rational multiple of f with coprime integer coefficients.

    A nonzero scalar multiple has the same image descriptor, and its
    reduction modulo any prime is defined.
    """
    if f.is_zero:
        return f
    coeffs = [coeff for _, coeff in f.items()]
    denominator = lcm(*(int(QQ.denom(c)) for c in coeffs))
    numerator = gcd(*(int(QQ.numer(c)) * (denominator // int(QQ.denom(c))) for c in coeffs))
    return f.scale(f.field.from_ratio(denominator, numerator))


def included(image: ImageSet, descriptor: ImageDescriptor) -> bool:
    """Every image point lies in the realized descriptor."""
    coords = image.coordinates()
    nonzero = coords.any(axis=1)
    if descriptor.kind is ImageKind.ZERO:
        return not nonzero.any()
    below = coords[:, : descriptor.index - 1].any(axis=1)
    if descriptor.kind is ImageKind.POWER_IDEAL:
        return not below.any()
    leading = coords[:, descriptor.index - 1] != 0
    return bool(np.all(~nonzero | (~below & leading)))


def split_holds(image: ImageSet, d: int) -> bool:
    """
    Nonzero points have a nonzero e_d coefficient, and each value reached on
    e_d carries its full fibre value * e_d + L^{d+1}.
    """
    coords = image.coordinates()
    nonzero = coords.any(axis=1)
    leading = coords[:, d - 1]
    if np.any(nonzero & (leading == 0)):
        return False
    fibre = image.p ** (image.n - d)
    _, counts = np.unique(leading[leading != 0], return_counts=True)
    return bool(np.all(counts == fibre))


def cross_check(
    f: FreePolynomial, n: int, p: int, oracle: Optional[OracleConfig] = None
) -> CrossCheckReport:
    """
    Compare classify(f) on L_n with the exhaustive image over F_p.

    The divisor test runs on the primitive multiple of f, which is also the
    polynomial reduced for the exhaustive search.

    Returns:
        CrossCheckReport with inclusion, equality mode and outcome
    """
    if not f.field.is_rational:
        raise UnsupportedFieldError("Cross-checks classify over the rationals first")
    algebra = AlgebraHandle.finite(n)
    classification = analyse(f, algebra)
    scaled = analyse(primitive_part(f), algebra)
    reduced = scaled.polynomial.map_field(ScalarField.prime(p))
    image = brute_force_image(reduced, n, p, oracle)
    divisor_ok = divisors_survive(scaled, p)
    reference = (
        classification.descriptor if divisor_ok else analyse(reduced, algebra).descriptor
    )

    inclusion = included(image, reference)
    if not divisor_ok:
        mode, holds = EqualityMode.SKIPPED_DIVISOR, None
    elif reference.closure_required:
        mode, holds = EqualityMode.SPLIT_ONLY, inclusion and split_holds(image, reference.index)
    else:
        mode = EqualityMode.EXACT
        holds = inclusion and len(image) == reference.size_over(p)

    report = CrossCheckReport(
        polynomial=format_polynomial(f),
        n=n,
        p=p,
        descriptor=classification.descriptor,
        reduced_descriptor=reference,
        inclusion=inclusion,
        equality=mode,
        equality_holds=holds,
        divisor_ok=divisor_ok,
        image_size=len(image),
    )
    if not report.passed:
        log_with_context(
            logger, "warning", "Classifier disagrees with exhaustive image", **report.to_json()
        )
    return report
