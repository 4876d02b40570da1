"""
Image descriptors: the possible shapes of the image of a polynomial.

    Zero              {0}
    PowerIdeal(k)     L^k = span{e_k, e_{k+1}, ...}
    PuncturedCone(d)  {0} together with every u in L^d whose e_d coefficient is nonzero

Descriptors are canonical: on L_n, PowerIdeal(k > n) and PuncturedCone(d > n)
become Zero and PuncturedCone(n) becomes PowerIdeal(n).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from core.algebra import AlgebraHandle
from core.exceptions import InvalidArgumentError
from core.model.element import Element


class ImageKind(str, Enum):
    ZERO = "zero"
    POWER_IDEAL = "power_ideal"
    PUNCTURED_CONE = "punctured_cone"


@dataclass(frozen=True)
class ImageDescriptor:
    """
    Canonical image shape on one algebra.

    closure_required marks images whose surjectivity statement needs an
    algebraically closed field: every punctured cone, and the power ideal
    L^n obtained by canonicalizing PuncturedCone(n).
    """

    kind: ImageKind
    algebra: AlgebraHandle
    index: Optional[int] = None
    closure_required: bool = False

    @classmethod
    def zero(cls, algebra: AlgebraHandle) -> "ImageDescriptor":
        return cls(ImageKind.ZERO, algebra)

    @classmethod
    def power_ideal(
        cls, algebra: AlgebraHandle, k: int, closure_required: bool = False
    ) -> "ImageDescriptor":
        if k < 1:
            raise InvalidArgumentError(f"Power ideal index must be >= 1, got {k}")
        if algebra.is_finite and k > algebra.n:
            return cls.zero(algebra)
        return cls(ImageKind.POWER_IDEAL, algebra, k, closure_required)

    @classmethod
    def punctured_cone(cls, algebra: AlgebraHandle, d: int) -> "ImageDescriptor":
        if d < 1:
            raise InvalidArgumentError(f"Cone degree must be >= 1, got {d}")
        if algebra.is_finite and d >= algebra.n:
            # {0} with nonzero multiples of e_n is the line span{e_n}.
            return cls.power_ideal(algebra, d, closure_required=True)
        return cls(ImageKind.PUNCTURED_CONE, algebra, d, True)

    @property
    def k(self) -> Optional[int]:
        return self.index if self.kind is ImageKind.POWER_IDEAL else None

    @property
    def d(self) -> Optional[int]:
        return self.index if self.kind is ImageKind.PUNCTURED_CONE else None

    @property
    def is_subspace(self) -> bool:
        return self.kind is not ImageKind.PUNCTURED_CONE

    def contains(self, element: Element) -> bool:
        return realize(self, element)

    def size_over(self, p: int) -> Optional[int]:
        """Number of points of the realized set over F_p (L_n only)."""
        if not self.algebra.is_finite:
            return None
        n = self.algebra.n
        if self.kind is ImageKind.ZERO:
            return 1
        if self.kind is ImageKind.POWER_IDEAL:
            return p ** (n - self.index + 1)
        return 1 + (p - 1) * p ** (n - self.index)

    @property
    def label(self) -> str:
        if self.kind is ImageKind.ZERO:
            return "zero"
        if self.kind is ImageKind.POWER_IDEAL:
            text = f"power_ideal k={self.index}"
        else:
            text = f"punctured_cone d={self.index}"
        return f"{text} (closure required)" if self.closure_required else text

    def to_json(self) -> Dict[str, Any]:
        if self.kind is ImageKind.ZERO:
            return {"kind": "zero"}
        if self.kind is ImageKind.POWER_IDEAL:
            document: Dict[str, Any] = {"kind": "power_ideal", "k": self.index}
            if self.closure_required:
                document["closure_required"] = True
            return document
        return {"kind": "punctured_cone", "d": self.index, "closure_required": True}


def realize(descriptor: ImageDescriptor, element: Element) -> bool:
    """Membership of element in the set the descriptor denotes."""
    descriptor.algebra.check_same(element.algebra)
    lowest = element.lowest_index()
    if lowest is None:
        return True
    if descriptor.kind is ImageKind.ZERO:
        return False
    if descriptor.kind is ImageKind.POWER_IDEAL:
        return lowest >= descriptor.index
    return lowest == descriptor.index
