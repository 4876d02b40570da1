"""
Algebra handles: the finite null-filiform algebra L_n or the infinite L_inf.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Union

from core.exceptions import AlgebraMismatchError, InvalidArgumentError


@dataclass(frozen=True)
class AlgebraHandle:
    """
    Identifies the target algebra.

    n is the dimension of L_n; None stands for L_inf (e_i e_1 = e_{i+1} for all i).
    """

    n: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n is not None and self.n < 1:
            raise InvalidArgumentError(
                f"Algebra dimension must be >= 1, got {self.n}", details={"n": self.n}
            )

    @classmethod
    def finite(cls, n: int) -> "AlgebraHandle":
        return cls(n)

    @classmethod
    def infinite(cls) -> "AlgebraHandle":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "AlgebraHandle":
        """Parse the CLI form: a positive integer or "inf"."""
        value = text.strip().lower()
        if value in ("inf", "infinity", "l_inf"):
            return cls.infinite()
        if not value.isdigit():
            raise InvalidArgumentError(
                f"Unknown algebra '{text}', expected a positive integer or 'inf'",
                details={"algebra": text},
            )
        return cls.finite(int(value))

    @property
    def is_finite(self) -> bool:
        return self.n is not None

    @property
    def spec(self) -> str:
        return "inf" if self.n is None else str(self.n)

    @property
    def label(self) -> str:
        return "L_inf" if self.n is None else f"L_{self.n}"

    def keeps(self, index: int) -> bool:
        """Whether basis vector e_index exists (no truncation beyond e_n)."""
        return index >= 1 and (self.n is None or index <= self.n)

    def check_same(self, other: "AlgebraHandle") -> None:
        if self != other:
            raise AlgebraMismatchError(
                f"Cannot combine elements of {self.label} and {other.label}",
                details={"left": self.spec, "right": other.spec},
            )

    def to_json(self) -> Union[Dict[str, Any], str]:
        return "inf" if self.n is None else {"n": self.n}

    def __str__(self) -> str:
        return self.label
