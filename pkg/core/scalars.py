"""
Exact Scalar Fields

Wraps the sympy ground domains QQ and GF(p) behind one small value object so
that every computation session carries exactly one field. Floating point never
appears anywhere in the engine.

Usage:
    from core.scalars import ScalarField

    q = ScalarField.rationals()
    half = q.parse("1/2")
    f5 = ScalarField.prime(5)
    f5.roots(f5.from_int(4), 2)   # [2, 3]
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator, List

from sympy import integer_nthroot, isprime
from sympy.polys.domains import GF, QQ

from core.exceptions import (
    DivisionByZeroError,
    FieldMismatchError,
    InvalidArgumentError,
    ParseError,
    UnsupportedFieldError,
)

# Domain element (QQ or GF(p)); sympy exposes no common public base class.
Scalar = Any

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")
_FIELD_SPEC_PATTERN = re.compile(r"^fp:(\d+)$")


@lru_cache(maxsize=None)
def _ground_domain(characteristic: int) -> Any:
    # One domain object per modulus keeps element classes interoperable.
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class ScalarField:
    """
    The ground field of a computation: exact rationals (characteristic 0) or F_p.

    Elements are sympy domain elements; this class owns construction,
    parsing, formatting and the few operations sympy does not phrase the way
    the engine needs (root search, reduction modulo p).
    """

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise InvalidArgumentError(
                f"Field characteristic must be 0 or a prime, got {self.characteristic}",
                details={"characteristic": self.characteristic},
            )

    @classmethod
    def rationals(cls) -> "ScalarField":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "ScalarField":
        return cls(p)

    @classmethod
    def parse_spec(cls, spec: str) -> "ScalarField":
        """
        Parse the CLI field flag.

        Args:
            spec: "q" for the rationals or "fp:P" for the prime field F_P

        Returns:
            ScalarField: The described field
        """
        text = spec.strip().lower()
        if text == "q":
            return cls.rationals()
        match = _FIELD_SPEC_PATTERN.match(text)
        if not match:
            raise InvalidArgumentError(
                f"Unknown field '{spec}', expected 'q' or 'fp:P'", details={"field": spec}
            )
        return cls.prime(int(match.group(1)))

    @property
    def spec(self) -> str:
        return "q" if self.is_rational else f"fp:{self.characteristic}"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def domain(self) -> Any:
        """The sympy ground domain backing this field."""
        return _ground_domain(self.characteristic)

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def check_same(self, other: "ScalarField") -> None:
        if self != other:
            raise FieldMismatchError(
                f"Cannot combine values over {self.spec} and {other.spec}",
                details={"left": self.spec, "right": other.spec},
            )

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    def from_int(self, value: int) -> Scalar:
        return self.domain(value)

    def from_ratio(self, numerator: int, denominator: int) -> Scalar:
        if denominator == 0:
            raise DivisionByZeroError(f"Zero denominator in {numerator}/{denominator}")
        if self.is_rational:
            return QQ(numerator, denominator)
        return self.div(self.from_int(numerator), self.from_int(denominator))

    def parse(self, text: str) -> Scalar:
        """Parse an optionally signed integer or fraction such as "-3/4"."""
        match = _RATIONAL_PATTERN.match(text)
        if not match:
            raise ParseError(f"Invalid scalar '{text}'", position=0, text=text)
        sign, numerator, denominator = match.groups()
        value = self.from_ratio(int(numerator), int(denominator or 1))
        return -value if sign == "-" else value

    # ------------------------------------------------------------------
    # Arithmetic helpers
    # ------------------------------------------------------------------

    def is_zero(self, value: Scalar) -> bool:
        return not value

    def is_negative(self, value: Scalar) -> bool:
        """Only rationals carry a sign; residues are always rendered non-negative."""
        return self.is_rational and value < 0

    def div(self, numerator: Scalar, denominator: Scalar) -> Scalar:
        if not denominator:
            raise DivisionByZeroError("Division by a zero scalar")
        return numerator / denominator

    def power(self, value: Scalar, exponent: int) -> Scalar:
        if exponent < 0:
            return self.div(self.one, value ** (-exponent))
        return value**exponent

    def roots(self, value: Scalar, exponent: int) -> List[Scalar]:
        """
        All exponent-th roots of value lying in the field.

        Over Q the roots are exact: value must be a ratio of perfect powers.
        The positive root is listed first. Over F_p every residue is tried.

        Args:
            value: Field element whose roots are wanted
            exponent: Root degree, at least 1

        Returns:
            List of roots (possibly empty), in a deterministic order
        """
        if exponent < 1:
            raise InvalidArgumentError(f"Root exponent must be >= 1, got {exponent}")
        if self.is_finite:
            return [r for r in self.elements() if r**exponent == value]
        if not value:
            return [self.zero]
        numerator = int(QQ.numer(value))
        denominator = int(QQ.denom(value))
        if numerator < 0 and exponent % 2 == 0:
            return []
        num_root, num_exact = integer_nthroot(abs(numerator), exponent)
        den_root, den_exact = integer_nthroot(denominator, exponent)
        if not (num_exact and den_exact):
            return []
        root = QQ(int(num_root), int(den_root))
        if numerator < 0:
            return [-root]
        if exponent % 2 == 0:
            return [root, -root]
        return [root]

    def elements(self) -> Iterator[Scalar]:
        """Iterate over F_p in residue order."""
        if not self.is_finite:
            raise UnsupportedFieldError("The rationals cannot be enumerated")
        for residue in range(self.characteristic):
            yield self.from_int(residue)

    def to_residue(self, value: Scalar) -> int:
        """Integer representative in [0, p) of an F_p element."""
        if not self.is_finite:
            raise UnsupportedFieldError("Residues exist only over F_p")
        return int(value) % self.characteristic

    def reduce_to(self, value: Scalar, target: "ScalarField") -> Scalar:
        """
        Map value into target: identity on the same field, Q -> F_p otherwise.

        Raises:
            DivisionByZeroError: if a denominator vanishes modulo p
            FieldMismatchError: for any other pair of fields
        """
        if target == self:
            return value
        if not (self.is_rational and target.is_finite):
            raise FieldMismatchError(
                f"Cannot reduce {self.spec} scalars to {target.spec}",
                details={"source": self.spec, "target": target.spec},
            )
        numerator = int(QQ.numer(value))
        denominator = int(QQ.denom(value))
        if denominator % target.characteristic == 0:
            raise DivisionByZeroError(
                f"Denominator of {self.format(value)} vanishes modulo {target.characteristic}",
                details={"value": self.format(value), "p": target.characteristic},
            )
        return target.div(target.from_int(numerator), target.from_int(denominator))

    # ------------------------------------------------------------------
    # Text
    # ------------------------------------------------------------------

    def format(self, value: Scalar) -> str:
        if self.is_finite:
            return str(self.to_residue(value))
        numerator = int(QQ.numer(value))
        denominator = int(QQ.denom(value))
        if denominator == 1:
            return str(numerator)
        return f"{numerator}/{denominator}"
