"""
Elements of L_n and L_inf and the power ideals L^k.

Multiplication table: e_i e_1 = e_{i+1}, every other product of basis vectors
is zero, so (sum a_i e_i)(sum b_j e_j) = b_1 * sum a_i e_{i+1}. On L_n the
vector e_{n+1} is truncated to zero.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from core.algebra import AlgebraHandle
from core.exceptions import InvalidArgumentError, ParseError
from core.scalars import Scalar, ScalarField
from core.terms.parser import TokenStream


class Element:
    """
    A vector sum a_i e_i.

    L_n elements are stored densely as (a_1, ..., a_n); L_inf elements as a
    sparse table holding only nonzero coefficients.
    """

    __slots__ = ("algebra", "field", "_dense", "_sparse")

    def __init__(
        self,
        algebra: AlgebraHandle,
        field: ScalarField,
        coeffs: Optional[Mapping[int, Scalar]] = None,
    ):
        self.algebra = algebra
        self.field = field
        coeffs = coeffs or {}
        for index in coeffs:
            if not algebra.keeps(index):
                raise InvalidArgumentError(
                    f"Basis index e{index} is outside {algebra.label}",
                    details={"index": index, "algebra": algebra.spec},
                )
        if algebra.is_finite:
            self._dense: Tuple[Scalar, ...] = tuple(
                coeffs.get(i, field.zero) for i in range(1, algebra.n + 1)
            )
            self._sparse: Dict[int, Scalar] = {}
        else:
            self._dense = ()
            self._sparse = {i: c for i, c in coeffs.items() if c}

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, algebra: AlgebraHandle, field: ScalarField) -> "Element":
        return cls(algebra, field)

    @classmethod
    def basis(cls, algebra: AlgebraHandle, field: ScalarField, index: int) -> "Element":
        return cls(algebra, field, {index: field.one})

    @classmethod
    def from_mapping(
        cls, algebra: AlgebraHandle, field: ScalarField, mapping: Mapping[int, Scalar]
    ) -> "Element":
        return cls(algebra, field, mapping)

    @classmethod
    def from_dense(
        cls, algebra: AlgebraHandle, field: ScalarField, values: Sequence[Scalar]
    ) -> "Element":
        return cls(algebra, field, {i: v for i, v in enumerate(values, start=1) if v})

    # -- access -------------------------------------------------------------

    def coefficient(self, index: int) -> Scalar:
        if self.algebra.is_finite:
            return self._dense[index - 1] if 1 <= index <= self.algebra.n else self.field.zero
        return self._sparse.get(index, self.field.zero)

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        """Nonzero (index, coefficient) pairs in increasing index order."""
        if self.algebra.is_finite:
            return ((i, c) for i, c in enumerate(self._dense, start=1) if c)
        return iter(sorted(self._sparse.items()))

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.items())

    def lowest_index(self) -> Optional[int]:
        return next((i for i, _ in self.items()), None)

    @property
    def is_zero(self) -> bool:
        return next(self.items(), None) is None

    def as_dict(self) -> Dict[int, Scalar]:
        return dict(self.items())

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Element") -> None:
        self.algebra.check_same(other.algebra)
        self.field.check_same(other.field)

    def _combine(self, pairs: Iterable[Tuple[int, Scalar]]) -> "Element":
        table: Dict[int, Scalar] = {}
        for index, coeff in pairs:
            table[index] = table.get(index, self.field.zero) + coeff
        return Element(self.algebra, self.field, table)

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return self._combine([*self.items(), *other.items()])

    def __neg__(self) -> "Element":
        return Element(self.algebra, self.field, {i: -c for i, c in self.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, scalar: Scalar) -> "Element":
        return Element(self.algebra, self.field, {i: scalar * c for i, c in self.items()})

    def shift(self, steps: int) -> "Element":
        """sum a_i e_{i+steps}, truncated on L_n."""
        return Element(
            self.algebra,
            self.field,
            {i + steps: c for i, c in self.items() if self.algebra.keeps(i + steps)},
        )

    def __mul__(self, other: "Element") -> "Element":
        return mul(self, other)

    def map_field(self, target: ScalarField) -> "Element":
        return Element(
            self.algebra, target, {i: self.field.reduce_to(c, target) for i, c in self.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.field == other.field
            and self.as_dict() == other.as_dict()
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.field, tuple(self.items())))

    # -- text and JSON ------------------------------------------------------

    def format(self) -> str:
        """Text form such as "4*e2 + 6*e3"; zero terms omitted."""
        parts = []
        for position, (index, coeff) in enumerate(self.items()):
            negative = self.field.is_negative(coeff)
            magnitude = -coeff if negative else coeff
            body = f"e{index}" if magnitude == self.field.one else (
                f"{self.field.format(magnitude)}*e{index}"
            )
            if position == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts) or "0"

    def to_json(self) -> Dict[str, Any]:
        return {
            "algebra": self.algebra.to_json(),
            "coeffs": {str(i): self.field.format(c) for i, c in self.items()},
        }

    @classmethod
    def from_json(cls, document: Mapping[str, Any], field: ScalarField) -> "Element":
        algebra_doc = document["algebra"]
        algebra = (
            AlgebraHandle.infinite()
            if algebra_doc == "inf"
            else AlgebraHandle.finite(int(algebra_doc["n"]))
        )
        coeffs = {int(i): field.parse(text) for i, text in document["coeffs"].items()}
        return cls(algebra, field, coeffs)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Element({self.format()!r}, algebra={self.algebra.spec}, field={self.field.spec})"


def mul(a: Element, b: Element) -> Element:
    """(sum a_i e_i)(sum b_j e_j) = b_1 * sum a_i e_{i+1}."""
    a._check(b)
    b1 = b.coefficient(1)
    if not b1:
        return Element.zero(a.algebra, a.field)
    return a.shift(1).scale(b1)


def right_power(z: Element, w: Element, s: int) -> Element:
    """z w^(s) = ((z w) w)...w with s factors w, by iterated multiplication."""
    if s < 1:
        raise InvalidArgumentError(f"Right power exponent must be >= 1, got {s}")
    result = z
    for _ in range(s):
        result = mul(result, w)
    return result


def right_power_closed_form(z: Element, w: Element, s: int) -> Element:
    """z w^(s) = b_1^s * sum a_i e_{i+s}."""
    if s < 1:
        raise InvalidArgumentError(f"Right power exponent must be >= 1, got {s}")
    z._check(w)
    return z.shift(s).scale(w.coefficient(1) ** s)


# =============================================================================
# ELEMENT TEXT
# =============================================================================


class _ElementParser(TokenStream):
    """elem := ["+"|"-"] eterm (("+"|"-") eterm)*;  eterm := [coeff ["*"]] "e" nat | "0" """

    def __init__(self, text: str, algebra: AlgebraHandle, field: ScalarField):
        super().__init__(text, field)
        self.algebra = algebra

    def parse(self) -> Element:
        sign = self.field.one
        if self.peek().kind in ("PLUS", "MINUS"):
            sign = -sign if self.advance().kind == "MINUS" else sign
        pairs = [self._term(sign)]
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = self.field.one if self.advance().kind == "PLUS" else -self.field.one
            pairs.append(self._term(sign))
        self.finish()
        table: Dict[int, Scalar] = {}
        for index, coeff in pairs:
            if index is not None:
                table[index] = table.get(index, self.field.zero) + coeff
        return Element(self.algebra, self.field, table)

    def _term(self, sign: Scalar) -> Tuple[Optional[int], Scalar]:
        if self.peek().kind == "MINUS" and self.peek(1).kind == "NUMBER":
            self.advance()
            sign = -sign
        coeff = sign
        if self.peek().kind == "NUMBER":
            number = self.peek()
            coeff = sign * self.coefficient()
            if self.peek().kind == "STAR":
                self.advance()
            elif self.peek().kind != "BASIS":
                if not coeff:
                    return None, coeff
                self.fail("A nonzero constant needs a basis vector", number)
        token = self.expect("BASIS", "a basis vector e<k>")
        return self.index_of(token, "Basis"), coeff


def parse_element(text: str, algebra: AlgebraHandle, field: ScalarField) -> Element:
    """
    Parse element text such as "2*e1 + 3*e2", "e3" or "0".

    Raises:
        ParseError: malformed text
        InvalidArgumentError: basis index outside the algebra
    """
    return _ElementParser(text, algebra, field).parse()


def parse_assignment(
    text: str, algebra: AlgebraHandle, field: ScalarField
) -> Tuple[int, Element]:
    """Parse "x<k>=<element>" as used by the eval command."""
    name, separator, value = text.partition("=")
    name = name.strip()
    if not separator or not (name.startswith("x") and name[1:].isdigit()):
        raise ParseError(f"Expected x<k>=<element>, got '{text}'", position=0, text=text)
    var = int(name[1:])
    if var < 1:
        raise ParseError("Variable index must be >= 1", position=1, text=text)
    offset = text.index("=") + 1
    try:
        return var, parse_element(value, algebra, field)
    except ParseError as exc:
        raise ParseError(exc.message, position=exc.position + offset, text=text) from exc


# =============================================================================
# POWER IDEALS
# =============================================================================


@dataclass(frozen=True)
class SubspaceDescriptor:
    """L^k = span{e_k, e_{k+1}, ...}; the zero subspace on L_n when k > n."""

    algebra: AlgebraHandle
    k: int

    def contains(self, element: Element) -> bool:
        self.algebra.check_same(element.algebra)
        lowest = element.lowest_index()
        return lowest is None or lowest >= self.k

    @property
    def dimension(self) -> Union[int, None]:
        """n + 1 - k on L_n (never negative); None on L_inf."""
        if not self.algebra.is_finite:
            return None
        return max(self.algebra.n + 1 - self.k, 0)


def power_ideal(algebra: AlgebraHandle, k: int) -> SubspaceDescriptor:
    if k < 1:
        raise InvalidArgumentError(f"Power ideal index must be >= 1, got {k}", details={"k": k})
    return SubspaceDescriptor(algebra, k)


def contains(subspace: SubspaceDescriptor, element: Element) -> bool:
    return subspace.contains(element)
