"""
Polynomials over an exact scalar field.

FreePolynomial is a linear combination of free terms, LNPolynomial a linear
combination of left-normed words. Both are immutable; every operation returns
a new value with zero coefficients pruned.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, Generic, Hashable, Iterable, Iterator, Mapping, Optional, Tuple, TypeVar

from core.exceptions import InvalidArgumentError, ZeroPolynomialError
from core.scalars import Scalar, ScalarField
from core.terms.term import Leaf, Node, Term, Word, leaves, sort_key, word_to_term

K = TypeVar("K", bound=Hashable)


class LinearCombination(Generic[K]):
    """Finite table key -> nonzero scalar over one field."""

    __slots__ = ("field", "_coeffs")

    def __init__(self, field: ScalarField, coeffs: Optional[Mapping[K, Scalar]] = None):
        self.field = field
        self._coeffs: Dict[K, Scalar] = {k: c for k, c in (coeffs or {}).items() if c}

    @classmethod
    def collect(cls, field: ScalarField, pairs: Iterable[Tuple[K, Scalar]]):
        """Sum coefficients of repeated keys and drop the zeros."""
        table: Dict[K, Scalar] = defaultdict(lambda: field.zero)
        for key, coeff in pairs:
            table[key] = table[key] + coeff
        return cls(field, table)

    def _same_kind(self, coeffs: Mapping[K, Scalar]):
        return type(self)(self.field, coeffs)

    # -- container protocol -------------------------------------------------

    def coefficient(self, key: K) -> Scalar:
        return self._coeffs.get(key, self.field.zero)

    def items(self) -> Iterator[Tuple[K, Scalar]]:
        return iter(self._coeffs.items())

    def keys(self) -> Iterator[K]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[K]:
        return iter(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.field == other.field and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.field, frozenset(self._coeffs.items())))

    # -- vector space -------------------------------------------------------

    def __add__(self, other):
        self.field.check_same(other.field)
        return type(self).collect(self.field, [*self.items(), *other.items()])

    def __neg__(self):
        return self._same_kind({k: -c for k, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar: Scalar):
        return self._same_kind({k: scalar * c for k, c in self.items()})

    def map_field(self, target: ScalarField):
        """Reduce every coefficient into target (e.g. Q -> F_p)."""
        return type(self)(target, {k: self.field.reduce_to(c, target) for k, c in self.items()})


class FreePolynomial(LinearCombination[Term]):
    """Element of the free nonassociative algebra on x_1, x_2, ..."""

    @classmethod
    def zero(cls, field: ScalarField) -> "FreePolynomial":
        return cls(field)

    @classmethod
    def monomial(cls, term: Term, field: ScalarField, coeff: Optional[Scalar] = None):
        return cls(field, {term: field.one if coeff is None else coeff})

    @classmethod
    def variable(cls, var: int, field: ScalarField) -> "FreePolynomial":
        return cls.monomial(Leaf(var), field)

    def __mul__(self, other: "FreePolynomial") -> "FreePolynomial":
        return free_mul(self, other)

    def sorted_terms(self) -> list:
        return sorted(self._coeffs, key=sort_key)

    def variables(self) -> Tuple[int, ...]:
        found = set()
        for term in self._coeffs:
            found.update(leaves(term))
        return tuple(sorted(found))

    def max_degree(self) -> int:
        return max((term.degree for term in self._coeffs), default=0)

    def __repr__(self) -> str:
        from core.terms.parser import format_polynomial

        return f"FreePolynomial({format_polynomial(self)!r}, field={self.field.spec})"


class LNPolynomial(LinearCombination[Word]):
    """Linear combination of left-normed words."""

    def lift(self) -> FreePolynomial:
        return FreePolynomial(self.field, {word_to_term(w): c for w, c in self.items()})

    def sorted_words(self) -> list:
        return sorted(self._coeffs, key=lambda w: (len(w), w))

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {self.field.format(c)}" for w, c in self.items())
        return f"LNPolynomial({{{body}}}, field={self.field.spec})"


def add(f: FreePolynomial, g: FreePolynomial) -> FreePolynomial:
    return f + g


def scale(scalar: Scalar, f: FreePolynomial) -> FreePolynomial:
    return f.scale(scalar)


def free_mul(f: FreePolynomial, g: FreePolynomial) -> FreePolynomial:
    """Bilinear product; monomials are joined under a new Node."""
    f.field.check_same(g.field)
    return FreePolynomial.collect(
        f.field, ((Node(s, t), a * b) for s, a in f.items() for t, b in g.items())
    )


@dataclass(frozen=True)
class MultiDegree:
    """
    Multiplicity of each variable, e.g. x1 x2^2 has {1: 1, 2: 2}.

    Stored as sorted (var, multiplicity) pairs so it is hashable and ordered.
    """

    entries: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise InvalidArgumentError("A multidegree needs at least one variable")
        for var, mult in self.entries:
            if var < 1 or mult < 1:
                raise InvalidArgumentError(
                    f"Invalid multidegree entry x{var}^{mult}: multiplicities must be >= 1",
                    details={"var": var, "multiplicity": mult},
                )

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "MultiDegree":
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def of_word(cls, word: Word) -> "MultiDegree":
        return cls.from_counts(Counter(word))

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(var for var, _ in self.entries)

    @property
    def total(self) -> int:
        return sum(mult for _, mult in self.entries)

    @property
    def is_multilinear(self) -> bool:
        return all(mult == 1 for _, mult in self.entries)

    def multiplicity(self, var: int) -> int:
        return dict(self.entries).get(var, 0)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def letters(self) -> Word:
        """The multiset as a nondecreasing word."""
        return tuple(var for var, mult in self.entries for _ in range(mult))

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{v}:{m}" for v, m in self.entries) + ")"


def _term_multidegree(term: Term) -> MultiDegree:
    return MultiDegree.from_counts(Counter(leaves(term)))


def multidegree_of(f: FreePolynomial) -> Optional[MultiDegree]:
    """
    The common multidegree of all monomials of f.

    Returns:
        MultiDegree, or None when f is not multihomogeneous

    Raises:
        ZeroPolynomialError: f is the zero polynomial
    """
    if f.is_zero:
        raise ZeroPolynomialError()
    degrees = {_term_multidegree(term) for term in f.keys()}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def split_multihomogeneous(f: FreePolynomial) -> Dict[MultiDegree, FreePolynomial]:
    """Group the monomials of f by multidegree."""
    groups: Dict[MultiDegree, Dict[Term, Scalar]] = defaultdict(dict)
    for term, coeff in f.items():
        groups[_term_multidegree(term)][term] = coeff
    ordered = sorted(groups.items(), key=lambda item: item[0].entries)
    return {md: FreePolynomial(f.field, table) for md, table in ordered}
