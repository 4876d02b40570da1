"""
Canonical normal forms modulo the identities of L_n and L_inf.

Canonical words (nondecreasing tails, variables repeated rather than raised
to powers):
    L_n:   length 1 kept; length 2..n-1 head kept and tail sorted;
           length n fully sorted; length > n dropped.
    L_inf: head kept and tail sorted, any length.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from core.algebra import AlgebraHandle
from core.exceptions import (
    NotHomogeneousError,
    UnsupportedFieldError,
    ZeroPolynomialError,
)
from core.rewrite.left_norm import left_norm
from core.scalars import Scalar, ScalarField
from core.terms.parser import format_ln
from core.terms.polynomial import (
    FreePolynomial,
    LNPolynomial,
    MultiDegree,
    multidegree_of,
    split_multihomogeneous,
)
from core.terms.term import Word


def canonical_word(word: Word, algebra: AlgebraHandle) -> Optional[Word]:
    """The canonical representative of a left-normed word, or None if it vanishes."""
    length = len(word)
    if algebra.is_finite:
        if length > algebra.n:
            return None
        if length == algebra.n:
            return tuple(sorted(word))
    if length == 1:
        return word
    return (word[0],) + tuple(sorted(word[1:]))


class NormalFormPoly(LNPolynomial):
    """
    A polynomial supported on canonical words of one algebra.

    multidegree is the multidegree of the polynomial the form was computed
    from; it survives even when the form itself is zero.
    """

    def __init__(
        self,
        algebra: AlgebraHandle,
        field: ScalarField,
        coeffs: Optional[Dict[Word, Scalar]] = None,
        multidegree: Optional[MultiDegree] = None,
    ):
        super().__init__(field, coeffs)
        self.algebra = algebra
        self.multidegree = multidegree

    def _same_kind(self, coeffs):
        return NormalFormPoly(self.algebra, self.field, coeffs, self.multidegree)

    def __add__(self, other: "NormalFormPoly") -> "NormalFormPoly":
        self.algebra.check_same(other.algebra)
        multidegree = self.multidegree if self.multidegree == other.multidegree else None
        return normal_form(self.as_ln() + other.as_ln(), self.algebra, multidegree)

    def map_field(self, target: ScalarField) -> "NormalFormPoly":
        return normal_form(self.as_ln().map_field(target), self.algebra, self.multidegree)

    @property
    def text(self) -> str:
        return format_ln(self)

    def as_ln(self) -> LNPolynomial:
        return LNPolynomial(self.field, dict(self.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalFormPoly):
            return NotImplemented
        return self.algebra == other.algebra and LNPolynomial.__eq__(self, other)

    __hash__ = LNPolynomial.__hash__

    def __repr__(self) -> str:
        return f"NormalFormPoly({self.text!r}, algebra={self.algebra.spec})"


def _ln_multidegree(f: LNPolynomial) -> Optional[MultiDegree]:
    degrees = {MultiDegree.of_word(word) for word in f.keys()}
    return degrees.pop() if len(degrees) == 1 else None


def normal_form(
    f: LNPolynomial,
    algebra: AlgebraHandle,
    multidegree: Optional[MultiDegree] = None,
) -> NormalFormPoly:
    """
    Map every word of f to its canonical representative and collect like terms.

    Args:
        f: Polynomial supported on left-normed words
        algebra: Target algebra
        multidegree: Multidegree of the originating polynomial, if known

    Returns:
        NormalFormPoly: Congruent to f modulo the identities of the algebra
    """
    collected = LNPolynomial.collect(
        f.field,
        ((canonical, coeff) for word, coeff in f.items()
         if (canonical := canonical_word(word, algebra)) is not None),
    )
    if multidegree is None:
        multidegree = _ln_multidegree(f)
    return NormalFormPoly(algebra, f.field, dict(collected.items()), multidegree)


def reduce(f: FreePolynomial, algebra: AlgebraHandle) -> NormalFormPoly:
    """normal_form(left_norm(f)), remembering the multidegree of f."""
    multidegree = None if f.is_zero else multidegree_of(f)
    return normal_form(left_norm(f), algebra, multidegree)


@dataclass(frozen=True)
class HeadCoefficients:
    """
    Coefficients of the canonical head words of a multihomogeneous normal form.

    alphas[j] is the coefficient of the word x_j followed by the remaining
    letters in nondecreasing order. For multilinear input these are the
    gamma_j and total is gamma.
    """

    multidegree: MultiDegree
    alphas: Tuple[Tuple[int, Scalar], ...]
    total: Scalar
    field: ScalarField

    @property
    def degree(self) -> int:
        return self.multidegree.total

    @property
    def linear_variables(self) -> Tuple[int, ...]:
        """Variables j with multiplicity d_j = 1."""
        return tuple(v for v, mult in self.multidegree.entries if mult == 1)

    def alpha(self, var: int) -> Scalar:
        return dict(self.alphas).get(var, self.field.zero)

    @property
    def vanishes(self) -> bool:
        return all(not a for _, a in self.alphas)

    def to_dict(self) -> Dict[str, object]:
        return {
            "multidegree": {str(v): m for v, m in self.multidegree.entries},
            "degree": self.degree,
            "alphas": {str(v): self.field.format(a) for v, a in self.alphas},
            "sum": self.field.format(self.total),
            "linear_variables": list(self.linear_variables),
        }


def head_word(var: int, multidegree: MultiDegree) -> Word:
    """x_var followed by the rest of the multiset in nondecreasing order."""
    rest = list(multidegree.letters())
    rest.remove(var)
    return (var,) + tuple(rest)


def head_coefficients(nf: NormalFormPoly) -> HeadCoefficients:
    """
    Extract alpha_1..alpha_m, their sum and the degree of a multihomogeneous form.

    For degree d = n on L_n all mass sits on the single sorted word and is
    reported on the smallest variable. For d > n every alpha is zero.

    Raises:
        ZeroPolynomialError: zero form with no recorded multidegree
        NotHomogeneousError: the form mixes multidegrees
    """
    multidegree = nf.multidegree
    if multidegree is None:
        if nf.is_zero:
            raise ZeroPolynomialError("Head coefficients need a multidegree")
        raise NotHomogeneousError("Head coefficients need a multihomogeneous polynomial")
    field = nf.field
    degree = multidegree.total
    variables = multidegree.variables
    n = nf.algebra.n

    if n is not None and degree > n:
        alphas = tuple((v, field.zero) for v in variables)
    elif n is not None and degree == n:
        mass = nf.coefficient(multidegree.letters())
        alphas = tuple((v, mass if v == variables[0] else field.zero) for v in variables)
    else:
        alphas = tuple((v, nf.coefficient(head_word(v, multidegree))) for v in variables)

    total = field.zero
    for _, alpha in alphas:
        total = total + alpha
    return HeadCoefficients(multidegree, alphas, total, field)


def is_identity(f: FreePolynomial, algebra: AlgebraHandle) -> bool:
    """
    Decide whether f vanishes identically on the algebra.

    Each multihomogeneous component is reduced separately; over an infinite
    field f is an identity iff every component is.

    Raises:
        UnsupportedFieldError: scalars are not the rationals
    """
    if not f.field.is_rational:
        raise UnsupportedFieldError(
            "Identity testing is only supported over the rationals",
            details={"field": f.field.spec},
        )
    return all(
        reduce(component, algebra).is_zero
        for component in split_multihomogeneous(f).values()
    )
