"""
Generic evaluation: exact identity testing with commutative polynomials.

Each variable x_k becomes the generic element sum_i t_{k,i} e_i of L_n, with
the t_{k,i} indeterminates of a sympy polynomial ring over QQ. A polynomial is
an identity of L_n iff every coordinate of its generic value is zero.
"""

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, PolyRing, ring

from core.algebra import AlgebraHandle
from core.exceptions import InvalidArgumentError, UnsupportedFieldError
from core.scalars import ScalarField
from core.terms.polynomial import FreePolynomial
from core.terms.term import Leaf, Term, Word, word_to_term

CommPoly = PolyElement
Coordinates = Tuple[CommPoly, ...]


@lru_cache(maxsize=64)
def generic_ring(m: int, n: int) -> Tuple[PolyRing, Tuple[Coordinates, ...]]:
    """The ring QQ[t_{k,i}] and the generic coordinates of x_1..x_m."""
    names = [f"t_{k}_{i}" for k in range(1, m + 1) for i in range(1, n + 1)]
    poly_ring, *gens = ring(",".join(names), QQ)
    generic = tuple(tuple(gens[(k - 1) * n: k * n]) for k in range(1, m + 1))
    return poly_ring, generic


def _product(a: Coordinates, b: Coordinates, zero: CommPoly) -> Coordinates:
    b1 = b[0]
    return (zero,) + tuple(coordinate * b1 for coordinate in a[:-1])


def generic_evaluate(f: FreePolynomial, m: int, n: int) -> List[CommPoly]:
    """
    Coordinates (e_1..e_n) of f evaluated at generic elements of L_n.

    Args:
        f: Polynomial in x_1..x_m with rational coefficients
        m: Number of variables
        n: Dimension of L_n

    Returns:
        One CommPoly per basis vector
    """
    if not f.field.is_rational:
        raise UnsupportedFieldError("Generic evaluation runs over the rationals")
    if any(var > m for var in f.variables()):
        raise InvalidArgumentError(f"Polynomial uses variables beyond x{m}")
    poly_ring, generic = generic_ring(max(m, 1), n)
    zero = poly_ring.zero
    cache: Dict[Term, Coordinates] = {}

    def value_of(term: Term) -> Coordinates:
        if term not in cache:
            if isinstance(term, Leaf):
                cache[term] = generic[term.var - 1]
            else:
                cache[term] = _product(value_of(term.left), value_of(term.right), zero)
        return cache[term]

    totals = [zero] * n
    for term, coeff in f.items():
        scalar = poly_ring.ground_new(coeff)
        for index, coordinate in enumerate(value_of(term)):
            if coordinate:
                totals[index] = totals[index] + coordinate * scalar
    return totals


def identity_oracle(f: FreePolynomial, algebra: AlgebraHandle) -> bool:
    """
    Decide f in Id(algebra) by generic evaluation.

    L_inf is tested on L_{D+1} with D the largest degree of f: in degrees up
    to D the identities of L_{D+1} and L_inf coincide.
    """
    if not f.field.is_rational:
        raise UnsupportedFieldError(
            "Identity testing is only supported over the rationals",
            details={"field": f.field.spec},
        )
    if f.is_zero:
        return True
    m = max(f.variables())
    n = algebra.n if algebra.is_finite else f.max_degree() + 1
    return all(not coordinate for coordinate in generic_evaluate(f, m, n))


def generic_coordinates(word: Word, m: int, n: int) -> Dict[Tuple[int, tuple], object]:
    """Sparse vector (basis slot, monomial) -> coefficient of a word's generic value."""
    f = FreePolynomial.monomial(word_to_term(word), ScalarField.rationals())
    vector = {}
    for index, coordinate in enumerate(generic_evaluate(f, m, n)):
        for monomial, coeff in coordinate.items():
            vector[(index, monomial)] = coeff
    return vector


def coordinate_rank(words: Sequence[Word], m: int, n: int) -> int:
    """Exact rank over QQ of the generic-evaluation vectors of the given words."""
    if not words:
        return 0
    vectors = [generic_coordinates(word, m, n) for word in words]
    columns = sorted({key for vector in vectors for key in vector})
    position = {key: i for i, key in enumerate(columns)}
    rows = []
    for vector in vectors:
        row = [QQ.zero] * len(columns)
        for key, coeff in vector.items():
            row[position[key]] = coeff
        rows.append(row)
    if not columns:
        return 0
    return DomainMatrix(rows, (len(rows), len(columns)), QQ).rank()
