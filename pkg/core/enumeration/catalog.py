"""
Basis catalogs of the relatively free algebras and their dimension counts.

In m variables the canonical words of L_n are
    degree 1:          the m letters
    degree 2..n-1:     any head, nondecreasing tail
    degree n:          one nondecreasing word per multiset
so dim = 1 + C(n+m-1, m-1) + sum_{s=1}^{n-1} sum_{l=1}^{min(m,s)} l C(m,l) C(s-1,l-1),
the leading 1 counting the unit in degree 0.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Tuple, Union

from core.algebra import AlgebraHandle
from core.exceptions import InvalidArgumentError
from core.terms.term import Word


@dataclass(frozen=True)
class BasisCatalog:
    """Canonical words grouped by degree; the unit is only flagged, never stored."""

    algebra: AlgebraHandle
    m: int
    by_degree: Dict[int, Tuple[Word, ...]] = field(default_factory=dict)
    includes_unit: bool = True

    @property
    def counts(self) -> Dict[int, int]:
        return {degree: len(words) for degree, words in self.by_degree.items()}

    @property
    def word_count(self) -> int:
        return sum(self.counts.values())

    @property
    def total(self) -> int:
        return self.word_count + (1 if self.includes_unit else 0)

    def words(self) -> List[Word]:
        return [word for degree in sorted(self.by_degree) for word in self.by_degree[degree]]

    def multilinear_slice(self, degree: int) -> List[Word]:
        """Words of the given degree using each of x_1..x_degree exactly once."""
        letters = tuple(range(1, degree + 1))
        return [w for w in self.by_degree.get(degree, ()) if tuple(sorted(w)) == letters]


def _check_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise InvalidArgumentError(f"{name} must be >= 1, got {value}", details={name: value})


def _words_of_degree(degree: int, m: int, top: Optional[int]) -> Tuple[Word, ...]:
    letters = range(1, m + 1)
    if degree == 1:
        return tuple((j,) for j in letters)
    if top is not None and degree == top:
        return tuple(combinations_with_replacement(letters, degree))
    return tuple(
        (head,) + tail
        for head in letters
        for tail in combinations_with_replacement(letters, degree - 1)
    )


def basis_monomials(
    algebra: Union[AlgebraHandle, int], m: int, max_degree: Optional[int] = None
) -> BasisCatalog:
    """
    Enumerate canonical words in x_1..x_m, degree-major then lexicographic.

    Args:
        algebra: L_n (or just n) or L_inf
        m: Number of variables
        max_degree: Degree cut-off; required for L_inf, optional for L_n

    Returns:
        BasisCatalog
    """
    if isinstance(algebra, int):
        algebra = AlgebraHandle.finite(algebra)
    _check_positive(m=m)
    if algebra.is_finite:
        top = algebra.n if max_degree is None else min(max_degree, algebra.n)
    elif max_degree is None:
        raise InvalidArgumentError("Enumerating L_inf needs a maximum degree")
    else:
        top = max_degree
    _check_positive(max_degree=top)
    by_degree = {
        degree: _words_of_degree(degree, m, algebra.n) for degree in range(1, top + 1)
    }
    return BasisCatalog(algebra, m, by_degree)


def dim_relatively_free(n: int, m: int) -> int:
    """Dimension of the relatively free algebra of L_n in m variables, unit included."""
    _check_positive(n=n, m=m)
    top = comb(n + m - 1, m - 1)
    middle = sum(
        size * comb(m, size) * comb(s - 1, size - 1)
        for s in range(1, n)
        for size in range(1, min(m, s) + 1)
    )
    return 1 + top + middle


def multilinear_words(algebra: AlgebraHandle, m: int) -> List[Word]:
    """Canonical words of degree m using each of x_1..x_m once."""
    _check_positive(m=m)
    letters = tuple(range(1, m + 1))
    if algebra.is_finite and m > algebra.n:
        return []
    if m == 1 or m == algebra.n:
        return [letters]
    return [(j,) + tuple(k for k in letters if k != j) for j in letters]


def multilinear_codim(algebra: AlgebraHandle, m: int) -> int:
    """c_m: m on L_inf; on L_n m below degree n, 1 at degree n, 0 above."""
    _check_positive(m=m)
    if not algebra.is_finite or m <= algebra.n - 1:
        return m
    return 1 if m == algebra.n else 0
