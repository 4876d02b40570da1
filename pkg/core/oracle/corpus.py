"""
Seeded random generation of polynomials, elements and multidegrees.

Every corpus is reproducible from its seed; callers log the seed so that a
failing case can be replayed exactly.
"""

import random
from typing import List, Optional, Sequence

from core.algebra import AlgebraHandle
from core.model.element import Element
from core.scalars import Scalar, ScalarField
from core.terms.polynomial import FreePolynomial, MultiDegree
from core.terms.term import Leaf, Node, Term


class PolynomialCorpus:
    """Random source for verification suites and property tests."""

    def __init__(self, seed: int, field: Optional[ScalarField] = None, max_numerator: int = 5):
        self.seed = seed
        self.field = field or ScalarField.rationals()
        self.max_numerator = max_numerator
        self.rng = random.Random(seed)

    # -- scalars ------------------------------------------------------------

    def scalar(self, nonzero: bool = True) -> Scalar:
        field = self.field
        while True:
            numerator = self.rng.randint(-self.max_numerator, self.max_numerator)
            denominator = self.rng.randint(1, 3) if field.is_rational else 1
            if field.is_finite and denominator % field.characteristic == 0:
                continue
            value = field.from_ratio(numerator, denominator)
            if value or not nonzero:
                return value

    def integer(self, low: int, high: int) -> int:
        return self.rng.randint(low, high)

    def choice(self, options: Sequence):
        return self.rng.choice(list(options))

    # -- terms --------------------------------------------------------------

    def random_tree(self, letters: Sequence[int]) -> Term:
        """A uniformly split binary tree over the given leaf sequence."""
        if len(letters) == 1:
            return Leaf(letters[0])
        cut = self.rng.randint(1, len(letters) - 1)
        return Node(self.random_tree(letters[:cut]), self.random_tree(letters[cut:]))

    def random_term(self, max_variables: int, degree: int) -> Term:
        letters = [self.rng.randint(1, max_variables) for _ in range(degree)]
        return self.random_tree(letters)

    def _polynomial(self, terms: List[Term]) -> FreePolynomial:
        return FreePolynomial.collect(self.field, ((t, self.scalar()) for t in terms))

    def random_polynomial(
        self, max_variables: int, max_degree: int, max_terms: int
    ) -> FreePolynomial:
        """Mixed-degree polynomial; may be inhomogeneous and may cancel to zero."""
        count = self.rng.randint(1, max_terms)
        return self._polynomial(
            [self.random_term(max_variables, self.rng.randint(1, max_degree)) for _ in range(count)]
        )

    def random_identity_instance(self, max_variables: int, max_degree: int) -> FreePolynomial:
        """a(bc) for random subterms a, b, c: vanishes on every algebra considered."""
        degree = self.rng.randint(3, max(3, max_degree))
        letters = [self.rng.randint(1, max_variables) for _ in range(degree)]
        first = self.rng.randint(1, degree - 2)
        second = self.rng.randint(first + 1, degree - 1)
        term = Node(
            self.random_tree(letters[:first]),
            Node(self.random_tree(letters[first:second]), self.random_tree(letters[second:])),
        )
        return FreePolynomial.monomial(term, self.field, self.scalar())

    def random_concordance_case(
        self, max_variables: int, max_degree: int, max_terms: int
    ) -> FreePolynomial:
        """Random polynomial, half the time shifted by an instance of x1(x2x3)."""
        f = self.random_polynomial(max_variables, max_degree, max_terms)
        if self.rng.random() < 0.5:
            f = f + self.random_identity_instance(max_variables, max_degree)
        return f

    def random_multilinear(self, m: int, max_terms: int = 4) -> FreePolynomial:
        """Multilinear in x_1..x_m (nonzero unless every term cancels)."""
        terms = []
        for _ in range(self.rng.randint(1, max_terms)):
            letters = list(range(1, m + 1))
            self.rng.shuffle(letters)
            terms.append(self.random_tree(letters))
        return self._polynomial(terms)

    def random_multidegree(self, max_variables: int, max_degree: int) -> MultiDegree:
        m = self.rng.randint(1, max_variables)
        degree = self.rng.randint(m, max(m, max_degree))
        counts = {var: 1 for var in range(1, m + 1)}
        for _ in range(degree - m):
            counts[self.rng.randint(1, m)] += 1
        return MultiDegree.from_counts(counts)

    def random_multihomogeneous(
        self, multidegree: MultiDegree, max_terms: int = 4
    ) -> FreePolynomial:
        terms = []
        for _ in range(self.rng.randint(1, max_terms)):
            letters = list(multidegree.letters())
            self.rng.shuffle(letters)
            terms.append(self.random_tree(letters))
        return self._polynomial(terms)

    # -- elements -----------------------------------------------------------

    def random_element(
        self, algebra: AlgebraHandle, lowest: int = 1, highest: Optional[int] = None
    ) -> Element:
        """Random element supported on e_lowest..e_highest (highest defaults to n, or lowest+4)."""
        top = highest or (algebra.n if algebra.is_finite else lowest + 4)
        coeffs = {}
        for index in range(lowest, top + 1):
            if algebra.keeps(index) and self.rng.random() < 0.7:
                coeffs[index] = self.scalar(nonzero=False)
        return Element(algebra, self.field, coeffs)

    def random_assignment(self, variables: Sequence[int], algebra: AlgebraHandle) -> dict:
        return {var: self.random_element(algebra) for var in variables}
