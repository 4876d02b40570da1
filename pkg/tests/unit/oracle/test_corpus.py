"""
Unit Tests for the Seeded Polynomial Corpus
"""

import pytest

from core.algebra import AlgebraHandle
from core.oracle.corpus import PolynomialCorpus
from core.rewrite.normal_form import is_identity
from core.scalars import ScalarField
from core.terms.polynomial import MultiDegree, multidegree_of


class TestPolynomialCorpus:
    """Test suite for PolynomialCorpus"""

    @pytest.fixture
    def corpus(self):
        """A corpus with a fixed seed"""
        return PolynomialCorpus(seed=42)

    def test_same_seed_same_polynomials(self):
        """Test reproducibility from the seed"""
        first = PolynomialCorpus(seed=5)
        second = PolynomialCorpus(seed=5)

        for _ in range(10):
            assert first.random_polynomial(3, 5, 4) == second.random_polynomial(3, 5, 4)

    def test_identity_instances_vanish(self, corpus):
        """Test that a(bc) instances are identities of L_inf"""
        for _ in range(10):
            f = corpus.random_identity_instance(3, 5)
            assert is_identity(f, AlgebraHandle.infinite())

    def test_multihomogeneous(self, corpus):
        """Test that generated monomials share the requested multidegree"""
        md = MultiDegree.from_counts({1: 2, 2: 1, 3: 1})
        for _ in range(10):
            f = corpus.random_multihomogeneous(md)
            if not f.is_zero:
                assert multidegree_of(f) == md

    def test_multidegree_uses_every_variable(self, corpus):
        """Test that random multidegrees use x_1..x_m"""
        for _ in range(20):
            md = corpus.random_multidegree(3, 5)
            assert md.variables == tuple(range(1, len(md.variables) + 1))
            assert md.total <= 5

    def test_random_element_support(self, corpus):
        """Test the support window of random elements"""
        l4 = AlgebraHandle.finite(4)
        for _ in range(20):
            element = corpus.random_element(l4, lowest=2)
            assert all(2 <= index <= 4 for index in element.support())

    def test_prime_field_scalars(self):
        """Test that scalars land in the corpus field"""
        f3 = ScalarField.prime(3)
        corpus = PolynomialCorpus(seed=1, field=f3)

        for _ in range(20):
            assert corpus.scalar() in list(f3.elements())[1:]
