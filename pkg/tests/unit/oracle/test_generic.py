"""
Unit Tests for the Generic-Evaluation Identity Oracle
"""

import pytest

from core.algebra import AlgebraHandle
from core.enumeration.catalog import basis_monomials, multilinear_words
from core.exceptions import UnsupportedFieldError
from core.oracle.generic import coordinate_rank, generic_evaluate, identity_oracle
from core.rewrite.normal_form import reduce
from core.scalars import ScalarField
from core.terms.parser import parse


class TestIdentityOracle:
    """Test suite for identity_oracle()"""

    @pytest.mark.parametrize(
        "text, n, expected",
        [
            ("x1 (x2 x3)", 4, True),
            ("x1 x2 - x2 x1", 2, True),
            ("x1 x2 - x2 x1", 3, False),
            ("x1 x2 x3 - x1 x3 x2", 5, True),
            ("x1 x2 x3", 2, True),
            ("x1^2", 5, False),
        ],
    )
    def test_finite(self, text, n, expected):
        """Test identities of L_n"""
        assert identity_oracle(parse(text), AlgebraHandle.finite(n)) is expected

    def test_infinite(self):
        """Test identities of L_inf"""
        linf = AlgebraHandle.infinite()

        assert identity_oracle(parse("x1 (x2 x3) + x1 x2 x3 - x1 x3 x2"), linf)
        assert not identity_oracle(parse("x1 x2 x3 x4 - x2 x1 x3 x4"), linf)

    def test_zero_polynomial(self):
        """Test that zero is an identity"""
        assert identity_oracle(parse("0"), AlgebraHandle.finite(2))

    def test_rationals_only(self):
        """Test that the oracle refuses F_p"""
        with pytest.raises(UnsupportedFieldError):
            identity_oracle(parse("x1", ScalarField.prime(3)), AlgebraHandle.finite(2))

    @pytest.mark.parametrize(
        "text",
        ["x2 x1 x3 + 2 x1 (x2 x3) - x3 x1 x2", "x1 (x2 x1) x1 + x2 x1^3", "(x1 x2) (x1 x2)"],
    )
    def test_normal_form_difference_is_identity(self, text):
        """Test that f - lift(NF(f)) vanishes on L_4"""
        f = parse(text)
        l4 = AlgebraHandle.finite(4)

        assert identity_oracle(f - reduce(f, l4).lift(), l4)


class TestGenericCoordinates:
    """Test suite for generic evaluation and ranks"""

    def test_coordinates_of_square(self):
        """Test x1^2 = t11 * (t11 e2 + t12 e3) on L_3"""
        coordinates = generic_evaluate(parse("x1^2"), 1, 3)

        assert not coordinates[0]
        assert len(coordinates[1].terms()) == 1
        assert len(coordinates[2].terms()) == 1

    def test_canonical_words_are_independent(self):
        """Test that the L_3 catalog in two variables has full rank"""
        catalog = basis_monomials(3, 2)

        assert coordinate_rank(catalog.words(), 2, 3) == catalog.word_count

    def test_dependent_words(self):
        """Test that words equal on L_3 drop the rank"""
        assert coordinate_rank([(1, 2, 3), (2, 1, 3), (3, 2, 1)], 3, 3) == 1

    def test_multilinear_words_of_l_inf(self):
        """Test that c_4(L_inf) words are independent on L_5"""
        words = multilinear_words(AlgebraHandle.infinite(), 4)

        assert coordinate_rank(words, 4, 5) == 4

    def test_empty(self):
        """Test the rank of no words"""
        assert coordinate_rank([], 2, 3) == 0
