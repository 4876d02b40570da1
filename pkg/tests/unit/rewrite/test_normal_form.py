"""
Unit Tests for Normal Forms and Head Coefficients
"""

import pytest

from core.algebra import AlgebraHandle
from core.exceptions import NotHomogeneousError, UnsupportedFieldError
from core.rewrite.normal_form import (
    canonical_word,
    head_coefficients,
    head_word,
    is_identity,
    normal_form,
    reduce,
)
from core.scalars import ScalarField
from core.terms.parser import parse
from core.terms.polynomial import MultiDegree


L2 = AlgebraHandle.finite(2)
L3 = AlgebraHandle.finite(3)
L4 = AlgebraHandle.finite(4)
LINF = AlgebraHandle.infinite()


class TestCanonicalWord:
    """Test suite for canonical word representatives"""

    @pytest.mark.parametrize(
        "word, algebra, expected",
        [
            ((2, 1, 3), L3, (1, 2, 3)),
            ((1, 3, 2), L4, (1, 2, 3)),
            ((3, 2, 1), L4, (3, 1, 2)),
            ((1, 2, 3), L2, None),
            ((2, 1), L2, (1, 2)),
            ((5,), L3, (5,)),
            ((3, 2, 1, 1, 4), LINF, (3, 1, 1, 2, 4)),
        ],
    )
    def test_canonical_word(self, word, algebra, expected):
        """Test truncation, full sort at degree n and tail sort below"""
        assert canonical_word(word, algebra) == expected


class TestNormalForm:
    """Test suite for reduce()"""

    def test_leibniz_identity_vanishes(self):
        """Test x1 (x2 x3) on every algebra"""
        for algebra in (L2, L3, L4, LINF):
            assert reduce(parse("x1 (x2 x3)"), algebra).is_zero

    def test_tail_is_sorted(self):
        """Test the canonical text on L_inf"""
        assert reduce(parse("x2 x3 x1"), LINF).text == "x2 x1 x3"

    def test_commutator_survives_below_degree_n(self):
        """Test that x1 x2 - x2 x1 is not zero on L_3"""
        nf = reduce(parse("x1 x2 - x2 x1"), L3)

        assert nf.text == "x1 x2 - x2 x1"

    def test_multidegree_kept_when_zero(self):
        """Test that a vanishing form remembers its multidegree"""
        nf = reduce(parse("x1 x2 x3"), L2)

        assert nf.is_zero
        assert nf.multidegree == MultiDegree.from_counts({1: 1, 2: 1, 3: 1})

    def test_equality_includes_algebra(self):
        """Test that forms on different algebras differ"""
        f = parse("x1 x2")

        assert reduce(f, L3) == reduce(f, L3)
        assert reduce(f, L3) != reduce(f, L4)
        assert reduce(f, L3).as_ln() == reduce(f, L4).as_ln()

    def test_sum_of_forms(self):
        """Test that adding forms stays canonical"""
        total = reduce(parse("x1 x2 x3"), L3) + reduce(parse("x2 x1 x3"), L3)

        assert total.text == "2 x1 x2 x3"

    @pytest.mark.parametrize(
        "text",
        ["x1 x2 - x2 x1", "x2 x3 x1 + 1/2 x3 x1 x2", "x1 (x2 (x3 x4))", "x2^3 + x1 x2", "x1"],
    )
    @pytest.mark.parametrize("algebra", [L2, L3, L4, LINF])
    def test_normal_form_is_idempotent(self, text, algebra):
        """Test that normalizing a normal form again changes nothing"""
        nf = reduce(parse(text), algebra)
        again = normal_form(nf.as_ln(), algebra)

        assert again == nf
        assert again.text == nf.text


class TestIsIdentity:
    """Test suite for identity decisions"""

    @pytest.mark.parametrize(
        "text, algebra, expected",
        [
            ("x1 (x2 x3)", LINF, True),
            ("x1 x2 x3", L2, True),
            ("x1 x2 x3", L3, False),
            ("x1 x2 - x2 x1", L2, True),
            ("x1 x2 - x2 x1", L3, False),
            ("x1 x2 x3 - x2 x1 x3", L3, True),
            ("x1 x2 x3 - x2 x1 x3", L4, False),
            ("x1 x2 x3 - x1 x3 x2", LINF, True),
            ("x1 x1 + x1 (x1 x1)", L3, False),
            ("x1 (x1 x1) + x1 x2 x3 x4", L3, True),
        ],
    )
    def test_identity(self, text, algebra, expected):
        """Test identities of L_n and L_inf"""
        assert is_identity(parse(text), algebra) is expected

    def test_rationals_only(self):
        """Test that identity testing refuses F_p"""
        with pytest.raises(UnsupportedFieldError):
            is_identity(parse("x1 x2", ScalarField.prime(2)), L3)


class TestHeadCoefficients:
    """Test suite for head_coefficients()"""

    @pytest.fixture
    def q(self):
        """Rational scalars"""
        return ScalarField.rationals()

    def test_head_word(self):
        """Test the head word of each variable"""
        md = MultiDegree.from_counts({1: 2, 2: 1, 3: 1})

        assert head_word(2, md) == (2, 1, 1, 3)
        assert head_word(1, md) == (1, 1, 2, 3)

    def test_commutator(self, q):
        """Test alpha values of x1 x2 - x2 x1 below degree n"""
        head = head_coefficients(reduce(parse("x1 x2 - x2 x1"), L3))

        assert head.alpha(1) == q.one
        assert head.alpha(2) == -q.one
        assert head.total == q.zero
        assert head.degree == 2
        assert head.linear_variables == (1, 2)

    def test_top_degree_mass_on_smallest_variable(self, q):
        """Test that at degree n all mass goes to the smallest variable"""
        head = head_coefficients(reduce(parse("x1 x2 + x2 x1"), L2))

        assert head.alpha(1) == q.from_int(2)
        assert head.alpha(2) == q.zero
        assert head.total == q.from_int(2)

    def test_above_degree_n(self):
        """Test that every alpha vanishes above degree n"""
        head = head_coefficients(reduce(parse("x1 x2 x3"), L2))

        assert head.vanishes

    def test_square(self, q):
        """Test x1^2 x2 on L_inf"""
        head = head_coefficients(reduce(parse("x1 x1 x2 - 2 x2 x1 x1"), LINF))

        assert dict(head.alphas) == {1: q.one, 2: q.from_int(-2)}
        assert head.linear_variables == (2,)
        assert head.to_dict()["sum"] == "-1"

    def test_inhomogeneous(self):
        """Test that mixed multidegrees are rejected"""
        with pytest.raises(NotHomogeneousError):
            head_coefficients(reduce(parse("x1 + x1 x2"), L3))
