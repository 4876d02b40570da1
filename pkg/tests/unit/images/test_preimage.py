"""
Unit Tests for Constructive Preimages

Every Assignment returned by preimage() has already been re-evaluated; these
tests pin the concrete witnesses and the refusal reasons.
"""

import pytest

from core.algebra import AlgebraHandle
from core.exceptions import FieldMismatchError
from core.images.preimage import (
    Assignment,
    NeedsRoot,
    NotInImage,
    NotInImageReason,
    preimage,
    root_exponent,
    spread_exponents,
)
from core.model.element import parse_element
from core.model.evaluation import evaluate
from core.scalars import ScalarField
from core.terms.parser import parse
from core.terms.polynomial import MultiDegree


L3 = AlgebraHandle.finite(3)
L5 = AlgebraHandle.finite(5)
L6 = AlgebraHandle.finite(6)
LINF = AlgebraHandle.infinite()


class TestPreimage:
    """Test suite for preimage() over the rationals"""

    @pytest.fixture
    def q(self):
        """Rational scalars"""
        return ScalarField.rationals()

    def solve(self, text, algebra, target, field):
        return preimage(parse(text, field), algebra, parse_element(target, algebra, field))

    def test_commutator_hits_e3(self, q):
        """Test the sum-zero witness x1 = e2, x2 = e1"""
        result = self.solve("x1 x2 - x2 x1", L3, "e3", q)

        assert isinstance(result, Assignment)
        assert result.format() == "x1 = e2, x2 = e1"

    def test_commutator_misses_e2(self, q):
        """Test that the sum-zero image starts at e_(d+1)"""
        result = self.solve("x1 x2 - x2 x1", L3, "e2 + e3", q)

        assert result == NotInImage(NotInImageReason.WRONG_SUPPORT, "target must lie in L^3")

    def test_linear_head(self, q):
        """Test a_1 = beta_d / sum(alpha)"""
        result = self.solve("x1 x2", L3, "e2 + 5*e3", q)

        assert result.format() == "x1 = e1 + 5*e2, x2 = e1"

    def test_cone_with_rational_root(self, q):
        """Test x1^2 hitting 4e2 + 6e3"""
        result = self.solve("x1^2", L3, "4*e2 + 6*e3", q)

        assert result.format() == "x1 = 2*e1 + 3*e2"

    def test_cone_rejects_zero_leading_coefficient(self, q):
        """Test that nonzero cone points have beta_d != 0"""
        result = self.solve("x1^2", L3, "e3", q)

        assert isinstance(result, NotInImage)
        assert result.reason is NotInImageReason.BETA_D_ZERO

    def test_cone_needs_square_root(self, q):
        """Test that 2 has no rational square root"""
        result = self.solve("x1^2", L3, "2*e2", q)

        assert result == NeedsRoot(2, q.from_int(2))

    def test_cone_wrong_support(self, q):
        """Test a target below degree d"""
        result = self.solve("x1^2", L3, "e1", q)

        assert result.reason is NotInImageReason.WRONG_SUPPORT

    def test_zero_target(self, q):
        """Test that zero is always reached by the zero assignment"""
        result = self.solve("x1 x2^2", L3, "0", q)

        assert isinstance(result, Assignment)
        assert all(value.is_zero for value in result.values.values())
        assert sorted(result.values) == [1, 2]

    def test_identity_has_no_nonzero_values(self, q):
        """Test a nonzero target of an identity"""
        result = self.solve("x1 (x2 x3)", L3, "e3", q)

        assert result.reason is NotInImageReason.IDENTITY_NONZERO_TARGET

    def test_sum_zero_with_square(self, q):
        """Test the sum-zero witness when the head variable is repeated"""
        f = parse("x1 x1 x2 - x2 x1 x1")
        target = parse_element("e4 - 2*e6", LINF, q)
        result = preimage(f, LINF, target)

        assert isinstance(result, Assignment)
        assert evaluate(f, result.values, LINF) == target

    def test_l_inf_cone(self, q):
        """Test a cone witness on L_inf"""
        result = self.solve("x1^2", LINF, "9*e2 + e5", q)

        assert result.format() == "x1 = 3*e1 + 1/3*e4"


    def test_coprime_multiplicities_reach_non_squares(self, q):
        """Test that x1^2 x2^3 hits 2e5 by scaling both variables"""
        f = parse("x1^2 x2^3")
        target = parse_element("2*e5", L6, q)
        result = preimage(f, L6, target)

        assert isinstance(result, Assignment)
        assert result.format() == "x1 = 1/2*e1, x2 = 2*e1"
        assert evaluate(f, result.values, L6) == target

    def test_coprime_multiplicities_with_tail(self, q):
        """Test the tail solve when the other variables are rescaled"""
        f = parse("x1^2 x2^3")
        target = parse_element("-3*e5 + e6", L6, q)
        result = preimage(f, L6, target)

        assert isinstance(result, Assignment)
        assert evaluate(f, result.values, L6) == target

    def test_head_root_preferred(self, q):
        """Test that a square value keeps the other variables at e1"""
        result = self.solve("x1^2 x2^3", L6, "4*e5", q)

        assert result.format() == "x1 = 2*e1, x2 = e1"

    def test_common_multiplicity_needs_root(self, q):
        """Test that x1^2 x2^2 only reaches squares times sum(alpha)"""
        result = self.solve("x1^2 x2^2", L5, "2*e4", q)

        assert result == NeedsRoot(2, q.from_int(2))

    def test_gcd_exponent_reported(self, q):
        """Test that x1^4 x2^6 needs a square root, not a fourth root"""
        result = self.solve("x1^4 x2^6", LINF, "2*e10", q)
        reached = self.solve("x1^4 x2^6", LINF, "9*e10", q)

        assert result == NeedsRoot(2, q.from_int(2))
        assert isinstance(reached, Assignment)

    def test_zero_alpha_linear_variable_reaches_everything(self, q):
        """Test a cone whose linear variable never heads a word"""
        f = parse("x1^2 x2")
        target = parse_element("3*e3", L5, q)
        result = preimage(f, L5, target)

        assert isinstance(result, Assignment)
        assert evaluate(f, result.values, L5) == target
    def test_fields_must_match(self, q):
        """Test that target and polynomial share the field"""
        f5 = ScalarField.prime(5)

        with pytest.raises(FieldMismatchError):
            preimage(parse("x1^2"), L3, parse_element("e2", L3, f5))


class TestPreimageOverPrimeFields:
    """Test suite for preimage() over F_p"""

    @pytest.fixture
    def f5(self):
        """The field F_5"""
        return ScalarField.prime(5)

    def test_square_root_found_by_search(self, f5):
        """Test that 4 has the root 2 in F_5"""
        f = parse("x1^2", f5)
        target = parse_element("4*e2 + e3", L3, f5)
        result = preimage(f, L3, target)

        assert isinstance(result, Assignment)
        assert result.values[1].coefficient(1) == f5.from_int(2)
        assert evaluate(f, result.values, L3) == target

    def test_non_residue(self, f5):
        """Test that 2 is not a square in F_5"""
        result = preimage(parse("x1^2", f5), L3, parse_element("2*e2", L3, f5))

        assert result == NeedsRoot(2, f5.from_int(2))

    def test_coprime_multiplicities_over_f5(self, f5):
        """Test that 2 is reached through the cube of x2 although it is no square"""
        f = parse("x1^2 x2^3", f5)
        target = parse_element("2*e5 + e6", L6, f5)
        result = preimage(f, L6, target)

        assert isinstance(result, Assignment)
        assert evaluate(f, result.values, L6) == target


class TestRootExponent:
    """Test suite for root_exponent() and spread_exponents()"""

    @pytest.mark.parametrize(
        "counts,expected",
        [({1: 2}, 2), ({1: 2, 2: 3}, 1), ({1: 4, 2: 6}, 2), ({1: 6, 2: 10, 3: 15}, 1)],
    )
    def test_gcd_of_multiplicities(self, counts, expected):
        """Test the exponent of the reachable e_d values"""
        assert root_exponent(MultiDegree.from_counts(counts)) == expected

    @pytest.mark.parametrize(
        "counts,head",
        [({1: 2, 2: 3}, 1), ({1: 3, 2: 2}, 2), ({1: 4, 2: 6}, 1), ({1: 6, 2: 10, 3: 15}, 2)],
    )
    def test_spread_reaches_gcd(self, counts, head):
        """Test that sum k_l d_l equals the gcd"""
        multidegree = MultiDegree.from_counts(counts)
        exponents = spread_exponents(multidegree, head)

        assert set(exponents) == set(counts)
        assert sum(k * counts[var] for var, k in exponents.items()) == root_exponent(
            multidegree
        )

    def test_head_alone_when_it_is_the_gcd(self):
        """Test that other variables keep exponent 0 when d_j divides them"""
        exponents = spread_exponents(MultiDegree.from_counts({1: 2, 2: 4}), 1)

        assert exponents == {1: 1, 2: 0}
