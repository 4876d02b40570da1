"""
Unit Tests for Elements of L_n and L_inf
"""

import pytest

from core.algebra import AlgebraHandle
from core.exceptions import AlgebraMismatchError, InvalidArgumentError, ParseError
from core.model.element import (
    Element,
    parse_assignment,
    parse_element,
    power_ideal,
    right_power,
    right_power_closed_form,
)
from core.scalars import ScalarField


class TestMultiplication:
    """Test suite for the multiplication table"""

    @pytest.fixture
    def q(self):
        """Rational scalars"""
        return ScalarField.rationals()

    @pytest.fixture
    def l4(self):
        """The algebra L_4"""
        return AlgebraHandle.finite(4)

    def e(self, algebra, field, index):
        return Element.basis(algebra, field, index)

    def test_e1_e1(self, q, l4):
        """Test e1 e1 = e2"""
        assert self.e(l4, q, 1) * self.e(l4, q, 1) == self.e(l4, q, 2)

    def test_only_e1_acts_on_the_right(self, q, l4):
        """Test e1 e2 = 0"""
        assert (self.e(l4, q, 1) * self.e(l4, q, 2)).is_zero

    def test_truncation_at_n(self, q, l4):
        """Test e4 e1 = 0 on L_4"""
        assert (self.e(l4, q, 4) * self.e(l4, q, 1)).is_zero

    def test_no_truncation_on_l_inf(self, q):
        """Test e9 e1 = e10 on L_inf"""
        linf = AlgebraHandle.infinite()

        assert self.e(linf, q, 9) * self.e(linf, q, 1) == self.e(linf, q, 10)

    def test_bilinear_product(self, q, l4):
        """Test (a) (b) = b_1 * shift(a)"""
        a = parse_element("e1 + 2*e3", l4, q)
        b = parse_element("3*e1 + 7*e2", l4, q)

        assert (a * b).format() == "3*e2 + 6*e4"

    def test_mismatched_algebras(self, q, l4):
        """Test that elements of different algebras do not multiply"""
        with pytest.raises(AlgebraMismatchError):
            self.e(l4, q, 1) * self.e(AlgebraHandle.finite(3), q, 1)

    def test_index_outside_algebra(self, q, l4):
        """Test that e5 does not exist in L_4"""
        with pytest.raises(InvalidArgumentError):
            Element(l4, q, {5: q.one})

    def test_right_power_example(self, q, l4):
        """Test (e1 + e2)(2e1 + 5e3)^(2) = 4e3 + 4e4"""
        z = parse_element("e1 + e2", l4, q)
        w = parse_element("2*e1 + 5*e3", l4, q)

        assert right_power(z, w, 2).format() == "4*e3 + 4*e4"
        assert right_power_closed_form(z, w, 2) == right_power(z, w, 2)

    def test_right_power_vanishes_without_b1(self, q, l4):
        """Test that w with b_1 = 0 kills every right power"""
        z = parse_element("e1 + e2", l4, q)
        w = parse_element("e2 + e3", l4, q)

        assert right_power(z, w, 1).is_zero

    def test_right_power_beyond_n(self, q, l4):
        """Test that s >= n gives zero on L_n"""
        z = parse_element("e1", l4, q)
        w = parse_element("e1", l4, q)

        assert right_power(z, w, 4).is_zero
        assert right_power_closed_form(z, w, 4).is_zero

    def test_right_power_exponent(self, q, l4):
        """Test that s must be positive"""
        with pytest.raises(InvalidArgumentError):
            right_power(self.e(l4, q, 1), self.e(l4, q, 1), 0)


class TestElementText:
    """Test suite for element text and JSON"""

    @pytest.fixture
    def q(self):
        """Rational scalars"""
        return ScalarField.rationals()

    def test_format_omits_zeros(self, q):
        """Test the text form"""
        coeffs = {1: q.zero, 2: q.from_int(-1), 4: q.from_ratio(2, 5)}
        element = Element(AlgebraHandle.finite(4), q, coeffs)

        assert element.format() == "-e2 + 2/5*e4"

    def test_zero_text(self, q):
        """Test the text of zero"""
        assert Element.zero(AlgebraHandle.finite(2), q).format() == "0"

    def test_parse_element(self, q):
        """Test signs, fractions and repeated indices"""
        element = parse_element("-e1 + 3/2 e2 - 1/2*e2", AlgebraHandle.infinite(), q)

        assert element.as_dict() == {1: -q.one, 2: q.one}

    def test_parse_element_error(self, q):
        """Test that a bare constant is rejected"""
        with pytest.raises(ParseError) as exc_info:
            parse_element("e1 + 3", AlgebraHandle.finite(3), q)

        assert exc_info.value.position == 5

    def test_json_document(self, q):
        """Test the JSON layout"""
        element = parse_element("e1 + 2/5*e3", AlgebraHandle.finite(4), q)

        assert element.to_json() == {"algebra": {"n": 4}, "coeffs": {"1": "1", "3": "2/5"}}
        assert Element.from_json(element.to_json(), q) == element

    def test_json_document_l_inf(self, q):
        """Test the L_inf marker"""
        element = parse_element("e7", AlgebraHandle.infinite(), q)

        assert element.to_json() == {"algebra": "inf", "coeffs": {"7": "1"}}

    def test_parse_assignment(self, q):
        """Test x<k>=<element>"""
        var, element = parse_assignment("x2=3*e1", AlgebraHandle.finite(3), q)

        assert var == 2
        assert element.format() == "3*e1"

    def test_parse_assignment_offsets_position(self, q):
        """Test that errors point into the whole assignment text"""
        with pytest.raises(ParseError) as exc_info:
            parse_assignment("x1=e1 $", AlgebraHandle.finite(3), q)

        assert exc_info.value.position == 6

    def test_parse_assignment_needs_variable(self, q):
        """Test malformed assignment text"""
        with pytest.raises(ParseError):
            parse_assignment("y1=e1", AlgebraHandle.finite(3), q)

    def test_prime_field_residues(self):
        """Test that F_p coefficients print as residues"""
        f5 = ScalarField.prime(5)
        element = parse_element("-e1", AlgebraHandle.finite(2), f5)

        assert element.format() == "4*e1"


class TestPowerIdeal:
    """Test suite for L^k"""

    @pytest.fixture
    def q(self):
        """Rational scalars"""
        return ScalarField.rationals()

    def test_contains(self, q):
        """Test support checks"""
        l5 = AlgebraHandle.finite(5)
        ideal = power_ideal(l5, 3)

        assert ideal.contains(parse_element("e3 + e5", l5, q))
        assert not ideal.contains(parse_element("e2", l5, q))
        assert ideal.contains(Element.zero(l5, q))

    @pytest.mark.parametrize("k, expected", [(1, 4), (2, 3), (4, 1), (5, 0), (7, 0)])
    def test_dimension(self, k, expected):
        """Test dim L^k = n + 1 - k on L_4"""
        assert power_ideal(AlgebraHandle.finite(4), k).dimension == expected

    def test_infinite_dimension(self):
        """Test that L^k of L_inf has no finite dimension"""
        assert power_ideal(AlgebraHandle.infinite(), 2).dimension is None

    def test_k_must_be_positive(self):
        """Test the index range"""
        with pytest.raises(InvalidArgumentError):
            power_ideal(AlgebraHandle.finite(3), 0)

    def test_products_move_down_the_series(self, q):
        """Test L^k L inside L^(k+1)"""
        l5 = AlgebraHandle.finite(5)
        u = parse_element("2*e2 + e4", l5, q)
        v = parse_element("3*e1 + e2", l5, q)

        assert power_ideal(l5, 3).contains(u * v)
