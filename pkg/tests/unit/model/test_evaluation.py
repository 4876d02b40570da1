"""
Unit Tests for Polynomial Evaluation
"""

import pytest

from core.algebra import AlgebraHandle
from core.exceptions import FieldMismatchError, InvalidArgumentError, UnassignedVariableError
from core.model.element import Element, parse_element
from core.model.evaluation import evaluate
from core.scalars import ScalarField
from core.terms.parser import parse


class TestEvaluate:
    """Test suite for evaluate()"""

    @pytest.fixture
    def q(self):
        """Rational scalars"""
        return ScalarField.rationals()

    @pytest.fixture
    def l3(self):
        """The algebra L_3"""
        return AlgebraHandle.finite(3)

    def test_commutator_on_basis(self, q, l3):
        """Test x1 x2 - x2 x1 at x1 = e2, x2 = e1"""
        values = {1: Element.basis(l3, q, 2), 2: Element.basis(l3, q, 1)}

        assert evaluate(parse("x1 x2 - x2 x1"), values) == Element.basis(l3, q, 3)

    def test_leibniz_identity_vanishes(self, q):
        """Test x1 (x2 x3) on arbitrary elements"""
        l5 = AlgebraHandle.finite(5)
        values = {
            1: parse_element("e1 + 2*e2 - e5", l5, q),
            2: parse_element("3*e1 + e3", l5, q),
            3: parse_element("-1/2*e1 + e4", l5, q),
        }

        assert evaluate(parse("x1 (x2 x3)"), values).is_zero

    def test_square(self, q):
        """Test x1^2 at a1 e1 + a2 e2 + a3 e3"""
        l3 = AlgebraHandle.finite(3)
        value = evaluate(parse("x1^2"), {1: parse_element("2*e1 + 3*e2 + 5*e3", l3, q)})

        assert value.format() == "4*e2 + 6*e3"

    def test_coefficients_are_linear(self, q, l3):
        """Test that the polynomial coefficients scale the value"""
        values = {1: Element.basis(l3, q, 1)}

        assert evaluate(parse("-3/2 x1 x1"), values).format() == "-3/2*e2"

    def test_extra_assignments_are_ignored(self, q, l3):
        """Test that unused variables may be assigned"""
        values = {1: Element.basis(l3, q, 1), 7: Element.basis(l3, q, 2)}

        assert evaluate(parse("x1"), values) == Element.basis(l3, q, 1)

    def test_unassigned_variable(self, q, l3):
        """Test that every variable needs a value"""
        with pytest.raises(UnassignedVariableError) as exc_info:
            evaluate(parse("x1 x2"), {1: Element.basis(l3, q, 1)})

        assert exc_info.value.details == {"variables": [2]}

    def test_field_mismatch(self, l3):
        """Test that polynomial and elements share a field"""
        f2 = ScalarField.prime(2)

        with pytest.raises(FieldMismatchError):
            evaluate(parse("x1"), {1: Element.basis(l3, f2, 1)})

    def test_zero_polynomial_needs_algebra(self, q, l3):
        """Test evaluation with an empty assignment"""
        assert evaluate(parse("0"), {}, l3) == Element.zero(l3, q)
        with pytest.raises(InvalidArgumentError):
            evaluate(parse("0"), {})

    def test_l_inf_values_grow(self, q):
        """Test that L_inf keeps every shifted coefficient"""
        linf = AlgebraHandle.infinite()
        x1 = parse_element("e1 + e40", linf, q)

        assert evaluate(parse("x1 x1 x1"), {1: x1}).format() == "e3 + e42"
