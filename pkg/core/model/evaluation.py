"""
Evaluation of free polynomials on algebra elements.

This is the semantic reference for the rewrite engine and never consults it.
"""

from typing import Dict, Mapping, Optional

from core.algebra import AlgebraHandle
from core.exceptions import InvalidArgumentError, UnassignedVariableError
from core.model.element import Element, mul
from core.terms.polynomial import FreePolynomial
from core.terms.term import Leaf, Term


def evaluate(
    f: FreePolynomial,
    assignment: Mapping[int, Element],
    algebra: Optional[AlgebraHandle] = None,
) -> Element:
    """
    Substitute elements for the variables of f.

    Args:
        f: Polynomial to evaluate
        assignment: Variable index -> Element, all in one algebra and field
        algebra: Needed only when the assignment is empty

    Returns:
        Element: The value of f

    Raises:
        UnassignedVariableError: a variable of f has no value
        AlgebraMismatchError / FieldMismatchError: inconsistent inputs
    """
    values = list(assignment.values())
    if values:
        algebra = algebra or values[0].algebra
        for value in values:
            algebra.check_same(value.algebra)
            f.field.check_same(value.field)
    elif algebra is None:
        raise InvalidArgumentError("evaluate needs an algebra when the assignment is empty")

    missing = [v for v in f.variables() if v not in assignment]
    if missing:
        raise UnassignedVariableError(
            f"No value assigned to x{missing[0]}", details={"variables": missing}
        )

    cache: Dict[Term, Element] = {}

    def value_of(term: Term) -> Element:
        if term in cache:
            return cache[term]
        if isinstance(term, Leaf):
            result = assignment[term.var]
        else:
            result = mul(value_of(term.left), value_of(term.right))
        cache[term] = result
        return result

    total = Element.zero(algebra, f.field)
    for term, coeff in f.items():
        total = total + value_of(term).scale(coeff)
    return total
