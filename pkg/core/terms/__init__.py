"""
Free nonassociative terms, polynomials and their text grammar.
"""

from core.terms.parser import format_polynomial, format_term, format_word, parse
from core.terms.polynomial import (
    FreePolynomial,
    LNPolynomial,
    MultiDegree,
    add,
    free_mul,
    multidegree_of,
    scale,
    split_multihomogeneous,
)
from core.terms.term import Leaf, Node, Term, Word, term_to_word, word_to_term

__all__ = [
    "FreePolynomial",
    "LNPolynomial",
    "Leaf",
    "MultiDegree",
    "Node",
    "Term",
    "Word",
    "add",
    "format_polynomial",
    "format_term",
    "format_word",
    "free_mul",
    "multidegree_of",
    "parse",
    "scale",
    "split_multihomogeneous",
    "term_to_word",
    "word_to_term",
]
