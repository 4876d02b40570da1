"""
Free nonassociative terms.

A term is a full binary tree whose leaves are variable indices. Left-normed
terms (((x_a x_b) x_c) ...) are written as plain index tuples (words).
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Tuple, Union

from core.exceptions import InvalidArgumentError

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Leaf:
    var: int

    def __post_init__(self) -> None:
        if self.var < 1:
            raise InvalidArgumentError(
                f"Variable index must be >= 1, got {self.var}", details={"var": self.var}
            )

    @property
    def degree(self) -> int:
        return 1


@dataclass(frozen=True)
class Node:
    left: "Term"
    right: "Term"
    degree: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "degree", self.left.degree + self.right.degree)


Term = Union[Leaf, Node]


def leaves(term: Term) -> Word:
    """Variable indices read left to right."""
    if isinstance(term, Leaf):
        return (term.var,)
    return leaves(term.left) + leaves(term.right)


def variable_counts(term: Term) -> Counter:
    return Counter(leaves(term))


def internal_nodes(term: Term) -> int:
    return term.degree - 1


def word_to_term(word: Word) -> Term:
    if not word:
        raise InvalidArgumentError("A left-normed word needs at least one letter")
    result: Term = Leaf(word[0])
    for var in word[1:]:
        result = Node(result, Leaf(var))
    return result


def term_to_word(term: Term) -> Union[Word, None]:
    """The word of a left-normed term, or None when some right child is not a leaf."""
    tail = []
    while isinstance(term, Node):
        if not isinstance(term.right, Leaf):
            return None
        tail.append(term.right.var)
        term = term.left
    return (term.var,) + tuple(reversed(tail))


def is_left_normed(term: Term) -> bool:
    return term_to_word(term) is not None


def _shape(term: Term) -> tuple:
    if isinstance(term, Leaf):
        return ()
    return (_shape(term.left), _shape(term.right))


def sort_key(term: Term) -> tuple:
    """Deterministic output order: degree, then leaves, then bracketing."""
    return (term.degree, leaves(term), _shape(term))
