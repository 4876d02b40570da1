"""
Left-normed rewriting.

Applies the Leibniz rule u(w x) -> (u w) x - (u x) w until every monomial is a
left-normed word. The product of left-normed words u * w is u followed by
signed rearrangements of w, so each right factor w is expanded once into a
template of suffixes that every left factor shares. Rule applications only
ever produce integer coefficients, so templates are cached over the integers
and scaled at the end.
"""

from collections import defaultdict
from functools import lru_cache
from typing import Dict, Optional, Set, Tuple

from core.terms.polynomial import FreePolynomial, LNPolynomial
from core.terms.term import Leaf, Term, Word

IntTable = Dict[Word, int]
Template = Tuple[Tuple[Word, int], ...]


def _prune(table: Dict[Word, int]) -> IntTable:
    return {word: coeff for word, coeff in table.items() if coeff}


@lru_cache(maxsize=65536)
def _template(w: Word) -> Template:
    """Signed suffixes s with u * w = sum c (u + s) for every left-normed word u."""
    if len(w) == 1:
        return ((w, 1),)
    head, last = w[:-1], w[-1:]
    table: Dict[Word, int] = defaultdict(int)
    for suffix, coeff in _template(head):
        table[suffix + last] += coeff
        table[last + suffix] -= coeff
    return tuple(_prune(table).items())


def _rule_applications(w: Word) -> Set[Word]:
    # Opening w applies the rule once for w and once per prefix of length >= 2.
    return {w[:length] for length in range(2, len(w) + 1)}


def _expand(term: Term, applied: Optional[Set[Word]] = None) -> IntTable:
    if isinstance(term, Leaf):
        return {(term.var,): 1}
    left = _expand(term.left, applied)
    right = _expand(term.right, applied)
    table: Dict[Word, int] = defaultdict(int)
    for w, b in right.items():
        if applied is not None:
            applied.update(_rule_applications(w))
        template = _template(w)
        for u, a in left.items():
            for suffix, coeff in template:
                table[u + suffix] += a * b * coeff
    return _prune(table)


@lru_cache(maxsize=16384)
def _left_norm_term(term: Term) -> Tuple[Tuple[Word, int], ...]:
    return tuple(_expand(term).items())


def left_norm(f: FreePolynomial) -> LNPolynomial:
    """
    Rewrite f into a combination of left-normed words.

    The result is congruent to f modulo the T-ideal generated by the Leibniz
    identity x(yz) = (xy)z - (xz)y.
    """
    field = f.field
    return LNPolynomial.collect(
        field,
        (
            (word, coeff * field.from_int(count))
            for term, coeff in f.items()
            for word, count in _left_norm_term(term)
        ),
    )


def left_norm_traced(f: FreePolynomial) -> Tuple[LNPolynomial, int]:
    """
    left_norm plus the number of Leibniz rule applications it performed.

    Each distinct right factor of length >= 2 is opened once per call, so the
    count is the number of distinct right factors and prefixes the expansion
    needed.
    """
    field = f.field
    applied: Set[Word] = set()
    pairs = []
    for term, coeff in f.items():
        table = _expand(term, applied)
        pairs.extend((word, coeff * field.from_int(count)) for word, count in table.items())
    return LNPolynomial.collect(field, pairs), len(applied)
