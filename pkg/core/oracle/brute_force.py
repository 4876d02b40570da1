"""
Exhaustive image computation over F_p.

Every assignment of vectors in F_p^n to the variables of f is evaluated with
numpy in fixed-size batches. Assignment number a encodes coordinate i of the
v-th variable as the base-p digit at position v*n + i; image points are
encoded the same way (sum_i c_i p^(i-1)) and deduplicated with np.unique.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import numpy as np

from config.config_validator import OracleConfig
from config.logging_config import get_logger
from config.settings import get_settings
from core.algebra import AlgebraHandle
from core.exceptions import InvalidArgumentError, SearchSpaceExceededError
from core.model.element import Element
from core.scalars import ScalarField
from core.terms.polynomial import FreePolynomial
from core.terms.term import Leaf, Term

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class ImageSet:
    """The exact image of a polynomial on L_n over F_p, as sorted point codes."""

    n: int
    p: int
    codes: np.ndarray

    @property
    def algebra(self) -> AlgebraHandle:
        return AlgebraHandle.finite(self.n)

    @property
    def field(self) -> ScalarField:
        return ScalarField.prime(self.p)

    def __len__(self) -> int:
        return int(self.codes.size)

    def coordinates(self) -> np.ndarray:
        """Array of shape (size, n); column i-1 holds the e_i coefficient."""
        powers = self.p ** np.arange(self.n, dtype=np.int64)
        return (self.codes[:, None] // powers[None, :]) % self.p

    def points(self) -> Iterator[Tuple[int, ...]]:
        for row in self.coordinates():
            yield tuple(int(c) for c in row)

    def as_set(self) -> FrozenSet[Tuple[int, ...]]:
        return frozenset(self.points())

    def elements(self) -> List[Element]:
        field = self.field
        algebra = self.algebra
        return [
            Element.from_dense(algebra, field, [field.from_int(c) for c in point])
            for point in self.points()
        ]

    def encode(self, element: Element) -> int:
        element.algebra.check_same(self.algebra)
        field = self.field
        value = element if element.field == field else element.map_field(field)
        return sum(field.to_residue(c) * self.p ** (i - 1) for i, c in value.items())

    def __contains__(self, element: Element) -> bool:
        code = self.encode(element)
        position = int(np.searchsorted(self.codes, code))
        return position < self.codes.size and int(self.codes[position]) == code


def _evaluate_batch(
    terms: List[Tuple[Term, int]],
    positions: Dict[int, int],
    n: int,
    p: int,
    start: int,
    stop: int,
) -> np.ndarray:
    index = np.arange(start, stop, dtype=np.int64)
    slots = len(positions) * n
    digits = (index[None, :] // (p ** np.arange(slots, dtype=np.int64))[:, None]) % p
    cache: Dict[Term, np.ndarray] = {}

    def value_of(term: Term) -> np.ndarray:
        if term not in cache:
            if isinstance(term, Leaf):
                offset = positions[term.var] * n
                cache[term] = digits[offset: offset + n]
            else:
                left = value_of(term.left)
                right = value_of(term.right)
                product = np.zeros_like(left)
                product[1:] = (left[:-1] * right[0]) % p
                cache[term] = product
        return cache[term]

    total = np.zeros((n, stop - start), dtype=np.int64)
    for term, coeff in terms:
        total = (total + coeff * value_of(term)) % p
    powers = p ** np.arange(n, dtype=np.int64)
    return np.unique((total * powers[:, None]).sum(axis=0))


def brute_force_image(
    f: FreePolynomial, n: int, p: int, oracle: Optional[OracleConfig] = None
) -> ImageSet:
    """
    The exact set {f(v_1, ..., v_m) : v_i in F_p^n} on L_n.

    Rational coefficients are reduced modulo p first.

    Raises:
        InvalidArgumentError: p not among the allowed primes
        SearchSpaceExceededError: p^(n*m) above the configured limit
    """
    oracle = oracle or get_settings().oracle
    if p not in oracle.allowed_primes:
        raise InvalidArgumentError(
            f"Exhaustive search supports p in {oracle.allowed_primes}, got {p}",
            details={"p": p},
        )
    if n < 1:
        raise InvalidArgumentError(f"Algebra dimension must be >= 1, got {n}")
    field = ScalarField.prime(p)
    reduced = f if f.field == field else f.map_field(field)
    variables = f.variables()
    space = p ** (n * len(variables))
    if space > oracle.brute_force_limit:
        raise SearchSpaceExceededError(
            f"p^(n*m) = {space} exceeds the limit {oracle.brute_force_limit}",
            details={"n": n, "p": p, "m": len(variables), "space": space},
        )

    terms = [(term, field.to_residue(c)) for term, c in reduced.items()]
    positions = {var: i for i, var in enumerate(variables)}
    bounds = [
        (start, min(start + oracle.chunk_size, space))
        for start in range(0, space, oracle.chunk_size)
    ]

    def run(bound: Tuple[int, int]) -> np.ndarray:
        logger.debug("Evaluating assignments %d..%d of %d", bound[0], bound[1], space)
        return _evaluate_batch(terms, positions, n, p, *bound)

    if oracle.workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=oracle.workers) as pool:
            parts = list(pool.map(run, bounds))
    else:
        parts = [run(bound) for bound in bounds]
    codes = np.unique(np.concatenate(parts)) if parts else np.zeros(1, dtype=np.int64)
    return ImageSet(n, p, codes)
