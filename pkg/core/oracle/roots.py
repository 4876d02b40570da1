"""
Root-exponent experiment for the punctured-cone image.

A nonzero target lies in a cone image exactly when beta_d / sum(alpha) is a
power of some fixed exponent. Three readings of that exponent are possible:
the total degree d, the multiplicity d_j of the head variable, or the gcd g
of all multiplicities. Over small prime fields the readings predict
different image memberships, and exhaustive search decides between them.
The preimage constructor is checked against the same images.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config.config_validator import OracleConfig
from config.logging_config import get_logger, log_with_context
from config.settings import get_settings
from core.algebra import AlgebraHandle
from core.exceptions import DivisionByZeroError, InvalidArgumentError
from core.images.classifier import Classification, ImageCase, analyse
from core.images.preimage import Assignment, preimage_from, root_exponent
from core.model.element import Element
from core.oracle.brute_force import ImageSet, brute_force_image
from core.oracle.corpus import PolynomialCorpus
from core.oracle.cross_check import divisors_survive
from core.scalars import Scalar, ScalarField
from core.terms.parser import format_polynomial
from core.terms.polynomial import FreePolynomial, MultiDegree
from core.terms.term import word_to_term

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExperimentSetting:
    n: int
    p: int
    multidegree: MultiDegree


# (2, 2) over F_5 separates d from d_j; (2, 3) over F_3 separates d_j from g.
EXPERIMENT_SETTINGS: Tuple[ExperimentSetting, ...] = (
    ExperimentSetting(4, 5, MultiDegree.from_counts({1: 2, 2: 2})),
    ExperimentSetting(6, 3, MultiDegree.from_counts({1: 2, 2: 3})),
    ExperimentSetting(5, 3, MultiDegree.from_counts({1: 2, 2: 2})),
)
READINGS = ("d", "d_j", "gcd")
MAX_ATTEMPTS = 200


@dataclass(frozen=True)
class InstanceOutcome:
    polynomial: str
    n: int
    p: int
    targets: int
    consistent: Dict[str, bool]
    witnesses_consistent: bool


@dataclass(frozen=True)
class RootExponentReport:
    """Outcome of testing every exponent reading against exhaustive images."""

    seed: int
    outcomes: List[InstanceOutcome] = dataclass_field(default_factory=list)

    @property
    def instances(self) -> int:
        return len(self.outcomes)

    def reading_consistent(self, reading: str) -> bool:
        return all(o.consistent[reading] for o in self.outcomes)

    @property
    def witnesses_consistent(self) -> bool:
        return all(o.witnesses_consistent for o in self.outcomes)

    @property
    def verdict(self) -> Optional[str]:
        """The reading that survives every instance when it is the only one, else None."""
        surviving = [r for r in READINGS if self.reading_consistent(r)]
        return surviving[0] if len(surviving) == 1 else None

    @property
    def passed(self) -> bool:
        return self.verdict is not None and self.witnesses_consistent

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "seed": self.seed,
            "instances": self.instances,
            "verdict": self.verdict,
        }
        for reading in READINGS:
            document[f"{reading}_consistent"] = self.reading_consistent(reading)
        document["witnesses_consistent"] = self.witnesses_consistent
        return document


def cone_targets(algebra: AlgebraHandle, field: ScalarField, d: int) -> List[Element]:
    """Every element of F_p^n with lowest index exactly d."""
    n = algebra.n
    targets = [Element.zero(algebra, field)]
    for index in range(d, n + 1):
        values = list(field.elements())
        if index == d:
            values = values[1:]
        targets = [
            t + Element.basis(algebra, field, index).scale(c) if c else t
            for t in targets
            for c in values
        ]
    return targets


def reading_exponents(reduced: Classification) -> Dict[str, int]:
    multidegree = reduced.multidegree
    return {
        "d": reduced.degree,
        "d_j": multidegree.multiplicity(reduced.head_variable),
        "gcd": root_exponent(multidegree),
    }


def _predicted(reduced: Classification, target: Element, exponent: int) -> bool:
    field = target.field
    value = field.div(target.coefficient(reduced.degree), reduced.head.total)
    return bool(field.roots(value, exponent))


def reading_consistent(
    reduced: Classification, image: ImageSet, targets: Sequence[Element], exponent: int
) -> bool:
    """The exponent predicts image membership of every target correctly."""
    return all(_predicted(reduced, target, exponent) == (target in image) for target in targets)


def witnesses_consistent(
    reduced: Classification, image: ImageSet, targets: Sequence[Element]
) -> bool:
    """preimage_from finds a witness exactly for the image targets."""
    return all(
        isinstance(preimage_from(reduced, target), Assignment) == (target in image)
        for target in targets
    )


def _cone_instance(
    corpus: PolynomialCorpus, setting: ExperimentSetting
) -> FreePolynomial:
    algebra = AlgebraHandle.finite(setting.n)
    for _ in range(MAX_ATTEMPTS):
        f = corpus.random_multihomogeneous(setting.multidegree)
        if f.is_zero:
            continue
        classification = analyse(f, algebra)
        # Heads on x_1 fix d_j = 2 in every setting.
        if (
            classification.case is ImageCase.CONE
            and classification.head_variable == 1
            and divisors_survive(classification, setting.p)
        ):
            return f
    logger.info("No random cone instance found; falling back to the monomial")
    return FreePolynomial.monomial(word_to_term(setting.multidegree.letters()), corpus.field)


def resolve_root_exponent(
    seed: int, instances: int = 20, oracle: Optional[OracleConfig] = None
) -> RootExponentReport:
    """
    Test the d, d_j and gcd readings of the cone exponent on seeded instances.

    Args:
        seed: Corpus seed
        instances: Number of random polynomials, dealt round-robin to the settings
        oracle: Brute-force limits (defaults to the loaded settings)

    Returns:
        RootExponentReport whose verdict names the surviving reading
    """
    if instances < 1:
        raise InvalidArgumentError(f"Need at least one instance, got {instances}")
    oracle = oracle or get_settings().oracle
    corpus = PolynomialCorpus(seed)
    outcomes = []
    for number in range(instances):
        setting = EXPERIMENT_SETTINGS[number % len(EXPERIMENT_SETTINGS)]
        algebra = AlgebraHandle.finite(setting.n)
        field = ScalarField.prime(setting.p)
        f = _cone_instance(corpus, setting)
        reduced = analyse(f.map_field(field), algebra)
        image = brute_force_image(reduced.polynomial, setting.n, setting.p, oracle)
        targets = cone_targets(algebra, field, reduced.degree)
        outcome = InstanceOutcome(
            polynomial=format_polynomial(f),
            n=setting.n,
            p=setting.p,
            targets=len(targets),
            consistent={
                reading: reading_consistent(reduced, image, targets, exponent)
                for reading, exponent in reading_exponents(reduced).items()
            },
            witnesses_consistent=witnesses_consistent(reduced, image, targets),
        )
        logger.debug("Root exponent instance %d: %s", number, outcome)
        outcomes.append(outcome)

    report = RootExponentReport(seed=seed, outcomes=outcomes)
    log_with_context(logger, "info", "Root exponent experiment finished", **report.to_json())
    return report


def confirm_root_modulo(
    value: Scalar, exponent: int, primes: Optional[Sequence[int]] = None
) -> Optional[Tuple[int, Scalar]]:
    """
    First prime (from the configured search list) at which a rational value has an exponent-th root.

    Primes dividing the denominator of value are skipped.

    Returns:
        (p, root) or None when no listed prime works
    """
    rationals = ScalarField.rationals()
    primes = primes or get_settings().oracle.root_search_primes
    for p in primes:
        target = ScalarField.prime(p)
        try:
            residue = rationals.reduce_to(value, target)
        except DivisionByZeroError:
            continue
        roots = target.roots(residue, exponent)
        if roots:
            return p, roots[0]
    return None
