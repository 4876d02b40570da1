"""
Verification Service

Runs the self-verification suites behind `nullfil verify`. Each suite checks
one family of claims against an independent oracle (generic evaluation,
exhaustive search over F_p, closed formulas) on a seeded corpus and reports
how many checks ran and which failed.

Layer: Application
Dependencies: Core, Config
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from config.logging_config import RunContextLogger, get_logger, log_with_context
from config.settings import Settings, get_settings
from core.algebra import AlgebraHandle
from core.enumeration.catalog import (
    basis_monomials,
    dim_relatively_free,
    multilinear_codim,
    multilinear_words,
)
from core.exceptions import InvalidArgumentError, NullfilError, VerificationFailedError
from core.images.classifier import (
    Classification,
    ImageCase,
    analyse,
    classify,
    closed_form_evaluation,
)
from core.images.descriptor import ImageDescriptor
from core.images.preimage import Assignment, NeedsRoot, preimage_from, root_exponent
from core.model.element import Element, right_power, right_power_closed_form
from core.model.evaluation import evaluate
from core.oracle.corpus import PolynomialCorpus
from core.oracle.cross_check import EqualityMode, cross_check, divisors_survive
from core.oracle.generic import coordinate_rank, generic_evaluate, identity_oracle
from core.oracle.roots import confirm_root_modulo, resolve_root_exponent
from core.rewrite.normal_form import head_coefficients, is_identity, reduce
from core.scalars import ScalarField
from core.schemas.command_response import SuiteDocument, VerifyDocument
from core.terms.parser import format_polynomial, parse
from core.terms.polynomial import FreePolynomial

logger = get_logger(__name__)

MAX_REPORTED_FAILURES = 20
DIMENSION_SPOT_VALUES = {(2, 1): 3, (2, 2): 6, (3, 2): 11}


@dataclass
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    checked: int = 0
    skipped: int = 0
    failures: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> bool:
        self.checked += 1
        if not condition:
            self.fail(message)
        return condition

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)
        elif len(self.failures) == MAX_REPORTED_FAILURES:
            self.failures.append("... further failures omitted")
        log_with_context(
            logger, "warning", "Verification check failed", suite=self.name, failure=message
        )

    def to_document(self) -> SuiteDocument:
        return SuiteDocument(
            name=self.name,
            passed=self.passed,
            checked=self.checked,
            skipped=self.skipped,
            failures=list(self.failures),
            details=dict(self.details),
        )


@dataclass
class VerificationReport:
    seed: int
    suites: List[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    def suite(self, name: str) -> SuiteResult:
        return next(s for s in self.suites if s.name == name)

    def to_document(self) -> VerifyDocument:
        return VerifyDocument(
            seed=self.seed,
            passed=self.passed,
            suites=[suite.to_document() for suite in self.suites],
            error=None if self.passed else VerificationFailedError.default_code,
        )


def _minimality_witness(n: int) -> FreePolynomial:
    """x1 x2 ... xn - x2 x1 x3 ... xn."""
    tail = [f"x{i}" for i in range(3, n + 1)]
    left = " ".join(["x1", "x2"] + tail)
    right = " ".join(["x2", "x1"] + tail)
    return parse(f"{left} - {right}")


def _curated_identities(n: int) -> List[str]:
    """Generators of Id(L_n) and consequences that must all reduce to zero on L_n."""
    letters = [f"x{i}" for i in range(1, n + 2)]
    sorted_top = " ".join(letters[:n])
    reversed_top = " ".join(reversed(letters[:n]))
    cases = [
        "x1 (x2 x3)",
        format_polynomial(_minimality_witness(n)),
        " ".join(letters),
        "x1 x2 x3 - x1 x3 x2",
        "x1 x4 x2 x3 - x1 x2 x3 x4",
    ]
    if reversed_top != sorted_top:
        cases.append(f"{reversed_top} - {sorted_top}")
    return cases


class VerificationService:
    """Runs the acceptance suites; one method per suite."""

    SUITES = (
        "concordance",
        "minimality",
        "dimension",
        "codimension",
        "trichotomy",
        "homogeneous",
        "preimage",
        "closed_form",
        "root_exponent",
    )

    def __init__(self, settings: Optional[Settings] = None) -> None:
        self.settings = settings or get_settings()
        self._config = self.settings.verification
        self._oracle = self.settings.oracle
        self._rationals = ScalarField.rationals()

    def run(
        self, seed: Optional[int] = None, suites: Optional[Sequence[str]] = None
    ) -> VerificationReport:
        """
        Run the selected suites (all of them by default) with one seed.

        Every suite builds its own corpus from the seed, so results do not
        depend on which other suites were selected.
        """
        seed = self._config.seed if seed is None else seed
        selected = list(suites) if suites else list(self.SUITES)
        unknown = [name for name in selected if name not in self.SUITES]
        if unknown:
            raise InvalidArgumentError(
                f"Unknown verification suite: {unknown[0]}",
                details={"available": list(self.SUITES)},
            )
        results = []
        with RunContextLogger(seed=seed):
            logger.info("Starting verification with seed %d", seed)
            for name in self.SUITES:
                if name not in selected:
                    continue
                runner: Callable[[int], SuiteResult] = getattr(self, f"_suite_{name}")
                result = runner(seed)
                log_with_context(
                    logger,
                    "info",
                    "Suite finished",
                    suite=name,
                    passed=result.passed,
                    checked=result.checked,
                    skipped=result.skipped,
                )
                results.append(result)
        return VerificationReport(seed=seed, suites=results)

    # ------------------------------------------------------------------
    # 1. Identity basis concordance
    # ------------------------------------------------------------------

    def _suite_concordance(self, seed: int) -> SuiteResult:
        config = self._config.concordance
        result = SuiteResult("concordance")
        corpus = PolynomialCorpus(seed)
        infinite = AlgebraHandle.infinite()

        for n in config.algebra_sizes:
            algebra = AlgebraHandle.finite(n)
            for text in _curated_identities(n):
                f = parse(text)
                result.check(
                    is_identity(f, algebra) and identity_oracle(f, algebra),
                    f"curated identity {text} not recognised on {algebra.label}",
                )
        result.check(
            is_identity(parse("x1 (x2 x3)"), infinite)
            and identity_oracle(parse("x1 (x2 x3)"), infinite),
            "x1 (x2 x3) not recognised on L_inf",
        )

        for _ in range(config.corpus_size):
            f = corpus.random_concordance_case(
                config.max_variables, config.max_degree, config.max_terms
            )
            if f.is_zero:
                result.skipped += 1
                continue
            text = format_polynomial(f)
            for n in config.algebra_sizes:
                algebra = AlgebraHandle.finite(n)
                nf = reduce(f, algebra)
                result.check(
                    nf.is_zero == identity_oracle(f, algebra),
                    f"normal form and oracle disagree on {text} over {algebra.label}",
                )
                result.check(
                    identity_oracle(f - nf.lift(), algebra),
                    f"f - lift(normal form) is not an identity for {text} over {algebra.label}",
                )
            self._check_infinite(result, f, text, infinite)
        return result

    def _check_infinite(
        self, result: SuiteResult, f: FreePolynomial, text: str, infinite: AlgebraHandle
    ) -> None:
        by_oracle = identity_oracle(f, infinite)
        result.check(
            reduce(f, infinite).is_zero == by_oracle,
            f"normal form and oracle disagree on {text} over L_inf",
        )
        m = max(f.variables())
        wider = all(not c for c in generic_evaluate(f, m, f.max_degree() + 2))
        result.check(
            wider == by_oracle,
            f"testing {text} at n = D+1 and n = D+2 disagree",
        )

    # ------------------------------------------------------------------
    # 2. Minimality witness
    # ------------------------------------------------------------------

    def _suite_minimality(self, seed: int) -> SuiteResult:
        result = SuiteResult("minimality")
        certificates = {}
        for n in self._config.minimality.sizes:
            f = _minimality_witness(n)
            text = format_polynomial(f)
            small = AlgebraHandle.finite(n)
            large = AlgebraHandle.finite(n + 1)
            result.check(
                is_identity(f, small) and identity_oracle(f, small),
                f"{text} is not an identity of {small.label}",
            )
            result.check(
                not is_identity(f, large) and not identity_oracle(f, large),
                f"{text} is an identity of {large.label}",
            )
            field_ = self._rationals
            values = {var: Element.basis(large, field_, 1) for var in range(2, n + 1)}
            values[1] = Element.basis(large, field_, 2)
            value = evaluate(f, values, large)
            result.check(
                value == Element.basis(large, field_, n + 1),
                f"certificate for {text} evaluates to {value.format()}",
            )
            certificates[str(n)] = {"x1": "e2", "others": "e1", "value": value.format()}
        result.details["certificates"] = certificates
        return result

    # ------------------------------------------------------------------
    # 3. Dimension formula
    # ------------------------------------------------------------------

    def _suite_dimension(self, seed: int) -> SuiteResult:
        config = self._config.dimension
        result = SuiteResult("dimension")
        for n in range(1, config.max_n + 1):
            for m in range(1, config.max_m + 1):
                catalog = basis_monomials(n, m)
                dim = dim_relatively_free(n, m)
                result.check(
                    dim == catalog.total,
                    f"dim({n},{m}) = {dim} but the catalog has {catalog.total} elements",
                )
                if n <= 3 and m <= 2:
                    rank = coordinate_rank(catalog.words(), m, n)
                    result.check(
                        rank == catalog.word_count,
                        f"canonical words of L_{n} in {m} variables have rank {rank}",
                    )
        for (n, m), expected in DIMENSION_SPOT_VALUES.items():
            result.check(
                dim_relatively_free(n, m) == expected,
                f"dim({n},{m}) should be {expected}",
            )
        return result

    # ------------------------------------------------------------------
    # 4. Codimension
    # ------------------------------------------------------------------

    def _suite_codimension(self, seed: int) -> SuiteResult:
        result = SuiteResult("codimension")
        infinite = AlgebraHandle.infinite()
        for m in range(1, self._config.codimension.max_m + 1):
            words = multilinear_words(infinite, m)
            result.check(
                multilinear_codim(infinite, m) == m == len(words),
                f"c_{m}(L_inf) differs from {m}",
            )
            if m <= 4:
                rank = coordinate_rank(words, m, m + 1)
                result.check(rank == m, f"multilinear words of degree {m} have rank {rank}")
            for n in range(1, 6):
                algebra = AlgebraHandle.finite(n)
                result.check(
                    multilinear_codim(algebra, m) == len(multilinear_words(algebra, m)),
                    f"c_{m}({algebra.label}) disagrees with its word count",
                )
        return result

    # ------------------------------------------------------------------
    # 5. Multilinear trichotomy
    # ------------------------------------------------------------------

    def _suite_trichotomy(self, seed: int) -> SuiteResult:
        config = self._config.trichotomy
        result = SuiteResult("trichotomy")
        corpus = PolynomialCorpus(seed)
        for _ in range(config.corpus_size):
            m = corpus.integer(1, config.max_variables)
            n = corpus.integer(1, config.max_n)
            f = corpus.random_multilinear(m)
            if f.is_zero:
                result.skipped += 1
                continue
            algebra = AlgebraHandle.finite(n)
            text = format_polynomial(f)
            descriptor = classify(f, algebra)
            allowed = {
                ImageDescriptor.zero(algebra),
                ImageDescriptor.power_ideal(algebra, m),
                ImageDescriptor.power_ideal(algebra, m + 1),
            }
            result.check(
                descriptor in allowed, f"{text} on {algebra.label} classified as {descriptor.label}"
            )
            for p in config.primes:
                report = cross_check(f, n, p, self._oracle)
                if not report.divisor_ok:
                    result.skipped += 1
                    continue
                result.check(
                    report.equality is EqualityMode.EXACT and bool(report.equality_holds),
                    f"image of {text} on {algebra.label} over F_{p} is not {descriptor.label}",
                )
        return result

    # ------------------------------------------------------------------
    # 6. Homogeneous classification
    # ------------------------------------------------------------------

    def _suite_homogeneous(self, seed: int) -> SuiteResult:
        config = self._config.homogeneous
        result = SuiteResult("homogeneous")
        corpus = PolynomialCorpus(seed)
        cases: Dict[str, int] = {}
        for _ in range(config.corpus_size):
            multidegree = corpus.random_multidegree(config.max_variables, config.max_degree)
            f = corpus.random_multihomogeneous(multidegree)
            n = corpus.integer(1, config.max_n)
            if f.is_zero:
                result.skipped += 1
                continue
            algebra = AlgebraHandle.finite(n)
            classification = analyse(f, algebra)
            cases[classification.case.value] = cases.get(classification.case.value, 0) + 1
            text = format_polynomial(f)
            for p in config.primes:
                if p ** (n * len(f.variables())) > self._oracle.brute_force_limit:
                    result.skipped += 1
                    continue
                report = cross_check(f, n, p, self._oracle)
                where = f"{text} on {algebra.label} over F_{p}"
                result.check(report.inclusion, f"image of {where} escapes its descriptor")
                if report.equality is EqualityMode.SKIPPED_DIVISOR:
                    result.skipped += 1
                    continue
                result.check(
                    bool(report.equality_holds),
                    f"{report.equality.value} check failed for {where}",
                )
        result.details["cases"] = dict(sorted(cases.items()))
        return result

    # ------------------------------------------------------------------
    # 7. Preimage round trip
    # ------------------------------------------------------------------

    def _sample_target(
        self, corpus: PolynomialCorpus, classification: Classification
    ) -> Element:
        algebra = classification.algebra
        descriptor = classification.descriptor
        if classification.case is ImageCase.IDENTITY:
            return Element.zero(algebra, self._rationals)
        if classification.case is ImageCase.CONE:
            d = classification.degree
            g = root_exponent(classification.multidegree)
            beta = corpus.scalar() ** g * classification.head.total
            leading = Element.basis(algebra, self._rationals, d).scale(beta)
            return leading + corpus.random_element(algebra, d + 1)
        if descriptor.index is None:
            return Element.zero(algebra, self._rationals)
        return corpus.random_element(algebra, descriptor.index)

    def _suite_preimage(self, seed: int) -> SuiteResult:
        config = self._config.preimage
        result = SuiteResult("preimage")
        corpus = PolynomialCorpus(seed)
        roots_needed = 0
        sampled = 0
        while sampled < config.targets:
            multidegree = corpus.random_multidegree(config.max_variables, config.max_degree)
            f = corpus.random_multihomogeneous(multidegree)
            if f.is_zero:
                continue
            sampled += 1
            n = corpus.integer(2, config.max_n)
            infinite = corpus.integer(1, 4) == 1
            algebra = AlgebraHandle.infinite() if infinite else AlgebraHandle.finite(n)
            classification = analyse(f, algebra)
            target = self._sample_target(corpus, classification)
            where = f"{format_polynomial(f)} -> {target.format()} on {algebra.label}"
            try:
                outcome = preimage_from(classification, target)
                result.check(
                    isinstance(outcome, Assignment)
                    and evaluate(f, outcome.values, algebra) == target,
                    f"no verified preimage for {where}: {outcome}",
                )
                if classification.case is ImageCase.CONE:
                    roots_needed += self._check_needs_root(result, classification, where)
            except NullfilError as exc:
                result.fail(f"{where}: {exc.message}")
        result.details["needs_root_checked"] = roots_needed
        return result

    def _check_needs_root(
        self, result: SuiteResult, classification: Classification, where: str
    ) -> int:
        g = root_exponent(classification.multidegree)
        if g < 2:
            return 0
        algebra = classification.algebra
        q = self._rationals
        target = Element.basis(algebra, q, classification.degree).scale(
            q.from_int(2) * classification.head.total
        )
        outcome = preimage_from(classification, target)
        if not result.check(
            outcome == NeedsRoot(g, q.from_int(2)),
            f"expected a missing root of 2 for {where}, got {outcome}",
        ):
            return 1
        found = confirm_root_modulo(q.from_int(2), g, self._oracle.root_search_primes)
        if not result.check(found is not None, f"no prime has a root of 2 of degree {g}"):
            return 1
        p, _ = found
        if not divisors_survive(classification, p):
            result.skipped += 1
            return 1
        field_ = ScalarField.prime(p)
        reduced = analyse(classification.polynomial.map_field(field_), algebra)
        witness = preimage_from(reduced, target.map_field(field_))
        result.check(
            isinstance(witness, Assignment), f"no witness over F_{p} for {where}"
        )
        return 1

    # ------------------------------------------------------------------
    # 8. Closed forms
    # ------------------------------------------------------------------

    def _suite_closed_form(self, seed: int) -> SuiteResult:
        config = self._config.closed_form
        result = SuiteResult("closed_form")
        corpus = PolynomialCorpus(seed)
        for _ in range(config.right_power_cases):
            n = corpus.integer(2, config.max_n)
            s = corpus.integer(1, n - 1)
            algebra = AlgebraHandle.finite(n)
            z = corpus.random_element(algebra)
            w = corpus.random_element(algebra)
            result.check(
                right_power(z, w, s) == right_power_closed_form(z, w, s),
                f"right power of {z.format()} by {w.format()} ({s} times) on {algebra.label}",
            )

        evaluated = 0
        while evaluated < config.evaluation_cases:
            multidegree = corpus.random_multidegree(3, config.max_n)
            f = corpus.random_multihomogeneous(multidegree)
            if f.is_zero:
                continue
            evaluated += 1
            n = corpus.integer(2, config.max_n)
            infinite = corpus.integer(1, 5) == 1
            algebra = AlgebraHandle.infinite() if infinite else AlgebraHandle.finite(n)
            head = head_coefficients(reduce(f, algebra))
            assignment = corpus.random_assignment(f.variables(), algebra)
            result.check(
                evaluate(f, assignment, algebra)
                == closed_form_evaluation(head, assignment, algebra),
                f"closed-form evaluation of {format_polynomial(f)} on {algebra.label}",
            )
        return result

    # ------------------------------------------------------------------
    # 9. Root exponent
    # ------------------------------------------------------------------

    def _suite_root_exponent(self, seed: int) -> SuiteResult:
        result = SuiteResult("root_exponent")
        report = resolve_root_exponent(
            seed, self._config.root_exponent.instances, self._oracle
        )
        result.checked = report.instances
        result.details.update(report.to_json())
        if not report.passed or report.verdict != "gcd":
            result.fail(
                f"cone exponent verdict is {report.verdict!r} with witnesses consistent "
                f"{report.witnesses_consistent}, preimages use the gcd"
            )
        return result
