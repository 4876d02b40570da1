"""
Computation Session

Use-case layer behind the command line. A session fixes one algebra and one
scalar field, parses user text, runs the domain operations and returns the
pydantic documents the delivery layer renders.

Layer: Application
Dependencies: Core, Config
"""

from __future__ import annotations

from typing import Dict, Iterable, Optional

from config.logging_config import get_logger
from config.settings import Settings, get_settings
from core.algebra import AlgebraHandle
from core.enumeration.catalog import (
    basis_monomials,
    dim_relatively_free,
    multilinear_codim,
    multilinear_words,
)
from core.exceptions import InvalidArgumentError
from core.images.classifier import analyse
from core.images.preimage import Assignment, NeedsRoot, NotInImage, preimage_from
from core.model.element import Element, parse_assignment, parse_element
from core.model.evaluation import evaluate
from core.oracle.generic import identity_oracle
from core.oracle.roots import confirm_root_modulo
from core.rewrite.left_norm import left_norm_traced
from core.rewrite.normal_form import head_coefficients, is_identity, normal_form
from core.scalars import ScalarField
from core.schemas.catalog import CatalogDocument, CodimensionDocument, DimensionDocument
from core.schemas.command_response import (
    ClassifyDocument,
    EvalDocument,
    HeadDocument,
    IdentityDocument,
    PreimageDocument,
    ReduceDocument,
    RootModuloDocument,
)
from core.schemas.element import ElementDocument
from core.terms.parser import format_ln, format_polynomial, format_word, parse
from core.terms.polynomial import FreePolynomial, multidegree_of

logger = get_logger(__name__)


def _element_document(element: Element) -> ElementDocument:
    return ElementDocument.model_validate(element.to_json())


class ComputationSession:
    """One algebra, one field, one settings snapshot."""

    def __init__(
        self,
        algebra: Optional[AlgebraHandle] = None,
        field: Optional[ScalarField] = None,
        settings: Optional[Settings] = None,
    ) -> None:
        self.algebra = algebra
        self.field = field or ScalarField.rationals()
        self.settings = settings or get_settings()

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------

    def require_algebra(self) -> AlgebraHandle:
        if self.algebra is None:
            raise InvalidArgumentError("This command needs --algebra <n|inf>")
        return self.algebra

    def require_finite(self, command: str) -> int:
        algebra = self.require_algebra()
        if not algebra.is_finite:
            raise InvalidArgumentError(
                f"{command} is defined for finite algebras only", details={"algebra": "inf"}
            )
        return algebra.n

    def parse_polynomial(self, text: str) -> FreePolynomial:
        return parse(text, self.field)

    def parse_element(self, text: str) -> Element:
        return parse_element(text, self.require_algebra(), self.field)

    # ------------------------------------------------------------------
    # Rewriting
    # ------------------------------------------------------------------

    def reduce(self, text: str) -> ReduceDocument:
        algebra = self.require_algebra()
        f = self.parse_polynomial(text)
        ln, steps = left_norm_traced(f)
        multidegree = None if f.is_zero else multidegree_of(f)
        nf = normal_form(ln, algebra, multidegree)
        head = None
        if multidegree is not None:
            head = HeadDocument.model_validate(head_coefficients(nf).to_dict())
        logger.debug("Reduced %s in %d rule applications", format_polynomial(f), steps)
        return ReduceDocument(
            algebra=algebra.to_json(),
            field=self.field.spec,
            input=format_polynomial(f),
            left_normed=format_ln(ln),
            rule_applications=steps,
            normal_form=nf.text,
            is_identity=nf.is_zero,
            head=head,
        )

    def identity(self, text: str) -> IdentityDocument:
        algebra = self.require_algebra()
        f = self.parse_polynomial(text)
        by_rewrite = is_identity(f, algebra)
        by_oracle = identity_oracle(f, algebra)
        if by_rewrite != by_oracle:
            logger.warning(
                "Normal form and generic evaluation disagree on %s over %s",
                format_polynomial(f),
                algebra.label,
            )
        return IdentityDocument(
            algebra=algebra.to_json(),
            polynomial=format_polynomial(f),
            is_identity=by_rewrite,
            oracle=by_oracle,
            agree=by_rewrite == by_oracle,
        )

    # ------------------------------------------------------------------
    # Images
    # ------------------------------------------------------------------

    def classify(self, text: str) -> ClassifyDocument:
        algebra = self.require_algebra()
        f = self.parse_polynomial(text)
        result = analyse(f, algebra)
        return ClassifyDocument(
            algebra=algebra.to_json(),
            field=self.field.spec,
            polynomial=format_polynomial(f),
            case=result.case.value,
            descriptor=result.descriptor.to_json(),
            label=result.descriptor.label,
            is_subspace=result.is_subspace,
            closure_required=result.closure_required,
            head_variable=result.head_variable,
            head=HeadDocument.model_validate(result.head.to_dict()) if result.head else None,
        )

    def preimage(self, text: str, target_text: str) -> PreimageDocument:
        algebra = self.require_algebra()
        f = self.parse_polynomial(text)
        target = self.parse_element(target_text)
        outcome = preimage_from(analyse(f, algebra), target)
        document = {
            "algebra": algebra.to_json(),
            "field": self.field.spec,
            "polynomial": format_polynomial(f),
            "target": _element_document(target),
        }
        if isinstance(outcome, Assignment):
            return PreimageDocument(
                status="assignment",
                assignment={
                    f"x{var}": _element_document(value)
                    for var, value in sorted(outcome.values.items())
                },
                **document,
            )
        if isinstance(outcome, NotInImage):
            return PreimageDocument(
                status="not_in_image",
                reason=outcome.reason.value,
                detail=outcome.detail,
                **document,
            )
        return self._needs_root(outcome, document)

    def _needs_root(self, outcome: NeedsRoot, document: Dict) -> PreimageDocument:
        confirmation = None
        if self.field.is_rational:
            found = confirm_root_modulo(
                outcome.value, outcome.exponent, self.settings.oracle.root_search_primes
            )
            if found is not None:
                p, root = found
                confirmation = RootModuloDocument(p=p, root=ScalarField.prime(p).format(root))
        return PreimageDocument(
            status="needs_root",
            exponent=outcome.exponent,
            value=self.field.format(outcome.value),
            root_modulo=confirmation,
            **document,
        )

    def evaluate(self, text: str, assignments: Iterable[str]) -> EvalDocument:
        algebra = self.require_algebra()
        f = self.parse_polynomial(text)
        values: Dict[int, Element] = {}
        for item in assignments:
            var, element = parse_assignment(item, algebra, self.field)
            values[var] = element
        value = evaluate(f, values, algebra)
        return EvalDocument(
            algebra=algebra.to_json(),
            field=self.field.spec,
            polynomial=format_polynomial(f),
            assignment={
                f"x{var}": _element_document(element) for var, element in sorted(values.items())
            },
            value=_element_document(value),
            text=value.format(),
        )

    # ------------------------------------------------------------------
    # Enumeration
    # ------------------------------------------------------------------

    def dim(self, m: int) -> DimensionDocument:
        n = self.require_finite("dim")
        return DimensionDocument(n=n, m=m, dim=dim_relatively_free(n, m))

    def basis(
        self, m: int, max_degree: Optional[int] = None, with_words: bool = False
    ) -> CatalogDocument:
        algebra = self.require_algebra()
        catalog = basis_monomials(algebra, m, max_degree)
        words = None
        if with_words:
            words = {
                str(degree): [format_word(w) for w in ws]
                for degree, ws in sorted(catalog.by_degree.items())
            }
        return CatalogDocument(
            n=algebra.n,
            m=m,
            by_degree={str(degree): count for degree, count in sorted(catalog.counts.items())},
            unit=1 if catalog.includes_unit else 0,
            total=catalog.total,
            words=words,
        )

    def codim(self, m: int) -> CodimensionDocument:
        algebra = self.require_algebra()
        return CodimensionDocument(
            algebra=algebra.to_json(),
            m=m,
            codim=multilinear_codim(algebra, m),
            words=[format_word(w) for w in multilinear_words(algebra, m)],
        )
