"""
Rendering of command documents as text or JSON.

JSON output is the pydantic dump of the document (fields left unset are
omitted); text output is meant for people and is not a stable format.
"""

import json
from typing import Any, Callable, Dict, List, Mapping

from pydantic import BaseModel

from core.exceptions import NullfilError, ParseError
from core.schemas.catalog import CatalogDocument, CodimensionDocument, DimensionDocument
from core.schemas.command_response import (
    ClassifyDocument,
    ErrorDocument,
    EvalDocument,
    HeadDocument,
    IdentityDocument,
    PreimageDocument,
    ReduceDocument,
    VerifyDocument,
)
from core.schemas.element import ElementDocument


def to_json(document: BaseModel) -> str:
    return json.dumps(document.model_dump(mode="json", exclude_none=True), indent=2)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _algebra_label(algebra: Any) -> str:
    return "L_inf" if algebra == "inf" else f"L_{algebra.n}"


def format_element(document: ElementDocument) -> str:
    """Text form of an element document, e.g. "4*e2 + 6*e3"."""
    parts = []
    for index, coeff in sorted(document.coeffs.items(), key=lambda item: int(item[0])):
        negative = coeff.startswith("-")
        magnitude = coeff[1:] if negative else coeff
        body = f"e{index}" if magnitude == "1" else f"{magnitude}*e{index}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"


def format_descriptor(descriptor: Any) -> str:
    """One-line descriptor, e.g. "power_ideal k=3"."""
    if descriptor.kind == "zero":
        return "zero"
    if descriptor.kind == "power_ideal":
        suffix = " (closure required)" if descriptor.closure_required else ""
        return f"power_ideal k={descriptor.k}{suffix}"
    return f"punctured_cone d={descriptor.d} (closure required)"


def _head_lines(head: HeadDocument) -> List[str]:
    alphas = ", ".join(f"x{var}: {value}" for var, value in head.alphas.items())
    return [
        f"degree: {head.degree}",
        f"head coefficients: {alphas}",
        f"sum: {head.sum}",
    ]


def _render_reduce(document: ReduceDocument) -> List[str]:
    lines = [
        f"left-normed: {document.left_normed}",
        f"normal form: {document.normal_form}",
        f"identity: {_yes(document.is_identity)}",
        f"rule applications: {document.rule_applications}",
    ]
    if document.head is not None:
        lines.extend(_head_lines(document.head))
    return lines


def _render_identity(document: IdentityDocument) -> List[str]:
    lines = [f"identity of {_algebra_label(document.algebra)}: {_yes(document.is_identity)}"]
    if not document.agree:
        lines.append(f"warning: generic evaluation says {_yes(document.oracle)}")
    return lines


def _render_classify(document: ClassifyDocument) -> List[str]:
    return [
        format_descriptor(document.descriptor),
        f"case: {document.case}",
        f"image: {document.label}",
        f"subspace: {_yes(document.is_subspace)}",
    ]


def _render_preimage(document: PreimageDocument) -> List[str]:
    if document.status == "assignment":
        return [
            ", ".join(
                f"{var} = {format_element(value)}" for var, value in document.assignment.items()
            )
            or "(no variables)"
        ]
    if document.status == "not_in_image":
        return [f"not in image: {document.reason}", document.detail or ""]
    lines = [f"needs root: no {document.exponent}-th root of {document.value} in the field"]
    if document.root_modulo is not None:
        lines.append(
            f"root exists modulo {document.root_modulo.p}: {document.root_modulo.root}"
        )
    return lines


def _render_eval(document: EvalDocument) -> List[str]:
    return [document.text]


def _render_dim(document: DimensionDocument) -> List[str]:
    return [str(document.dim)]


def _render_basis(document: CatalogDocument) -> List[str]:
    lines = ["degree  count", f"{0:>6}  {document.unit:>5}"]
    for degree, count in document.by_degree.items():
        lines.append(f"{degree:>6}  {count:>5}")
        if document.words is not None:
            lines.extend(f"        {word}" for word in document.words.get(degree, []))
    lines.append(f"total: {document.total}")
    return lines


def _render_codim(document: CodimensionDocument) -> List[str]:
    return [str(document.codim)]


def _render_verify(document: VerifyDocument) -> List[str]:
    lines = []
    for suite in document.suites:
        status = "PASS" if suite.passed else "FAIL"
        lines.append(
            f"{status} {suite.name:<14} checked={suite.checked} skipped={suite.skipped}"
        )
        lines.extend(f"     - {failure}" for failure in suite.failures)
    lines.append(f"seed {document.seed}: {'passed' if document.passed else 'FAILED'}")
    return lines


_TEXT_RENDERERS: Mapping[type, Callable[[Any], List[str]]] = {
    ReduceDocument: _render_reduce,
    IdentityDocument: _render_identity,
    ClassifyDocument: _render_classify,
    PreimageDocument: _render_preimage,
    EvalDocument: _render_eval,
    DimensionDocument: _render_dim,
    CatalogDocument: _render_basis,
    CodimensionDocument: _render_codim,
    VerifyDocument: _render_verify,
}


def render(document: BaseModel, fmt: str) -> str:
    if fmt == "json":
        return to_json(document)
    lines = _TEXT_RENDERERS[type(document)](document)
    return "\n".join(line for line in lines if line)


def error_document(exc: NullfilError) -> ErrorDocument:
    payload: Dict[str, Any] = exc.to_dict()
    return ErrorDocument.model_validate(payload)


def render_error_text(exc: NullfilError) -> str:
    text = f"error [{exc.error_code}]: {exc.message}"
    if isinstance(exc, ParseError):
        caret = exc.caret()
        text += f" (at position {exc.position})"
        if caret:
            text += f"\n{caret}"
    return text
