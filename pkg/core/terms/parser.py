"""
Expression Grammar

Recursive-descent parser and canonical formatter for polynomial text.

Grammar:
    poly   := ["+"|"-"] term (("+"|"-") term)*
    term   := [coeff ["*"]] factor (["*"] factor)*      juxtaposition = left-associative product
    factor := var ["^" nat] | "(" poly ")" ["^" nat]    a b^s = ((a b) b)...b
    var    := "x" nat
    coeff  := ["-"] nat ["/" nat]

The lone text "0" denotes the zero polynomial. Whitespace between tokens is
ignored. Errors report the 0-based character position of the offending token.
"""

import re
from itertools import groupby
from typing import List, NamedTuple, Optional

from core.exceptions import ParseError
from core.scalars import Scalar, ScalarField
from core.terms.polynomial import FreePolynomial, LNPolynomial
from core.terms.term import Leaf, Node, Term, Word, word_to_term

_TOKEN_PATTERN = re.compile(
    r"""
    (?P<VAR>x\d+)
  | (?P<BASIS>e\d+)
  | (?P<NUMBER>\d+)
  | (?P<PLUS>\+)
  | (?P<MINUS>-)
  | (?P<STAR>\*)
  | (?P<SLASH>/)
  | (?P<CARET>\^)
  | (?P<EQUALS>=)
  | (?P<LPAREN>\()
  | (?P<RPAREN>\))
  | (?P<SKIP>\s+)
  | (?P<MISMATCH>.)
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split text into tokens, ending with an EOF sentinel."""
    tokens = []
    for match in _TOKEN_PATTERN.finditer(text):
        kind = match.lastgroup
        if kind == "SKIP":
            continue
        if kind == "MISMATCH":
            raise ParseError(
                f"Unexpected character '{match.group()}' at position {match.start()}",
                position=match.start(),
                text=text,
            )
        tokens.append(Token(kind, match.group(), match.start()))
    tokens.append(Token("EOF", "", len(text)))
    return tokens


class TokenStream:
    """Cursor over a token list with error helpers shared by the text parsers."""

    def __init__(self, text: str, field: ScalarField):
        self.text = text
        self.field = field
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            self.fail(f"Expected {what}", token)
        return self.advance()

    def fail(self, message: str, token: Optional[Token] = None) -> None:
        token = token or self.peek()
        found = "end of input" if token.kind == "EOF" else f"'{token.text}'"
        raise ParseError(
            f"{message} at position {token.position}, found {found}",
            position=token.position,
            text=self.text,
        )

    def index_of(self, token: Token, what: str) -> int:
        """Positive index of an x<k> or e<k> token."""
        value = int(token.text[1:])
        if value < 1:
            raise ParseError(
                f"{what} index must be >= 1 at position {token.position}",
                position=token.position,
                text=self.text,
            )
        return value

    def coefficient(self) -> Scalar:
        """coeff := nat ["/" nat]; the sign is handled by callers."""
        numerator = self.expect("NUMBER", "a number")
        denominator = 1
        if self.peek().kind == "SLASH":
            self.advance()
            token = self.expect("NUMBER", "a denominator")
            denominator = int(token.text)
            if denominator == 0:
                raise ParseError(
                    f"Zero denominator at position {token.position}",
                    position=token.position,
                    text=self.text,
                )
        return self.field.from_ratio(int(numerator.text), denominator)

    def finish(self) -> None:
        if self.peek().kind != "EOF":
            self.fail("Unexpected token")


class _PolynomialParser(TokenStream):
    _FACTOR_START = ("VAR", "LPAREN")

    def parse(self) -> FreePolynomial:
        result = self._poly()
        self.finish()
        return result

    def _poly(self) -> FreePolynomial:
        sign = self.field.one
        if self.peek().kind in ("PLUS", "MINUS"):
            if self.advance().kind == "MINUS":
                sign = -sign
        total = self._term(sign)
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = self.field.one if self.advance().kind == "PLUS" else -self.field.one
            total = total + self._term(sign)
        return total

    def _term(self, sign: Scalar) -> FreePolynomial:
        if self.peek().kind == "MINUS" and self.peek(1).kind == "NUMBER":
            self.advance()
            sign = -sign
        coeff = sign
        if self.peek().kind == "NUMBER":
            number = self.peek()
            coeff = sign * self.coefficient()
            if self.peek().kind == "STAR":
                self.advance()
            elif self.peek().kind not in self._FACTOR_START:
                if not coeff:
                    return FreePolynomial.zero(self.field)
                self.fail("A nonzero constant needs a variable factor", number)
        product = self._apply(None, *self._factor())
        while True:
            if self.peek().kind == "STAR":
                self.advance()
                product = self._apply(product, *self._factor())
            elif self.peek().kind in self._FACTOR_START:
                product = self._apply(product, *self._factor())
            else:
                break
        return product.scale(coeff)

    def _factor(self):
        token = self.peek()
        if token.kind == "VAR":
            self.advance()
            base = FreePolynomial.variable(self.index_of(token, "Variable"), self.field)
        elif token.kind == "LPAREN":
            self.advance()
            base = self._poly()
            self.expect("RPAREN", "')'")
        else:
            self.fail("Expected a variable or '('", token)
        exponent = 1
        if self.peek().kind == "CARET":
            self.advance()
            number = self.expect("NUMBER", "an exponent")
            exponent = int(number.text)
            if exponent == 0:
                raise ParseError(
                    f"Exponent must be >= 1 at position {number.position}",
                    position=number.position,
                    text=self.text,
                )
        return base, exponent

    @staticmethod
    def _apply(
        acc: Optional[FreePolynomial], base: FreePolynomial, exponent: int
    ) -> FreePolynomial:
        for _ in range(exponent):
            acc = base if acc is None else acc * base
        return acc


def parse(text: str, field: Optional[ScalarField] = None) -> FreePolynomial:
    """
    Parse expression text into a free polynomial.

    Args:
        text: Expression, e.g. "x1 x2^2 - 1/2 x2 x1 x2"
        field: Scalar field of the coefficients (rationals by default)

    Returns:
        FreePolynomial: The denoted polynomial

    Raises:
        ParseError: Syntax error, variable index 0 or exponent 0
    """
    return _PolynomialParser(text, field or ScalarField.rationals()).parse()


# =============================================================================
# FORMATTING
# =============================================================================


def _power(text: str, count: int) -> str:
    return text if count == 1 else f"{text}^{count}"


def format_term(term: Term) -> str:
    """Render a term along its left spine, regrouping repeated right factors with ^."""
    spine = []
    while isinstance(term, Node):
        spine.append(term.right)
        term = term.left
    head = term.var
    rights = list(reversed(spine))

    leading = 0
    while leading < len(rights) and rights[leading] == Leaf(head):
        leading += 1
    pieces = [_power(f"x{head}", leading + 1)]
    for factor, run in groupby(rights[leading:]):
        text = f"x{factor.var}" if isinstance(factor, Leaf) else f"({format_term(factor)})"
        pieces.append(_power(text, len(list(run))))
    return " ".join(pieces)


def format_word(word: Word) -> str:
    return format_term(word_to_term(word))


def _join(field: ScalarField, rendered: List[tuple]) -> str:
    if not rendered:
        return "0"
    parts = []
    for position, (coeff, body) in enumerate(rendered):
        negative = field.is_negative(coeff)
        magnitude = -coeff if negative else coeff
        text = body if magnitude == field.one else f"{field.format(magnitude)} {body}"
        if position == 0:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f" - {text}" if negative else f" + {text}")
    return "".join(parts)


def format_polynomial(f: FreePolynomial) -> str:
    """Canonical text, monomials sorted by degree then word."""
    return _join(f.field, [(f.coefficient(t), format_term(t)) for t in f.sorted_terms()])


def format_ln(f: LNPolynomial) -> str:
    return _join(f.field, [(f.coefficient(w), format_word(w)) for w in f.sorted_words()])
