"""
Domain Exceptions

Every error raised by the algebra engine derives from NullfilError so the
composition root can translate it into an exit code and a machine-readable tag.

Exception Hierarchy:
    NullfilError (base)
    ├── ParseError                - malformed expression or element text
    ├── InvalidArgumentError      - out-of-range parameters (k < 1, p not prime, ...)
    ├── FieldMismatchError        - operands over different scalar fields
    ├── UnsupportedFieldError     - operation not defined over the given field
    ├── AlgebraMismatchError      - operands in different algebras
    ├── DivisionByZeroError       - division by a zero scalar
    ├── ZeroPolynomialError       - zero polynomial where a multidegree is needed
    ├── NotHomogeneousError       - polynomial is not multihomogeneous
    ├── UnassignedVariableError   - evaluation without a value for some variable
    ├── SearchSpaceExceededError  - exhaustive search larger than the configured limit
    ├── PreimageVerificationError - a constructed preimage failed its own check
    ├── ConfigurationError        - invalid or missing configuration
    └── VerificationFailedError   - a verify run reported failing suites

Design Principles:
1. Exceptions originate from core/application layers
2. The CLI maps any NullfilError to exit code 1
3. error_code is a stable lower-case tag used in JSON output
"""

from typing import Any, Dict, Optional


class NullfilError(Exception):
    """
    Base class for all domain errors.

    All custom exceptions inherit from this so callers can catch a single type.
    """

    default_message = "Computation failed"
    default_code = "nullfil_error"

    def __init__(
        self,
        message: Optional[str] = None,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize domain error.

        Args:
            message: Human-readable error message
            error_code: Machine-readable tag (e.g., "parse_error")
            details: Additional structured context
        """
        self.message = message or self.default_message
        super().__init__(self.message)
        self.error_code = error_code or self.default_code
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to the structured error document."""
        payload: Dict[str, Any] = {
            "error": self.error_code,
            "message": self.message,
        }
        if self.details:
            payload["details"] = self.details
        return payload


class ParseError(NullfilError):
    """
    Raised when expression or element text does not match the grammar.

    Carries the 0-based character position of the offending token.
    """

    default_message = "Could not parse input"
    default_code = "parse_error"

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(message, details={"position": position})
        self.position = position
        self.text = text

    def caret(self) -> str:
        """Render the input with a caret under the failing position."""
        if not self.text:
            return ""
        return f"{self.text}\n{' ' * self.position}^"


class InvalidArgumentError(NullfilError):
    default_message = "Invalid argument"
    default_code = "invalid_argument"


class FieldMismatchError(NullfilError):
    """Raised when values over different scalar fields are combined."""

    default_message = "Scalar fields do not match"
    default_code = "field_mismatch"


class UnsupportedFieldError(NullfilError):
    """
    Raised when an operation is not defined over the requested field.

    Example: identity testing over F_p (the identity basis is only claimed
    over infinite fields).
    """

    default_message = "Operation not supported over this field"
    default_code = "unsupported_field"


class AlgebraMismatchError(NullfilError):
    default_message = "Algebra handles do not match"
    default_code = "algebra_mismatch"


class DivisionByZeroError(NullfilError):
    default_message = "Division by zero"
    default_code = "division_by_zero"


class ZeroPolynomialError(NullfilError):
    """Raised when the zero polynomial is given where a multidegree is required."""

    default_message = "The zero polynomial has no multidegree"
    default_code = "zero_polynomial"


class NotHomogeneousError(NullfilError):
    default_message = "Polynomial is not multihomogeneous"
    default_code = "not_homogeneous"


class UnassignedVariableError(NullfilError):
    default_message = "Variable has no assigned value"
    default_code = "unassigned_variable"


class SearchSpaceExceededError(NullfilError):
    """Raised when an exhaustive image computation exceeds the configured bound."""

    default_message = "Exhaustive search space exceeds the configured limit"
    default_code = "search_space_exceeded"


class PreimageVerificationError(NullfilError):
    """
    Raised when a constructed assignment does not evaluate to its target.

    This indicates a defect in the construction, never a user error.
    """

    default_message = "Constructed preimage failed verification"
    default_code = "preimage_verification"


class ConfigurationError(NullfilError):
    """
    Raised when configuration is invalid or missing.

    Note: This should cause the CLI to fail fast before any command runs.
    """

    default_message = "Configuration error"
    default_code = "configuration_error"


class VerificationFailedError(NullfilError):
    """Raised by the verify command when at least one suite reports failures."""

    default_message = "Verification failed"
    default_code = "verification_failed"
