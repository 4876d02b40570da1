from application.session import ComputationSession
from application.verification_service import (
    SuiteResult,
    VerificationReport,
    VerificationService,
)

__all__ = ["ComputationSession", "SuiteResult", "VerificationReport", "VerificationService"]
