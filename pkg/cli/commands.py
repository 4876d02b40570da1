"""
Command handlers.

Thin controllers: each handler delegates to the application layer and
returns the pydantic document that cli.output renders.

LAYER BOUNDARY RULES:
- Can import: application/ services, core/schemas/
- No domain logic here
"""

import argparse
from typing import Callable, Dict

from pydantic import BaseModel

from application.session import ComputationSession
from application.verification_service import VerificationService
from config.logging_config import get_logger

logger = get_logger(__name__)

Handler = Callable[[ComputationSession, argparse.Namespace], BaseModel]


def reduce_command(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    return session.reduce(args.polynomial)


def identity_command(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    return session.identity(args.polynomial)


def classify_command(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    return session.classify(args.polynomial)


def preimage_command(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    return session.preimage(args.polynomial, args.target)


def eval_command(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    return session.evaluate(args.polynomial, args.assign)


def dim_command(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    return session.dim(args.m)


def basis_command(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    return session.basis(args.m, args.max_degree, args.words)


def codim_command(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    return session.codim(args.m)


def verify_command(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    service = VerificationService(session.settings)
    report = service.run(seed=args.seed, suites=args.suite)
    if not report.passed:
        failed = [suite.name for suite in report.suites if not suite.passed]
        logger.warning("Verification failed in suites: %s", ", ".join(failed))
    return report.to_document()


COMMANDS: Dict[str, Handler] = {
    "reduce": reduce_command,
    "identity": identity_command,
    "classify": classify_command,
    "preimage": preimage_command,
    "eval": eval_command,
    "dim": dim_command,
    "basis": basis_command,
    "codim": codim_command,
    "verify": verify_command,
}


def dispatch(session: ComputationSession, args: argparse.Namespace) -> BaseModel:
    logger.debug("Dispatching %s", args.command)
    return COMMANDS[args.command](session, args)
