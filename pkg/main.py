"""
Application Entry Point & Composition Root

This is the composition root for the nullfil command line.
Responsibilities:
    - Loading settings (packaged defaults or --config PATH)
    - Configuring logging (stderr only)
    - Dispatching the command to the application layer
    - Mapping domain errors to exit codes and error documents

Layer: Composition Root (above all layers)

Exit codes:
    0  success
    1  domain error (any NullfilError) or a failed verify run
    2  usage error (reported by argparse)

Usage:
    nullfil classify --algebra 3 "x1 x2 - x2 x1"
    python main.py dim --algebra 3 --m 2
"""

import sys
from pathlib import Path
from typing import List, Optional

# Ensure project root is in path for imports
project_root = Path(__file__).parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from application.session import ComputationSession
from cli.commands import dispatch
from cli.output import error_document, render, render_error_text, to_json
from cli.parser import build_parser
from config.logging_config import configure_logging, get_logger
from config.settings import get_settings, reload_settings
from core.exceptions import NullfilError, VerificationFailedError
from core.schemas.command_response import ErrorDocument, VerifyDocument

EXIT_OK = 0
EXIT_ERROR = 1


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _report_error(exc: NullfilError, fmt: str) -> int:
    if fmt == "json":
        _emit(to_json(error_document(exc)))
    else:
        sys.stderr.write(render_error_text(exc) + "\n")
    return EXIT_ERROR


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one nullfil command.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        int: Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        settings = reload_settings(args.config) if args.config else get_settings()
    except NullfilError as exc:
        configure_logging()
        return _report_error(exc, args.format)

    configure_logging(
        args.log_level or settings.logging.level,
        args.log_format or settings.logging.format,
    )
    logger = get_logger(__name__)

    try:
        session = ComputationSession(args.algebra, args.field, settings)
        document = dispatch(session, args)
    except NullfilError as exc:
        logger.info("Command %s failed: %s", args.command, exc.message)
        return _report_error(exc, args.format)
    except Exception as exc:  # noqa: BLE001
        logger.exception("Unhandled exception in %s", args.command)
        if args.format == "json":
            _emit(to_json(ErrorDocument(error="internal_error", message=str(exc))))
        else:
            sys.stderr.write(f"error [internal_error]: {exc}\n")
        return EXIT_ERROR

    _emit(render(document, args.format))
    if isinstance(document, VerifyDocument) and not document.passed:
        if args.format == "text":
            sys.stderr.write(render_error_text(VerificationFailedError()) + "\n")
        return EXIT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
