"""
Exit-code contract of the command line.

0 success, 1 verdict false, 2 bad input, 3 unsupported ring or algorithm,
4 internal verification failure.
"""
import sys

import structlog
from pydantic import ValidationError

from bezout.cli.schemas import ErrorDocument
from bezout.errors import BezoutError, UnsupportedRingError, VerificationError

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_BAD_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_VERIFICATION = 4

# first matching class wins
EXIT_CODES: list[tuple[type[BaseException], int]] = [
    (VerificationError, EXIT_VERIFICATION),
    (UnsupportedRingError, EXIT_UNSUPPORTED),
    (ValidationError, EXIT_BAD_INPUT),
    (BezoutError, EXIT_BAD_INPUT),
    (OSError, EXIT_BAD_INPUT),
    (ValueError, EXIT_BAD_INPUT),
]


def exit_code_for(exc: BaseException) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(exc, cls):
            return code
    return EXIT_VERIFICATION


def handle_error(exc: BaseException) -> int:
    """Print the JSON error document, log the failure and return its exit code."""
    code = exit_code_for(exc)
    if code == EXIT_VERIFICATION:
        logger.error("command_failed", error=type(exc).__name__, message=str(exc), exc_info=exc)
    else:
        logger.warning("command_rejected", error=type(exc).__name__, message=str(exc), exit_code=code)
    doc = ErrorDocument(error=type(exc).__name__, message=str(exc))
    sys.stdout.write(doc.model_dump_json(indent=2) + "\n")
    return code
