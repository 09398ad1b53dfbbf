"""
Observability package: structured logging for the library and CLI.
"""

from bezout.observability.logging_config import configure_logging

__all__ = ['configure_logging']
