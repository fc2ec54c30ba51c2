"""
Errors - Exception hierarchy shared by every computation module

Implements:
- Domain errors (bad mathematical input, exit status 2)
- Precision errors (working precision exhausted, exit status 3)
- Usage errors (malformed command line, exit status 64)
"""

from __future__ import annotations


class DeskError(Exception):
    """Root of all errors raised by padic-desk."""

    exit_code: int = 1


class DomainError(DeskError):
    """Input outside the domain of the requested operation."""

    exit_code = 2


class ExactZeroDivisionError(DomainError, ZeroDivisionError):
    """Division by a value that is exactly zero."""


class UnsupportedFrobeniusError(DomainError):
    """Frobenius matrix whose stable subspaces cannot be enumerated."""


class DataFileError(DomainError):
    """Malformed data file or checksum mismatch."""


class PrecisionError(DeskError):
    """The working precision cannot justify the requested result."""

    exit_code = 3


class UsageError(DeskError):
    """Malformed arguments or unknown subcommand."""

    exit_code = 64
