"""
Error Handling Utilities

Exception hierarchy for the Cayley forms toolkit and the console helpers used
to report progress and failures.
"""

import sys
from datetime import datetime, timezone
from typing import Optional


_VERBOSE = False


def set_verbose(enabled: bool) -> None:
    """Enable or disable [*] progress messages."""
    global _VERBOSE
    _VERBOSE = enabled


class CayleyError(Exception):
    """Base exception for the Cayley forms toolkit."""

    def __init__(self, message: str, error_code: int = 1):
        super().__init__(message)
        self.error_code = error_code
        self.timestamp = datetime.now(timezone.utc)


class VarSetMismatch(CayleyError):
    """Operands live in different variable sets."""


class UnknownVariable(CayleyError):
    """A variable name is not part of the variable set."""

    def __init__(self, message: str, name: str):
        super().__init__(message)
        self.name = name


class NotDivisible(CayleyError):
    """Exact division left a nonzero remainder."""


class DivisionByZero(CayleyError):
    """Division by the zero polynomial."""


class NotHomogeneous(CayleyError):
    """A homogeneous polynomial was required."""


class NotHarmonic(CayleyError):
    """A polynomial with nonzero Laplacian was passed where a harmonic one is required."""


class DegreeMismatch(CayleyError):
    """Degrees of the inputs are incompatible."""


class NotWeaklyCayley(CayleyError):
    """{F,F} is not in the ideal (Q,F)."""


class MultipleOfQ(CayleyError):
    """The form vanishes identically on the Klein quadric."""


class NotALine(CayleyError):
    """A Pluecker vector does not lie on the Klein quadric."""


class DegenerateQuadric(CayleyError):
    """A diagonal quadric with a zero coefficient."""


class DegenerateSpan(CayleyError):
    """No coordinate point gives a third line of the pencil."""


class DegenerateCurve(CayleyError):
    """A parametrized curve is contained in a plane."""


class NotACurve(CayleyError):
    """The elimination ideal is not cut out by Q and a single form."""


class EmptyCurve(CayleyError):
    """The curve ideal is the unit ideal."""


class CertificateError(CayleyError):
    """A cofactor certificate failed to reconstruct its polynomial."""


class GroebnerBudgetExceeded(CayleyError):
    """A Groebner basis run exceeded the configured degree or step cap."""

    def __init__(self, message: str, degree: Optional[int] = None, steps: Optional[int] = None):
        super().__init__(message)
        self.degree = degree
        self.steps = steps


class ParseError(CayleyError):
    """Polynomial text does not follow the grammar."""

    def __init__(self, message: str, text: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}", error_code=2)
        self.text = text
        self.line = line
        self.column = column


class ValidationError(CayleyError):
    """Input validation errors."""

    def __init__(self, message: str, invalid_input: str = ""):
        super().__init__(message, error_code=2)
        self.invalid_input = invalid_input


class FileSystemError(CayleyError):
    """File system related errors."""

    def __init__(self, message: str, file_path: str):
        super().__init__(message, error_code=3)
        self.file_path = file_path


def describe_error(error: Exception) -> str:
    """Render an error as "Name: message"."""
    return f"{type(error).__name__}: {error}"


def log_error(error: Exception, context: str = "") -> None:
    """
    Log error details with timestamp.

    Args:
        error: The exception that occurred
        context: Additional context about where the error occurred
    """
    timestamp = datetime.now(timezone.utc).isoformat()
    print(f"❌ [{timestamp}] {describe_error(error)}", file=sys.stderr)
    if context:
        print(f"   Context: {context}", file=sys.stderr)

    if isinstance(error, ParseError):
        print(f"   Input: {error.text}", file=sys.stderr)
        print(f"          {' ' * (error.column - 1)}^", file=sys.stderr)

    if isinstance(error, GroebnerBudgetExceeded):
        print(f"   Degree: {error.degree}, steps: {error.steps}", file=sys.stderr)


def print_success(message: str) -> None:
    """Print success message with ✅ indicator."""
    print(f"✅ {message}", file=sys.stderr)


def print_info(message: str) -> None:
    """Print info message with [*] indicator when verbose output is on."""
    if _VERBOSE:
        print(f"[*] {message}", file=sys.stderr)
