"""
Exception hierarchy and process exit codes
"""
from typing import Optional


class ExitCode:
    """Process exit codes"""
    OK = 0
    MISMATCH = 1
    PARSE = 2
    SEMANTIC = 3
    GUARD = 4


class CuntzError(Exception):
    """Base class for every error raised by the library"""


class WordError(CuntzError, ValueError):
    """Illegal word: empty, letters out of range, or unreadable text form"""


class PeriodicWordError(WordError):
    """A nonperiodic word was required"""


class AlphabetMismatchError(CuntzError, ValueError):
    """Operands live over different alphabets (or lengths, for ≺)"""


class PermutationError(CuntzError, ValueError):
    """Table is not a bijection on {1,…,N}^l, or shapes disagree"""


class GuardExceededError(CuntzError, RuntimeError):
    """A configured resource guard refused the request"""


class SigmaParseError(CuntzError, ValueError):
    """A σ file could not be read"""

    def __init__(
        self,
        message: str,
        source: Optional[str] = None,
        line: Optional[int] = None,
        entry: Optional[str] = None
    ):
        """
        Initialize parse error

        Args:
            message: What went wrong
            source: File path or "<inline>"
            line: 1-based line number, if known
            entry: Offending entry text, if known
        """
        super().__init__(message)
        self.message = message
        self.source = source
        self.line = line
        self.entry = entry

    def __str__(self) -> str:
        where = self.source or "<inline>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        if self.entry is not None:
            return f"{where}: {self.message} (entry {self.entry!r})"
        return f"{where}: {self.message}"


def exit_code_for(error: Exception) -> int:
    """
    Map an exception to the exit code the CLI reports

    Args:
        error: Raised exception

    Returns:
        ExitCode value
    """
    if isinstance(error, GuardExceededError):
        return ExitCode.GUARD
    if isinstance(error, (AlphabetMismatchError, PeriodicWordError)):
        return ExitCode.SEMANTIC
    if isinstance(error, (WordError, SigmaParseError, PermutationError)):
        return ExitCode.PARSE
    return ExitCode.SEMANTIC
