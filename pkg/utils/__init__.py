from .errors import (
    AlphabetMismatchError,
    CuntzError,
    ExitCode,
    GuardExceededError,
    PeriodicWordError,
    PermutationError,
    SigmaParseError,
    WordError,
    exit_code_for,
)
from .console import set_quiet, status
