"""
Diagnostics channel. stdout carries data only, so status lines go to stderr.
"""
import sys

_quiet = False


def set_quiet(quiet: bool) -> None:
    """Silence (or re-enable) status output"""
    global _quiet
    _quiet = quiet


def status(message: str) -> None:
    """Print a status line to stderr"""
    if not _quiet:
        print(message, file=sys.stderr)
