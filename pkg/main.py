"""
cuntz-branching - Main Entry Point
"""
import sys
from typing import Optional, Sequence

from config import config
from handlers import CommandHandler
from utils.console import status
from utils.errors import ExitCode


def setup_handler() -> Optional[CommandHandler]:
    """Validate configuration and build the command handler"""
    try:
        config.validate_config()
    except ValueError as e:
        status(f"❌ {e}")
        return None
    return CommandHandler()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point"""
    handler = setup_handler()
    if handler is None:
        return ExitCode.SEMANTIC
    return handler.run(argv)


if __name__ == "__main__":
    sys.exit(main())
