from .command_handler import CommandHandler
