from .base_command import BaseCommand, CommandOutcome
from .command_factory import CommandFactory, register_commands
from .context import CommandContext
from .runner import execute, exit_status, run_command

__all__ = [
    "BaseCommand",
    "CommandContext",
    "CommandFactory",
    "CommandOutcome",
    "execute",
    "exit_status",
    "register_commands",
    "run_command",
]
