from typing import Dict, List, Type

from loguru import logger

from core.exceptions import UnknownCommandError
from .base_command import BaseCommand


class CommandFactory:
    """Factory class for creating CLI commands"""

    _commands: Dict[str, Type[BaseCommand]] = {}

    @classmethod
    def register_command(cls, command_class: Type[BaseCommand]) -> None:
        """Register a command class under its name"""
        cls._commands[command_class.name] = command_class
        logger.debug(f"Registered command {command_class.__name__} as {command_class.name}")

    @classmethod
    def get_command(cls, name: str) -> BaseCommand:
        """Get a command instance by name"""
        command_class = cls._commands.get(name)
        if not command_class:
            raise UnknownCommandError(name, cls.supported_commands())
        return command_class()

    @classmethod
    def supported_commands(cls) -> List[str]:
        return sorted(cls._commands)

    @classmethod
    def operations(cls) -> Dict[str, List[str]]:
        """Library operations exercised by each command"""
        return {name: list(cls._commands[name].operations) for name in cls.supported_commands()}


# Import and register commands
def register_commands():
    """Register all available commands"""
    from .commands.structure_commands import (
        CheckQYDCommand,
        ClassifyOneDimCommand,
        PerfectSubquotientCommand,
    )
    from .commands.double_commands import (
        FreeDoublePBWCommand,
        HCGramCommand,
        MinimalRelationsCommand,
        MinimalityCommand,
        QuadraticDimsCommand,
        StandardModuleCommand,
    )
    from .commands.nichols_commands import (
        DeformedHilbertCommand,
        KaplanskyCommand,
        NicholsHilbertCommand,
    )
    from .commands.cherednik_commands import (
        CherednikPBWCommand,
        DunklCheckCommand,
        EmbedCheckCommand,
        FominKirillovCommand,
        RestrictedDimsCommand,
    )

    for command_class in (
        CheckQYDCommand,
        ClassifyOneDimCommand,
        PerfectSubquotientCommand,
        FreeDoublePBWCommand,
        HCGramCommand,
        MinimalRelationsCommand,
        MinimalityCommand,
        QuadraticDimsCommand,
        StandardModuleCommand,
        DeformedHilbertCommand,
        KaplanskyCommand,
        NicholsHilbertCommand,
        CherednikPBWCommand,
        DunklCheckCommand,
        EmbedCheckCommand,
        FominKirillovCommand,
        RestrictedDimsCommand,
    ):
        CommandFactory.register_command(command_class)
