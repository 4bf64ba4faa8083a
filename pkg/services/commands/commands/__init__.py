from .cherednik_commands import (
    CherednikPBWCommand,
    DunklCheckCommand,
    EmbedCheckCommand,
    FominKirillovCommand,
    RestrictedDimsCommand,
)
from .double_commands import (
    FreeDoublePBWCommand,
    HCGramCommand,
    MinimalityCommand,
    MinimalRelationsCommand,
    QuadraticDimsCommand,
    StandardModuleCommand,
)
from .nichols_commands import DeformedHilbertCommand, KaplanskyCommand, NicholsHilbertCommand
from .structure_commands import CheckQYDCommand, ClassifyOneDimCommand, PerfectSubquotientCommand

__all__ = [
    "CheckQYDCommand",
    "CherednikPBWCommand",
    "ClassifyOneDimCommand",
    "DeformedHilbertCommand",
    "DunklCheckCommand",
    "EmbedCheckCommand",
    "FominKirillovCommand",
    "FreeDoublePBWCommand",
    "HCGramCommand",
    "KaplanskyCommand",
    "MinimalRelationsCommand",
    "MinimalityCommand",
    "NicholsHilbertCommand",
    "PerfectSubquotientCommand",
    "QuadraticDimsCommand",
    "RestrictedDimsCommand",
    "StandardModuleCommand",
]
