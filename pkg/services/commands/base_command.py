from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar, Dict, List, Optional

from loguru import logger

from models.reports import CheckReport
from .context import CommandContext


@dataclass
class CommandOutcome:
    """What a command hands back to the runner.

    Attributes:
        results: command-specific payload
        checks: verification reports; the run passes when all of them pass
        table: optional rows for CSV output
    """
    results: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckReport] = field(default_factory=list)
    table: Optional[List[Dict[str, Any]]] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class BaseCommand(ABC):
    """Abstract base class for CLI commands"""

    name: ClassVar[str] = ""
    # library operations reachable through this command
    operations: ClassVar[List[str]] = []

    def __init__(self):
        self.context: Optional[CommandContext] = None

    @abstractmethod
    def execute(self, context: CommandContext) -> CommandOutcome:
        """Run the command against a resolved configuration"""
        pass

    def run(self, context: CommandContext) -> CommandOutcome:
        self.context = context
        logger.info(f"Running {self.name} with truncation {context.truncation} over {context.field}")
        outcome = self.execute(context)
        failed = [check.check for check in outcome.checks if not check.passed]
        if failed:
            logger.warning(f"{self.name}: failed checks {failed}")
        return outcome

    @staticmethod
    def hilbert_rows(series: Dict[str, List[int]]) -> List[Dict[str, Any]]:
        """One CSV row per degree with one column per series."""
        length = max((len(values) for values in series.values()), default=0)
        rows = []
        for n in range(length):
            row: Dict[str, Any] = {"degree": n}
            for name, values in series.items():
                row[name] = values[n] if n < len(values) else None
            rows.append(row)
        return rows
