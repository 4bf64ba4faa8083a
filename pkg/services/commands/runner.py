import time
from typing import Optional, Tuple

from loguru import logger

from core.config import settings
from models.reports import CommandReport
from models.run_config import RunConfig
from .base_command import CommandOutcome
from .command_factory import CommandFactory, register_commands
from .context import CommandContext


def ensure_registered() -> None:
    if not CommandFactory.supported_commands():
        register_commands()


def execute(config: RunConfig) -> Tuple[CommandReport, CommandOutcome]:
    """Run the configured command; the report and the raw outcome (for CSV tables)."""
    ensure_registered()
    command = CommandFactory.get_command(config.command)
    context = CommandContext(config)
    started = time.perf_counter()
    outcome = command.run(context)
    elapsed = time.perf_counter() - started
    logger.info(f"{config.command} finished in {elapsed:.3f}s: {'pass' if outcome.passed else 'FAIL'}")
    report = CommandReport(
        command=config.command,
        inputs=config.model_dump(mode="json", exclude={"output"}),
        passed=outcome.passed,
        results=outcome.results,
        checks=outcome.checks,
        wall_time_seconds=round(elapsed, 6) if settings.INCLUDE_TIMING else None,
    )
    return report, outcome


def run_command(config: RunConfig) -> CommandReport:
    """Dispatch a run configuration to its command.

    Input errors raise BraidedDoubleException subclasses (exit code 2); failed
    checks come back as data with passed = False (exit code 1).
    """
    report, _ = execute(config)
    return report


def exit_status(report: Optional[CommandReport]) -> int:
    return 0 if report is not None and report.passed else 1
