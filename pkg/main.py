from pathlib import Path
from typing import Any, Dict, Optional

import orjson
import pandas as pd
import pydantic
import typer
from loguru import logger
from rich.console import Console
from rich.table import Table

from core.config import override_settings, settings
from core.exceptions import INPUT_ERROR, BraidedDoubleException, ConfigurationError, ValidationError
from core.logging import setup_logging
from models.run_config import RunConfig
from services.commands import CommandFactory, execute, exit_status, register_commands

app = typer.Typer(
    name="braided-doubles",
    help="Exact computations with braided doubles over finite group algebras",
    add_completion=False,
)

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


def load_config(path: Optional[Path], overrides: Dict[str, Any]) -> RunConfig:
    data: Dict[str, Any] = {}
    if path is not None:
        try:
            data = orjson.loads(path.read_bytes())
        except FileNotFoundError:
            raise ConfigurationError("config", f"{path} does not exist")
        except orjson.JSONDecodeError as e:
            raise ConfigurationError("config", f"{path} is not valid JSON: {e}")
        if not isinstance(data, dict):
            raise ConfigurationError("config", "the top level must be an object")
    data.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return RunConfig.model_validate(data)
    except pydantic.ValidationError as e:
        raise ValidationError(errors=e.errors(include_url=False, include_context=False))


def emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
        logger.info(f"Report written to {output}")
    else:
        typer.echo(text, nl=False)


def list_commands() -> None:
    table = Table(title="Commands")
    table.add_column("command")
    table.add_column("operations")
    for name, operations in CommandFactory.operations().items():
        table.add_row(name, ", ".join(operations))
    Console().print(table)


@app.command()
def run(
    config: Optional[Path] = typer.Option(None, "--config", help="JSON run configuration"),
    command: Optional[str] = typer.Option(None, "--command", help="Overrides the command of the configuration"),
    seed: Optional[int] = typer.Option(None, "--seed", min=0, help="Seed for every random choice"),
    trials: Optional[int] = typer.Option(None, "--trials", help="Specializations for generic parameters"),
    output: Optional[str] = typer.Option(None, "--output", help="Write the report here instead of stdout"),
    output_format: str = typer.Option("json", "--format", help="json or csv"),
    threads: Optional[int] = typer.Option(None, "--threads", min=1, help="Worker threads"),
    max_group_order: Optional[int] = typer.Option(None, "--max-group-order", min=1, help="Group closure cap"),
    max_matrix_dim: Optional[int] = typer.Option(None, "--max-matrix-dim", min=1, help="Column cap for degree operators"),
    timing: bool = typer.Option(False, "--timing", help="Include wall time in the report; off by default so repeated runs print identical bytes (also INCLUDE_TIMING)"),
    show_commands: bool = typer.Option(False, "--list-commands", help="List the commands and exit"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Overrides LOG_LEVEL"),
):
    """Run one command and print its JSON report.

    Exit status: 0 when every check passes, 1 when a check fails, 2 on input errors.
    """
    setup_logging(log_level)
    register_commands()
    if show_commands:
        list_commands()
        raise typer.Exit(0)

    try:
        if output_format not in ("json", "csv"):
            raise ConfigurationError("format", f"{output_format} is neither json nor csv")
        override_settings(
            THREADS=threads,
            MAX_GROUP_ORDER=max_group_order,
            MAX_MATRIX_DIM=max_matrix_dim,
            INCLUDE_TIMING=True if timing else None,
        )
        run_config = load_config(config, {"command": command, "seed": seed, "trials": trials, "output": output})
        report, outcome = execute(run_config)
        if output_format == "csv":
            if outcome.table is None:
                raise ConfigurationError("format", f"{run_config.command} has no tabular output")
            emit(pd.DataFrame(outcome.table).to_csv(index=False), run_config.output)
        else:
            emit(orjson.dumps(report.model_dump(mode="json"), option=JSON_OPTIONS).decode() + "\n", run_config.output)
    except BraidedDoubleException as e:
        logger.error(f"{e.error_code}: {e.message}")
        typer.echo(orjson.dumps(e.to_dict(), option=JSON_OPTIONS).decode())
        raise typer.Exit(e.exit_code)
    except Exception as e:
        logger.exception(f"Unhandled exception: {str(e)}")
        error = {"error": {"code": "INTERNAL_ERROR", "message": str(e), "exit_code": INPUT_ERROR}}
        typer.echo(orjson.dumps(error, option=JSON_OPTIONS).decode())
        raise typer.Exit(INPUT_ERROR)

    raise typer.Exit(exit_status(report))


if __name__ == "__main__":
    app()
