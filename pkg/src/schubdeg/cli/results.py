import functools
import json
from typing import Any, Callable

import click
import structlog
from pydantic import BaseModel, ConfigDict

from schubdeg import __version__
from schubdeg.suite.time_recorder import TimeRecorder

logger = structlog.get_logger("schubdeg.cli.results")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_HYPOTHESIS_FAILED = 2


class CommandResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: str
    inputs: dict[str, Any]
    result: Any
    certificates: dict[str, Any] = {}
    timing: dict[str, float] | None = None
    version: str = __version__

    def to_json(self) -> str:
        exclude = {"timing"} if self.timing is None else set()
        return self.model_dump_json(by_alias=True, indent=2, exclude=exclude)


def _store_flag(ctx: click.Context, param: click.Parameter, value: bool) -> bool:
    ctx.ensure_object(dict)
    if value:
        ctx.obj[param.name] = True
    return value


def output_options(command: Callable) -> Callable:
    """--json and --timing, accepted on every command as well as on the group."""
    command = click.option(
        "--json",
        "as_json",
        is_flag=True,
        expose_value=False,
        callback=_store_flag,
        help="Emit the result as a JSON document on stdout.",
    )(command)
    command = click.option(
        "--timing",
        is_flag=True,
        expose_value=False,
        callback=_store_flag,
        help="Add wall-clock timings to the output.",
    )(command)
    return command


def emit(
    ctx: click.Context,
    command: str,
    inputs: dict[str, Any],
    result: Any,
    text: str,
    certificates: dict[str, Any] | None = None,
    hypothesis_failed: bool = False,
):
    """Print the result and leave with 2 when a certificate came back negative."""
    timing = None
    recorder: TimeRecorder | None = ctx.obj.get("recorder")
    if ctx.obj.get("timing") and recorder is not None:
        recorder.lap(command)
        timing = recorder.report()
    outcome = CommandResult(
        command=command,
        inputs=inputs,
        result=result,
        certificates=certificates or {},
        timing=timing,
    )
    if ctx.obj.get("as_json"):
        click.echo(outcome.to_json())
    else:
        click.echo(text.rstrip("\n"))
        if timing is not None:
            click.echo(f"timing: {timing}")
    if hypothesis_failed:
        ctx.exit(EXIT_HYPOTHESIS_FAILED)


def fail(ctx: click.Context, error: Exception):
    message = str(error)
    if ctx.obj.get("as_json"):
        payload = {"error": {"type": type(error).__name__, "message": message}}
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"Error ({type(error).__name__}): {message}", err=True)
    ctx.exit(EXIT_ERROR)


def reports_errors(command: Callable) -> Callable:
    """Turn library exceptions into exit code 1 with a typed message."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except Exception as e:
            logger.debug(f"Command failed with {type(e).__name__}", exc_info=True)
            fail(click.get_current_context(), e)

    return wrapper
