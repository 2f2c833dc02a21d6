import asyncio
from typing import Sequence

import structlog
from pydantic import BaseModel, ConfigDict, computed_field
from rich.table import Table

from schubdeg.suite.acceptance import CHECKS, CheckOutcome
from schubdeg.suite.time_recorder import TimeRecorder

logger = structlog.get_logger("schubdeg.suite.runner")


class UnknownCheckError(Exception):
    pass


class SuiteReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    full: bool
    outcomes: list[CheckOutcome]
    timings: dict[str, float] | None = None

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)


def _timed_check(name: str, full: bool) -> tuple[CheckOutcome, float]:
    recorder = TimeRecorder()
    recorder.start_recording_if_not_started()
    outcome = CHECKS[name](full)
    return outcome, recorder.lap(name)


def select_checks(only: Sequence[str] = ()) -> list[str]:
    unknown = [name for name in only if name not in CHECKS]
    if unknown:
        raise UnknownCheckError(
            f"Unknown check(s) {', '.join(unknown)}; available: {', '.join(CHECKS)}"
        )
    return sorted(only or CHECKS)


async def run_suite(
    only: Sequence[str] = (), full: bool = False, timing: bool = False
) -> SuiteReport:
    """Each check runs in a worker thread; outcomes are sorted by name afterwards."""
    names = select_checks(only)
    logger.info(f"Running {len(names)} checks ({'full' if full else 'quick'} sweep)")
    async with asyncio.TaskGroup() as tg:
        tasks = {
            name: tg.create_task(asyncio.to_thread(_timed_check, name, full)) for name in names
        }
    results = {name: task.result() for name, task in tasks.items()}
    for name, (outcome, elapsed_ms) in results.items():
        logger.info(f"Check {name}: {'pass' if outcome.passed else 'FAIL'} in {elapsed_ms:.0f} ms")
    return SuiteReport(
        full=full,
        outcomes=[results[name][0] for name in sorted(results)],
        timings={name: round(results[name][1], 3) for name in sorted(results)} if timing else None,
    )


def suite_table(report: SuiteReport) -> Table:
    table = Table(title="schubdeg acceptance suite")
    table.add_column("check")
    table.add_column("cases", justify="right")
    table.add_column("result")
    table.add_column("first failure")
    if report.timings is not None:
        table.add_column("ms", justify="right")
    for outcome in report.outcomes:
        row = [
            outcome.name,
            str(outcome.cases),
            "[green]pass[/green]" if outcome.passed else "[red]FAIL[/red]",
            outcome.failures[0] if outcome.failures else "",
        ]
        if report.timings is not None:
            row.append(f"{report.timings[outcome.name]:.0f}")
        table.add_row(*row)
    return table
