import time

import structlog
from pydantic import BaseModel, computed_field

logger = structlog.get_logger("schubdeg.suite.time_recorder")


class TimeRecorderError(Exception):
    pass


class TimeRecorder(BaseModel):
    start_time: float | None = None
    time_from_last_lap: float | None = None
    laps: dict[str, float] = {}

    def start_recording_if_not_started(self):
        if self.start_time is None:
            self.start_time = time.perf_counter()
            self.time_from_last_lap = self.start_time

    @computed_field  # type: ignore[misc]
    @property
    def elapsed_time(self) -> float:
        if self.start_time is None:
            raise TimeRecorderError("TimeRecorder has not started recording time")
        return time.perf_counter() - self.start_time

    def lap(self, name: str) -> float:
        """
        Record the milliseconds spent since the previous lap (or since the start)
        under `name` and return them.
        """
        if self.time_from_last_lap is None:
            raise TimeRecorderError("TimeRecorder has not started recording time")
        now = time.perf_counter()
        elapsed_ms = (now - self.time_from_last_lap) * 1000
        self.time_from_last_lap = now
        self.laps[name] = elapsed_ms
        logger.debug(f"Lap {name}: {elapsed_ms:.1f} ms")
        return elapsed_ms

    def report(self) -> dict[str, float]:
        return {"total_ms": round(self.elapsed_time * 1000, 3)} | {
            name: round(ms, 3) for name, ms in self.laps.items()
        }
