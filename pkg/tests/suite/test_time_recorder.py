import pytest

from schubdeg.suite.time_recorder import TimeRecorder, TimeRecorderError


def test_not_started():
    recorder = TimeRecorder()
    with pytest.raises(TimeRecorderError):
        recorder.lap("never")
    with pytest.raises(TimeRecorderError):
        _ = recorder.elapsed_time


def test_start_is_idempotent():
    recorder = TimeRecorder()
    recorder.start_recording_if_not_started()
    first_start = recorder.start_time
    recorder.start_recording_if_not_started()
    assert recorder.start_time == first_start


def test_laps_and_report():
    recorder = TimeRecorder()
    recorder.start_recording_if_not_started()
    first = recorder.lap("parse")
    second = recorder.lap("solve")

    assert first >= 0
    assert second >= 0
    report = recorder.report()
    assert list(report) == ["total_ms", "parse", "solve"]
    assert report["total_ms"] >= report["parse"]


def test_recorders_do_not_share_laps():
    one = TimeRecorder()
    one.start_recording_if_not_started()
    one.lap("a")
    other = TimeRecorder()
    assert other.laps == {}
