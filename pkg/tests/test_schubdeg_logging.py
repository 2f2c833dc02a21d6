import json
import logging

import pytest

from schubdeg.schubdeg_logging import build_handler, configure_schubdeg_logging


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def _schubdeg_handlers() -> list[logging.Handler]:
    return [
        handler
        for handler in logging.getLogger().handlers
        if (handler.get_name() or "").startswith("schubdeg-")
    ]


def test_unknown_format():
    with pytest.raises(ValueError, match="xml"):
        build_handler("xml")


def test_configure_is_idempotent():
    configure_schubdeg_logging("DEBUG", "console")
    configure_schubdeg_logging("WARNING", "json")

    handlers = _schubdeg_handlers()
    assert [handler.get_name() for handler in handlers] == ["schubdeg-json"]
    assert logging.getLogger().level == logging.WARNING


def test_json_renderer_formats_stdlib_records():
    handler = build_handler("json")
    record = logging.LogRecord(
        name="schubdeg.gvd.split",
        level=logging.INFO,
        pathname=__file__,
        lineno=1,
        msg="GVD split along %s",
        args=("l",),
        exc_info=None,
    )

    payload = json.loads(handler.format(record))

    assert payload["event"] == "GVD split along l"
    assert payload["level"] == "info"
    assert payload["logger"] == "schubdeg.gvd.split"
