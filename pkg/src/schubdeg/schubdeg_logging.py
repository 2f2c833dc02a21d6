"""
structlog on top of stdlib logging. Every record goes to stderr so that stdout only ever
carries command results; `--json` output stays parseable with logging switched on.
"""

import logging

import structlog

from schubdeg.config import LOG_FORMAT, LOGGING_LEVEL

LOG_FORMATS = ("console", "json")

pre_chain = [
    structlog.stdlib.add_log_level,
    structlog.stdlib.add_logger_name,
    structlog.stdlib.ExtraAdder(),
    structlog.processors.TimeStamper(fmt="%Y-%m-%d %H:%M:%S"),
    structlog.processors.CallsiteParameterAdder(
        [
            structlog.processors.CallsiteParameter.MODULE,
            structlog.processors.CallsiteParameter.LINENO,
        ]
    ),
]

structlog.configure(
    processors=pre_chain
    + [structlog.stdlib.ProcessorFormatter.wrap_for_formatter],  # type: ignore[arg-type]
    logger_factory=structlog.stdlib.LoggerFactory(),
    cache_logger_on_first_use=True,
)


def _renderer(log_format: str):
    if log_format == "json":
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(colors=False)


def build_handler(log_format: str) -> logging.Handler:
    if log_format not in LOG_FORMATS:
        raise ValueError(f"Unknown log format {log_format!r}; expected one of {LOG_FORMATS}")
    formatter = structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=pre_chain,  # type: ignore[arg-type]
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            _renderer(log_format),
        ],
    )
    handler = logging.StreamHandler()
    handler.setFormatter(formatter)
    handler.set_name(f"schubdeg-{log_format}")
    return handler


def configure_schubdeg_logging(level: str | None = None, log_format: str | None = None) -> None:
    """Idempotent: a repeated call replaces the schubdeg handler instead of stacking another."""
    root = logging.getLogger()
    for existing in list(root.handlers):
        if (existing.get_name() or "").startswith("schubdeg-"):
            root.removeHandler(existing)
    root.addHandler(build_handler(log_format or LOG_FORMAT))
    root.setLevel(level or LOGGING_LEVEL)
