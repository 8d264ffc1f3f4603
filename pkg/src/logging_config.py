# src/logging_config.py
from __future__ import annotations
import logging
import os
import sys
from typing import Optional

import structlog

LOG_LEVEL = (os.environ.get("SHADOW_INVAR_LOG_LEVEL") or "WARNING").strip().upper()


def _stderr_logger(*args) -> structlog.PrintLogger:
    # looked up per logger so a replaced sys.stderr is honoured
    return structlog.PrintLogger(file=sys.stderr)


def configure_logging(level: Optional[str] = None) -> None:
    """Render structlog events on stderr; stdout stays reserved for results."""
    name = (level or LOG_LEVEL).upper()
    numeric = logging.getLevelName(name)
    if not isinstance(numeric, int):
        numeric = logging.WARNING
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=_stderr_logger,
        cache_logger_on_first_use=False,
    )
