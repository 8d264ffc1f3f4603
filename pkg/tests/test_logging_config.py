import io
import sys

import structlog

from src.logging_config import configure_logging


def test_events_go_to_the_current_stderr(monkeypatch):
    configure_logging("INFO")
    first, second = io.StringIO(), io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    structlog.get_logger().info("table finished", links=3)
    assert "table finished" in first.getvalue()
    first.close()
    monkeypatch.setattr(sys, "stderr", second)
    structlog.get_logger().info("module search finished", found=128)
    assert "found=128" in second.getvalue()


def test_level_filters_events(monkeypatch):
    buf = io.StringIO()
    monkeypatch.setattr(sys, "stderr", buf)
    configure_logging("WARNING")
    structlog.get_logger().info("invariant computed", name="3_1")
    structlog.get_logger().warning("structure rejected", error="ybe")
    assert "invariant computed" not in buf.getvalue()
    assert "structure rejected" in buf.getvalue()


def test_unknown_level_falls_back_to_warning(monkeypatch):
    buf = io.StringIO()
    monkeypatch.setattr(sys, "stderr", buf)
    configure_logging("chatty")
    structlog.get_logger().info("schema loaded")
    structlog.get_logger().error("command failed")
    assert buf.getvalue().count("\n") == 1
