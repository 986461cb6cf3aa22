import io
import logging

import pytest

from capg.logger import (
    TRACE_LEVEL,
    ColorFormatter,
    LoggerHandler,
    set_loggers_level,
)


def record(level, msg="something happened"):
    return logging.LogRecord("capg", level, __file__, 1, msg, (), None)


def test_trace_level():
    assert logging.getLevelName(TRACE_LEVEL) == "TRACE"
    assert hasattr(logging.getLogger("capg"), "trace")


@pytest.mark.parametrize(
    "level, expected",
    [
        (logging.INFO, "something happened"),
        (logging.WARNING, "WARNING: something happened"),
        (logging.ERROR, "ERROR: something happened"),
    ],
)
def test_prefix_without_tty(level, expected):
    formatter = ColorFormatter(stream=io.StringIO())
    assert formatter.format(record(level)) == expected


def test_handler_writes_to_its_stream():
    stream = io.StringIO()
    LoggerHandler(stream).emit(record(logging.ERROR, "boom"))
    assert stream.getvalue() == "ERROR: boom\n"


def test_set_loggers_level():
    before = logging.getLogger("capg").level
    try:
        set_loggers_level(logging.DEBUG)
        assert logging.getLogger("capg.graph").level == logging.DEBUG
        assert logging.getLogger("capg.population").level == logging.DEBUG
    finally:
        set_loggers_level(before or logging.INFO)
