import logging

from utils import logger as log_module
from utils.logger import ColorFormatter, create_logger, enable_debug


def _record(level: int) -> logging.LogRecord:
    return logging.LogRecord('t', level, __file__, 1, 'alpha %.2f', (0.25,), None)


def test_level_names_are_four_letters():
    assert logging.getLevelName(logging.DEBUG) == 'DBUG'
    assert logging.getLevelName(logging.WARNING) == 'WARN'
    assert logging.getLevelName(logging.ERROR) == 'ERR!'


def test_formatter_colours_by_level():
    formatter = ColorFormatter()
    info = formatter.format(_record(logging.INFO))
    error = formatter.format(_record(logging.ERROR))
    assert 'alpha 0.25' in info
    assert log_module.ANSI_BLUE in info
    assert log_module.ANSI_RED in error


def test_create_logger_does_not_stack_handlers():
    first = create_logger('logger-test')
    count = len(first.handlers)
    second = create_logger('logger-test')
    assert first is second
    assert len(second.handlers) == count


def test_enable_debug_reaches_existing_loggers(monkeypatch):
    monkeypatch.setattr(log_module, '_DEBUG', False)
    logger = create_logger('logger-debug-test')
    assert logger.level == logging.INFO
    enable_debug()
    assert logger.level == logging.DEBUG
    assert create_logger('logger-debug-late').level == logging.DEBUG
