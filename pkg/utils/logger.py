"""
Console logging with ANSI colours and optional Sentry reporting.

Every module gets its logger from create_logger(). Levels print as four
letters (DBUG, INFO, WARN, ERR!, CRIT). Records at ERROR and above are also
sent to Sentry when ONDULA_SENTRY_DSN and ONDULA_SENTRY_ENV are both set.
"""

import logging
from typing import Dict, List, Optional

import sentry_sdk
from sentry_sdk.integrations.logging import EventHandler

from .config import DEBUG_ENABLED, SENTRY_DSN, SENTRY_ENV
from .constants import RELEASE

LOG_FMT_STR = '{0}%(asctime)s.%(msecs)03d {1}[%(levelname)s]{2} %(message)s (%(filename)s:%(lineno)d)' # pylint: disable=line-too-long
LOG_DATE_FMT = '%Y-%m-%d %H:%M:%S'

ANSI_BLUE = '\x1b[36;20m'
ANSI_GREEN = '\x1b[32;20m'
ANSI_GREY = '\x1b[37;1m'
ANSI_RED = '\x1b[31;20m'
ANSI_RED_BOLD = '\x1b[41;1m'
ANSI_YELLOW = '\x1b[33;20m'
ANSI_RESET = '\x1b[0m'

# (level name, timestamp colour, level colour)
LEVEL_STYLES: Dict[int, tuple] = {
    logging.DEBUG: ('DBUG', ANSI_GREY, ANSI_GREEN),
    logging.INFO: ('INFO', ANSI_GREY, ANSI_BLUE),
    logging.WARNING: ('WARN', ANSI_GREY, ANSI_YELLOW),
    logging.ERROR: ('ERR!', ANSI_GREY, ANSI_RED),
    logging.CRITICAL: ('CRIT', ANSI_RED_BOLD, ANSI_RED_BOLD),
}
for _level, (_name, _, _) in LEVEL_STYLES.items():
    logging.addLevelName(_level, _name)

SENTRY_ENABLED = SENTRY_DSN is not None and SENTRY_ENV is not None
if SENTRY_ENABLED:
    sentry_sdk.init(
        dsn=SENTRY_DSN,
        environment=SENTRY_ENV,
        release=RELEASE,
        traces_sample_rate=1.0
    )

# Loggers handed out so far, so that debug mode can be switched on late
_LOGGERS: List[logging.Logger] = []
_DEBUG = DEBUG_ENABLED


class ColorFormatter(logging.Formatter):
    """
    Formatter that colours the timestamp and level name by severity.
    """
    def __init__(self, datefmt: Optional[str] = LOG_DATE_FMT):
        super().__init__(datefmt=datefmt)
        self._formatters = {
            level: logging.Formatter(
                fmt=LOG_FMT_STR.format(stamp, label, ANSI_RESET), datefmt=datefmt
            )
            for level, (_, stamp, label) in LEVEL_STYLES.items()
        }

    def format(self, record: logging.LogRecord) -> str:
        formatter = self._formatters.get(record.levelno, self._formatters[logging.INFO])
        return formatter.format(record)


def _handlers() -> List[logging.Handler]:
    console = logging.StreamHandler()
    console.setFormatter(ColorFormatter())
    handlers: List[logging.Handler] = [console]

    if SENTRY_ENABLED:
        sentry_handler = EventHandler()
        sentry_handler.setLevel(logging.ERROR)
        handlers.append(sentry_handler)
    return handlers


def create_logger(name: str) -> logging.Logger:
    """
    Returns the logger with the given name, with fresh handlers attached.

    :param name: Usually the class or module name.
    """
    logger = logging.getLogger(name)
    logger.handlers.clear()
    logger.setLevel(logging.DEBUG if _DEBUG else logging.INFO)
    for handler in _handlers():
        logger.addHandler(handler)

    if logger not in _LOGGERS:
        _LOGGERS.append(logger)
    return logger


def enable_debug():
    """
    Switches every logger, past and future, to DEBUG.
    """
    global _DEBUG # pylint: disable=global-statement
    _DEBUG = True
    for logger in _LOGGERS:
        logger.setLevel(logging.DEBUG)
