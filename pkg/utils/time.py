"""
Wall-time measurement and formatting for sweep reports.
"""

from time import perf_counter
from typing import Optional


def human_readable_time(sec: float) -> str:
    """
    Formats a duration as e.g. '1 hr 2 min', '3 min 4 sec' or '0.52 sec'.
    Sub-minute durations keep two decimals.
    """
    minute, rest = divmod(max(sec, 0.0), 60)
    hour, minute = divmod(int(minute), 60)
    if hour == 0 and minute == 0:
        return f'{rest:.2f} sec'

    parts = []
    if hour > 0:
        parts.append(f'{hour} hr')
    if minute > 0:
        parts.append(f'{minute} min')
    if hour == 0 and int(rest) > 0:
        parts.append(f'{int(rest)} sec')
    return ' '.join(parts)


class Stopwatch:
    """
    Context manager measuring wall time with perf_counter.
    Reading `elapsed` inside the block gives the time so far.
    """
    def __init__(self):
        self._start: Optional[float] = None
        self._stop: Optional[float] = None

    def __enter__(self) -> 'Stopwatch':
        self._start = perf_counter()
        self._stop = None
        return self

    def __exit__(self, *_):
        self._stop = perf_counter()

    @property
    def elapsed(self) -> float:
        """
        Seconds since the block was entered.
        """
        if self._start is None:
            return 0.0
        end = perf_counter() if self._stop is None else self._stop
        return end - self._start

    def __str__(self) -> str:
        return human_readable_time(self.elapsed)
