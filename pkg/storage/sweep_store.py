"""
CSV store for sweep records.
"""

import csv
from threading import Lock
from typing import TYPE_CHECKING, Dict, List, Optional, TextIO, Tuple

from dataclass.fit import SweepCurve
from dataclass.record import SweepRecord
from utils.constants import CSV_ERROR_COLUMN, CSV_HEADER
from utils.exceptions import ConfigError
from utils.logger import create_logger

if TYPE_CHECKING:
    from types import TracebackType


class SweepStore:
    """
    Single writer for a sweep CSV. Rows are written in the order they are
    handed in; callers hand them in sweep order.
    """
    def __init__(self, path: str, with_error: bool = True):
        """
        Constructor for SweepStore.

        :param path: Output CSV path, truncated on open.
        :param with_error: Include the trailing error column.
        """
        self._path = path
        self._with_error = with_error
        self._file: Optional[TextIO] = None
        self._writer = None
        self._lock = Lock()
        self._count = 0
        self._logger = create_logger(self.__class__.__name__)

    @property
    def path(self) -> str:
        """
        Gets the output path.
        """
        return self._path

    @property
    def count(self) -> int:
        """
        Gets the number of rows written so far.
        """
        return self._count

    def __enter__(self) -> 'SweepStore':
        self.open()
        return self

    def __exit__(
        self,
        exc_type: Optional[type],
        exc: Optional[BaseException],
        traceback: Optional['TracebackType']
    ):
        self.close()

    def open(self):
        """
        Opens the file and writes the header.
        """
        self._file = open(self._path, 'w', encoding='UTF-8', newline='') # pylint: disable=consider-using-with
        self._writer = csv.writer(self._file)
        header = list(CSV_HEADER)
        if self._with_error:
            header.append(CSV_ERROR_COLUMN)
        self._writer.writerow(header)
        self._logger.debug('Writing sweep to %s', self._path)

    def write(self, record: SweepRecord):
        """
        Appends one record and flushes it to disk.
        """
        if self._writer is None or self._file is None:
            raise RuntimeError('SweepStore has not been opened')
        with self._lock:
            self._writer.writerow(record.row(self._with_error))
            self._file.flush()
            self._count += 1

    def close(self):
        """
        Closes the file.
        """
        if self._file is not None:
            self._file.close()
            self._file = None
            self._writer = None
            self._logger.info('Wrote %d rows to %s', self._count, self._path)


def _float(row: Dict[str, str], key: str) -> float:
    return float(row[key])


def read_records(path: str) -> List[SweepRecord]:
    """
    Reads every row of a sweep CSV, failed points included.
    """
    try:
        with open(path, encoding='UTF-8', newline='') as f:
            reader = csv.DictReader(f)
            missing = [key for key in CSV_HEADER if key not in (reader.fieldnames or [])]
            if missing:
                raise ConfigError(f'{path} is missing columns {", ".join(missing)}')
            records = []
            for row in reader:
                error = row.get(CSV_ERROR_COLUMN) or None
                records.append(SweepRecord(
                    profile=row['profile'],
                    omega_a=_float(row, 'omega_A'),
                    phi=_float(row, 'phi'),
                    h_over_a=_float(row, 'H_over_A'),
                    hbar_over_a=_float(row, 'Hbar_over_A'),
                    alpha0_corr=_float(row, 'alpha0_corr'),
                    alpha0_planar=_float(row, 'alpha0_planar'),
                    ratio=_float(row, 'ratio'),
                    spread=_float(row, 'spread'),
                    seconds=_float(row, 'seconds'),
                    error=error
                ))
    except OSError as e:
        raise ConfigError(f'Cannot read {path}: {e.strerror}') from e
    except (ValueError, KeyError) as e:
        raise ConfigError(f'{path} is not a valid sweep CSV: {e}') from e
    return records


def read_curve(path: str) -> Tuple[SweepCurve, int]:
    """
    Reads a vertical sweep CSV into a curve ordered by H/A.

    :return: Tuple (curve, number of skipped error rows).
    """
    records = read_records(path)
    good = sorted((r for r in records if not r.failed), key=lambda r: r.h_over_a)
    skipped = len(records) - len(good)
    if not good:
        raise ConfigError(f'{path} holds no successful sweep points')

    first = good[0]
    curve = SweepCurve(
        points=tuple((r.h_over_a, r.ratio) for r in good),
        spreads=tuple(r.spread for r in good),
        metadata={
            'source': path,
            'profile': first.profile,
            'omega_A': first.omega_a,
            'phi': first.phi,
        }
    )
    return curve, skipped
