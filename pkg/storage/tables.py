"""
Plain numeric CSV tables for linearity and continuum scans.
"""

import csv
from typing import List, Sequence, Tuple

from utils.exceptions import ConfigError


def write_table(path: str, header: Sequence[str], rows: Sequence[Sequence[float]]):
    """
    Writes a header and numeric rows.
    """
    with open(path, 'w', encoding='UTF-8', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(value)) for value in row])


def read_table(path: str) -> Tuple[List[str], List[List[float]]]:
    """
    Reads a table written by write_table.

    :return: Tuple (header, rows).
    """
    try:
        with open(path, encoding='UTF-8', newline='') as f:
            reader = csv.reader(f)
            header = next(reader)
            rows = [[float(value) for value in row] for row in reader if row]
    except OSError as e:
        raise ConfigError(f'Cannot read {path}: {e.strerror}') from e
    except (StopIteration, ValueError) as e:
        raise ConfigError(f'{path} is not a numeric table') from e
    return header, rows
