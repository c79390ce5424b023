"""
Tests for sweep CSVs, fit summaries, scan tables and kernel dumps.
"""

import csv
import json
from math import isnan

import numpy as np
import pytest

from dataclass.fit import FitResult
from dataclass.kernel import KernelSystem
from dataclass.record import SweepRecord
from storage import (SweepStore, read_curve, read_kernel_dump, read_records, read_table,
                     write_fit_summary, write_kernel_dump, write_table)
from utils.constants import CSV_HEADER
from utils.exceptions import ConfigError


def _record(h_over_a: float, ratio: float, error=None) -> SweepRecord:
    if error is not None:
        return SweepRecord('sine', 1.0, 0.0, h_over_a, h_over_a, error=error)
    return SweepRecord(
        'sine', 1.0, 0.0, h_over_a, h_over_a,
        alpha0_corr=0.0797 * ratio, alpha0_planar=0.0797, ratio=ratio, spread=1e-4,
        seconds=1.25
    )


def test_store_writes_header_rows_and_errors(tmp_path):
    path = str(tmp_path / 'sweep.csv')
    with SweepStore(path) as store:
        store.write(_record(2.0, 1.05))
        store.write(_record(0.5, float('nan'), error='Sphere touches the surface'))
        assert store.count == 2

    with open(path, encoding='UTF-8', newline='') as f:
        rows = list(csv.reader(f))
    assert rows[0] == list(CSV_HEADER) + ['error']
    assert rows[1][-1] == ''
    assert rows[2][-1] == 'Sphere touches the surface'
    assert rows[2][CSV_HEADER.index('ratio')] == 'nan'


def test_records_round_trip_exactly(tmp_path):
    path = str(tmp_path / 'sweep.csv')
    record = _record(1.0 / 3.0, 1.0 + 1.0 / 7.0)
    with SweepStore(path) as store:
        store.write(record)
    (read,) = read_records(path)
    assert read.h_over_a == record.h_over_a
    assert read.ratio == record.ratio
    assert read.alpha0_corr == record.alpha0_corr
    assert not read.failed


def test_store_without_error_column(tmp_path):
    path = str(tmp_path / 'sweep.csv')
    with SweepStore(path, with_error=False) as store:
        store.write(_record(1.0, 1.0))
    with open(path, encoding='UTF-8') as f:
        assert f.readline().strip() == ','.join(CSV_HEADER)


def test_write_before_open_fails(tmp_path):
    with pytest.raises(RuntimeError):
        SweepStore(str(tmp_path / 'sweep.csv')).write(_record(1.0, 1.0))


def test_read_curve_sorts_and_skips_failures(tmp_path):
    path = str(tmp_path / 'sweep.csv')
    with SweepStore(path) as store:
        store.write(_record(4.0, 1.02))
        store.write(_record(0.1, float('nan'), error='contact'))
        store.write(_record(1.0, 1.10))
        store.write(_record(2.0, 1.06))
    curve, skipped = read_curve(path)
    assert skipped == 1
    assert curve.distances == (1.0, 2.0, 4.0)
    assert curve.ratios == (1.10, 1.06, 1.02)
    assert curve.metadata['omega_A'] == 1.0
    assert curve.metadata['source'] == path


def test_read_curve_rejects_all_failed(tmp_path):
    path = str(tmp_path / 'sweep.csv')
    with SweepStore(path) as store:
        store.write(_record(0.1, float('nan'), error='contact'))
    with pytest.raises(ConfigError):
        read_curve(path)


def test_read_records_errors(tmp_path):
    with pytest.raises(ConfigError):
        read_records(str(tmp_path / 'absent.csv'))
    path = tmp_path / 'other.csv'
    path.write_text('a,b\n1,2\n', encoding='UTF-8')
    with pytest.raises(ConfigError, match='missing columns'):
        read_records(str(path))


def test_failed_record_keeps_nan_results():
    record = _record(0.5, float('nan'), error='contact')
    assert record.failed
    assert isnan(record.alpha0_corr)


def test_fit_summary(tmp_path):
    path = str(tmp_path / 'fit.json')
    result = FitResult(
        kind='anomalous_dimension', value=0.4, window=(1.5, 5.0), residual_rms=1e-3,
        point_count=7, metadata={'omega_A': 1.0}
    )
    write_fit_summary(path, [result], plan='default')
    with open(path, encoding='UTF-8') as f:
        (entry,) = json.load(f)
    assert entry == {
        'kind': 'anomalous_dimension',
        'value': 0.4,
        'window': [1.5, 5.0],
        'residual_rms': 1e-3,
        'n_points': 7,
        'metadata': {'omega_A': 1.0, 'plan': 'default'},
    }


def test_tables(tmp_path):
    path = str(tmp_path / 'scan.csv')
    write_table(path, ('epsilon', 'alpha_intercept'), [(0.02, 0.08), (0.025, 0.0805)])
    header, rows = read_table(path)
    assert header == ['epsilon', 'alpha_intercept']
    assert rows == [[0.02, 0.08], [0.025, 0.0805]]

    bad = tmp_path / 'bad.csv'
    bad.write_text('epsilon\nabc\n', encoding='UTF-8')
    with pytest.raises(ConfigError):
        read_table(str(bad))


def test_kernel_dump(tmp_path):
    path = str(tmp_path / 'kernel.bin')
    matrix = np.arange(9, dtype=float).reshape(3, 3)
    system = KernelSystem(
        q=1.5, epsilon=0.02, matrix=matrix, rhs=np.array([1.0, 2.0, 3.0]),
        weights=np.array([0.1, 0.2, 0.3])
    )
    write_kernel_dump(path, system)
    raw = np.fromfile(path, dtype='<f8')
    assert list(raw[:3]) == [3.0, 1.5, 0.02]
    assert len(raw) == 3 + 9 + 6

    loaded = read_kernel_dump(path)
    assert loaded.nx == 3
    assert loaded.q == 1.5
    assert np.array_equal(loaded.matrix, matrix)
    assert np.array_equal(loaded.weights, system.weights)

    (tmp_path / 'short.bin').write_bytes(np.array([5.0, 1.0, 0.02], dtype='<f8').tobytes())
    with pytest.raises(ConfigError):
        read_kernel_dump(str(tmp_path / 'short.bin'))
