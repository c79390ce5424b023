"""
File persistence for sweep results, fit summaries, scans and kernel dumps.
"""

from .dump import read_kernel_dump, write_kernel_dump
from .summary import write_fit_summary
from .sweep_store import SweepStore, read_curve, read_records
from .tables import read_table, write_table
