"""
Dataclass for one row of a sweep CSV.
"""

from dataclasses import dataclass
from typing import List, Optional

from utils.constants import CSV_HEADER

NAN = float('nan')


def _number(value: float) -> str:
    # Round-trips exactly, so ratios can be recomputed from the stored values
    return repr(float(value))


@dataclass(frozen=True)
class SweepRecord:
    """
    Dataclass for one sweep point. Failed points keep their coordinates and
    carry the error message instead of results.
    """
    profile: str
    omega_a: float
    phi: float
    h_over_a: float
    hbar_over_a: float
    alpha0_corr: float = NAN
    alpha0_planar: float = NAN
    ratio: float = NAN
    spread: float = NAN
    seconds: float = 0.0
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        """
        Returns whether this point failed.
        """
        return self.error is not None

    def row(self, with_error: bool = False) -> List[str]:
        """
        Returns the CSV cells in header order.

        :param with_error: Append the error column.
        """
        cells = [
            self.profile,
            _number(self.omega_a),
            _number(self.phi),
            _number(self.h_over_a),
            _number(self.hbar_over_a),
            _number(self.alpha0_corr),
            _number(self.alpha0_planar),
            _number(self.ratio),
            _number(self.spread),
            f'{self.seconds:.3f}',
        ]
        assert len(cells) == len(CSV_HEADER)
        if with_error:
            cells.append('' if self.error is None else self.error)
        return cells
