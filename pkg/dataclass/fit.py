"""
Dataclasses for sweep curves and the fits extracted from them.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from utils.exceptions import FitError

FIT_KINDS = ('anomalous_dimension', 'linear_slope', 'frequency_scaling')


@dataclass(frozen=True)
class SweepCurve:
    """
    Dataclass for an ordered curve of (H/A, ratio) points.
    `spreads` optionally holds the per-point uncertainty of the ratio.
    """
    points: Tuple[Tuple[float, float], ...]
    spreads: Optional[Tuple[float, ...]] = None
    metadata: Dict[str, Any] = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        xs = [x for x, _ in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise FitError('H/A values of a curve must be strictly increasing')
        if any(r <= 0 for _, r in self.points):
            raise FitError('Ratios of a curve must be positive')
        if self.spreads is not None and len(self.spreads) != len(self.points):
            raise FitError('Each curve point needs one spread')

    @property
    def distances(self) -> Tuple[float, ...]:
        """
        Returns the H/A abscissae.
        """
        return tuple(x for x, _ in self.points)

    @property
    def ratios(self) -> Tuple[float, ...]:
        """
        Returns the E/E_planar values.
        """
        return tuple(r for _, r in self.points)


@dataclass(frozen=True)
class FitResult:
    """
    Dataclass for a fitted exponent or slope with its window and quality.
    """
    kind: str
    value: float
    window: Tuple[float, float]
    residual_rms: float
    point_count: int
    metadata: Dict[str, Any] = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        if self.kind not in FIT_KINDS:
            raise FitError(f'Unknown fit kind {self.kind!r}')
