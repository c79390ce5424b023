"""
Dataclasses for storing Ondula's configuration objects.
"""

from dataclasses import asdict, dataclass, field
from math import pi
from typing import Any, Dict, List, Optional, Tuple

from utils.constants import (DEFAULT_A0X, DEFAULT_EPSILON_PAIR, DEFAULT_N0X,
                             DEFAULT_N_Q, DEFAULT_NX_PAIR, DEFAULT_NX_VERIFY,
                             DEFAULT_POINTS_PER_WAVELENGTH, DEFAULT_Q_MAX,
                             DEFAULT_SAWTOOTH_SMOOTHING)
from utils.exceptions import ConfigError

PROFILE_KINDS = ('planar', 'sine', 'sawtooth', 'tabulated')
RESCALE_MODES = ('normal', 'mean')


@dataclass(frozen=True)
class NumericalPlan:
    """
    Dataclass for storing the numerical parameters shared by every alpha estimate.
    Two estimates may only be compared if their plans are equal.
    """
    nx_pair: Tuple[int, int] = DEFAULT_NX_PAIR
    nx_verify: Tuple[int, int] = DEFAULT_NX_VERIFY
    epsilon_pair: Tuple[float, float] = DEFAULT_EPSILON_PAIR
    n_q: int = DEFAULT_N_Q
    q_max: float = DEFAULT_Q_MAX
    a0x: float = DEFAULT_A0X
    n0x: int = DEFAULT_N0X
    lx_override: Optional[float] = None
    verify: bool = True
    points_per_wavelength: int = DEFAULT_POINTS_PER_WAVELENGTH

    # Type and value checking
    def __post_init__(self):
        if len(self.nx_pair) != 2 or len(self.nx_verify) != 2:
            raise ConfigError('nx_pair and nx_verify must hold two site counts')
        if len(self.epsilon_pair) != 2:
            raise ConfigError('epsilon_pair must hold two cutoffs')
        for nx in (*self.nx_pair, *self.nx_verify):
            if not isinstance(nx, int):
                raise TypeError('site counts must be ints')
            if nx < self.n0x or nx % 2 != 0:
                raise ConfigError(f'site count {nx} must be even and at least n0x={self.n0x}')
        if self.nx_pair[0] == self.nx_pair[1] or self.nx_verify[0] == self.nx_verify[1]:
            raise ConfigError('site counts of a pair must differ')
        if min(self.epsilon_pair) <= 0 or self.epsilon_pair[0] == self.epsilon_pair[1]:
            raise ConfigError('epsilon_pair must hold two distinct positive cutoffs')
        if self.n_q < 8:
            raise ConfigError('n_q must be at least 8')
        if self.q_max <= 5:
            raise ConfigError('q_max must exceed 5')
        if self.a0x <= 0:
            raise ConfigError('a0x must be positive')
        if self.n0x < 2 or self.n0x % 2 != 0:
            raise ConfigError('n0x must be an even integer of at least 2')
        if self.lx_override is not None and self.lx_override <= 0:
            raise ConfigError('lx_override must be positive')
        if not isinstance(self.points_per_wavelength, int) or self.points_per_wavelength < 0:
            raise ConfigError('points_per_wavelength must be a nonnegative int')


@dataclass
class ProfileSpec:
    """
    Dataclass for storing the corrugation parameters in units of the amplitude A.
    """
    kind: str = 'sine'
    amplitude: float = 1.0
    omega: float = 1.0
    phase: float = 0.0
    wavelength: float = 2.8
    smoothing: float = DEFAULT_SAWTOOTH_SMOOTHING
    table: Optional[str] = None

    def __post_init__(self):
        if self.kind not in PROFILE_KINDS:
            raise ConfigError(f'Unknown profile kind {self.kind!r}')
        if self.amplitude <= 0:
            raise ConfigError('amplitude must be positive')
        if self.kind == 'sine' and self.omega <= 0:
            raise ConfigError('omega must be positive')
        if self.kind == 'sawtooth':
            if self.wavelength <= 0:
                raise ConfigError('wavelength must be positive')
            if not 0 < self.smoothing < 0.1:
                raise ConfigError('smoothing must lie in (0, 0.1) wavelengths')
        if self.kind == 'tabulated' and self.table is None:
            raise ConfigError('tabulated profiles need a table file')

    @property
    def omega_a(self) -> float:
        """
        Returns the dimensionless corrugation frequency written to sweep records.
        """
        if self.kind == 'sine':
            return self.omega * self.amplitude
        if self.kind == 'sawtooth':
            return 2.0 * pi / self.wavelength
        return 0.0


@dataclass
class SweepSpec:
    """
    Dataclass for storing the sweep coordinates.
    """
    vertical: List[float] = field(default_factory=list)
    lateral: List[float] = field(default_factory=list)
    hbar_over_a: float = 4.0
    point: Optional[float] = None

    def __post_init__(self):
        if any(h <= 0 for h in self.vertical):
            raise ConfigError('vertical sweep values must be positive')
        if self.hbar_over_a <= 0:
            raise ConfigError('hbar_over_a must be positive')
        if self.point is not None and self.point <= 0:
            raise ConfigError('point must be positive')


@dataclass
class Config:
    """
    Dataclass for storing Ondula's configuration.
    """
    profile: ProfileSpec = field(default_factory=ProfileSpec)
    sweep: SweepSpec = field(default_factory=SweepSpec)
    plan: NumericalPlan = field(default_factory=NumericalPlan)

    # Geometry conventions
    rescale_by: str = 'normal'
    radius: float = 0.0

    # Output paths
    csv_path: str = 'sweep.csv'
    fit_json_path: str = 'fit.json'
    plot_script_path: str = 'plot.py'

    # Runtime
    workers: int = 0
    debug_enabled: bool = False

    def __post_init__(self):
        if self.rescale_by not in RESCALE_MODES:
            raise ConfigError(f'rescale_by must be one of {RESCALE_MODES}')
        if self.radius < 0:
            raise ConfigError('radius must not be negative')
        if not isinstance(self.workers, int) or self.workers < 0:
            raise ConfigError('workers must be a nonnegative int')

    def as_dict(self) -> Dict[str, Any]:
        """
        Returns the resolved configuration as plain data, for --print-config.
        """
        return asdict(self)
