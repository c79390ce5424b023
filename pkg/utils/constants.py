"""
Constants used throughout the numerical pipeline.
"""

from math import pi

RELEASE = '0.0.0-unknown' # This is replaced by the release tag during CI/CD

# Analytic geometry factor of the planar surface
ALPHA_PLANAR = 1.0 / (4.0 * pi)

# Euler-Mascheroni constant
EULER_GAMMA = 0.57721566490153286060651209008240243

# Default numerical plan (two-point extrapolations in 1/Nx and eps)
DEFAULT_NX_PAIR = (80, 100)
DEFAULT_NX_VERIFY = (180, 200)
DEFAULT_EPSILON_PAIR = (0.02, 0.025)
DEFAULT_N_Q = 128
DEFAULT_Q_MAX = 30.0
DEFAULT_A0X = 0.05
DEFAULT_N0X = 80

# Lattice refinement: sites per corrugation wavelength, and the largest
# factor the site counts are multiplied by to reach it
DEFAULT_POINTS_PER_WAVELENGTH = 16
MAX_REFINEMENT = 4

# Sawtooth smoothing half-width as a fraction of the wavelength
DEFAULT_SAWTOOTH_SMOOTHING = 0.05

# Sawtooth peak position as a fraction of the wavelength
SAWTOOTH_PEAK = 0.8

# A pivot smaller than this fraction of the largest matrix entry is singular
PIVOT_THRESHOLD = 1e-14

# Relative tolerance of the planar check against 1/(4 pi)
PLANAR_CHECK_TOLERANCE = 0.01

# Warn when the second difference of continuum intercepts exceeds this
# fraction of the first difference
LINEARITY_THRESHOLD = 0.1

# Warn when the lattice spacing exceeds this fraction of the dominant wavelength
RESOLUTION_FRACTION = 1.0 / 8.0

# Warn when the sphere radius is not small against the distance
RADIUS_WARN_RATIO = 0.1

# Sweep CSV layout
CSV_HEADER = (
    'profile',
    'omega_A',
    'phi',
    'H_over_A',
    'Hbar_over_A',
    'alpha0_corr',
    'alpha0_planar',
    'ratio',
    'spread',
    'seconds',
)
CSV_ERROR_COLUMN = 'error'
