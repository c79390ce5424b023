"""
Modified Bessel functions of the second kind, orders zero and one.

The argument range is split at z = 2. Below it, the ascending series
with harmonic-number coefficients is summed to a fixed order. Above it,
Steed's continued fraction for K_0 and the ratio K_1/K_0 is iterated
until every element has converged. Both branches reach double precision
and are vectorised over numpy arrays.
"""

from typing import Tuple, Union

import numpy as np

from utils.constants import EULER_GAMMA
from utils.exceptions import DomainError, NumericalFailure

ArrayLike = Union[float, np.ndarray]

# Branch point between the series and the continued fraction
SERIES_LIMIT = 2.0

# (z/2)^2 <= 1 on the series branch, so 25 terms are far below 1e-16
SERIES_TERMS = 25

CF_MAX_ITERATIONS = 150
CF_TOLERANCE = 1e-16


def _series(z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    y = 0.25 * z * z
    log_half = np.log(0.5 * z)

    # k = 0 terms
    term0 = np.ones_like(z)   # y^k / (k!)^2
    term1 = np.ones_like(z)   # y^k / (k! (k+1)!)
    i0_sum = term0.copy()
    k0_sum = np.zeros_like(z)
    i1_sum = term1.copy()
    k1_sum = term1 * (1.0 - 2.0 * EULER_GAMMA)

    harmonic = 0.0
    for k in range(1, SERIES_TERMS):
        harmonic += 1.0 / k
        term0 = term0 * y / (k * k)
        term1 = term1 * y / (k * (k + 1))
        i0_sum += term0
        i1_sum += term1
        k0_sum += term0 * harmonic

        # psi(k+1) + psi(k+2)
        k1_sum += term1 * (2.0 * harmonic + 1.0 / (k + 1) - 2.0 * EULER_GAMMA)

    k0 = -(log_half + EULER_GAMMA) * i0_sum + k0_sum
    i1 = 0.5 * z * i1_sum
    k1 = 1.0 / z + log_half * i1 - 0.25 * z * k1_sum
    return k0, k1


def _continued_fraction(z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    a1 = 0.25
    b = 2.0 * (1.0 + z)
    d = 1.0 / b
    h = d.copy()
    delh = d.copy()
    q1 = np.zeros_like(z)
    q2 = np.ones_like(z)
    q = np.full_like(z, a1)
    c = a1
    a = -a1
    s = 1.0 + q * delh
    active = np.ones(z.shape, dtype=bool)

    with np.errstate(over='ignore', invalid='ignore'):
        for i in range(2, CF_MAX_ITERATIONS):
            a -= 2 * (i - 1)
            c = -a * c / i
            qnew = (q1 - b * q2) / a
            q1 = q2
            q2 = qnew
            q = q + c * qnew
            b = b + 2.0
            d = 1.0 / (b + a * d)
            delh = (b * d - 1.0) * delh
            dels = q * delh

            # Converged elements are frozen
            h = np.where(active, h + delh, h)
            s = np.where(active, s + dels, s)
            active &= np.abs(dels / s) >= CF_TOLERANCE
            if not active.any():
                break
        else:
            raise NumericalFailure('Bessel continued fraction did not converge')

    h = a1 * h
    with np.errstate(under='ignore'):
        k0 = np.sqrt(np.pi / (2.0 * z)) * np.exp(-z) / s
    k1 = k0 * (z + 0.5 - h) / z
    return k0, k1


def bessel_k0_k1(z: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
    """
    Evaluates K_0(z) and K_1(z) together.

    :param z: Positive argument, scalar or array.
    :return: Tuple (K_0, K_1) with the shape of z. Floats for scalar input.
    """
    scalar = np.ndim(z) == 0
    arg = np.atleast_1d(np.asarray(z, dtype=float))
    if not np.all(arg > 0):
        raise DomainError('Modified Bessel functions K_0, K_1 need a positive argument')

    k0 = np.empty_like(arg)
    k1 = np.empty_like(arg)
    small = arg <= SERIES_LIMIT
    if small.any():
        k0[small], k1[small] = _series(arg[small])
    if (~small).any():
        k0[~small], k1[~small] = _continued_fraction(arg[~small])

    if scalar:
        return float(k0[0]), float(k1[0])
    return k0.reshape(np.shape(z)), k1.reshape(np.shape(z))


def bessel_k0(z: ArrayLike) -> ArrayLike:
    """
    Modified Bessel function of the second kind of order zero.

    :param z: Positive argument, scalar or array.
    """
    return bessel_k0_k1(z)[0]


def bessel_k1(z: ArrayLike) -> ArrayLike:
    """
    Modified Bessel function of the second kind of order one.

    :param z: Positive argument, scalar or array.
    """
    return bessel_k0_k1(z)[1]
