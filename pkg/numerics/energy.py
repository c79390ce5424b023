"""
Geometry conventions and the Casimir-Polder energy E = -(hbar c / 2) (r / H^2) alpha_0.
"""

from typing import Optional

from dataclass.config import RESCALE_MODES, NumericalPlan
from dataclass.energy import EnergyResult, GeometryConfig, RescaledGeometry
from dataclass.profile import HeightProfile
from utils.constants import RADIUS_WARN_RATIO
from utils.exceptions import ConfigError, DomainError, GeometryError, ProtocolError
from utils.logger import create_logger

from .profile import height, rescale, shift_vertical

LOGGER = create_logger('energy')


def _check_mode(rescale_by: str):
    if rescale_by not in RESCALE_MODES:
        raise ConfigError(f'rescale_by must be one of {RESCALE_MODES}')


def geometry_from_mean_height(
    profile: HeightProfile,
    mean_height: float,
    rescale_by: str = 'normal'
) -> GeometryConfig:
    """
    Places the sphere at height Hbar above the profile's zero line.
    """
    _check_mode(rescale_by)
    distance = mean_height - float(height(profile, 0.0))
    if distance <= 0:
        raise GeometryError(f'Sphere at Hbar={mean_height:g} touches the surface')
    return GeometryConfig(
        profile=profile,
        mean_height=mean_height,
        distance=distance,
        rescale_by=rescale_by
    )


def geometry_from_distance(
    profile: HeightProfile,
    distance: float,
    rescale_by: str = 'normal'
) -> GeometryConfig:
    """
    Places the sphere at distance H above the surface point beneath it.
    """
    _check_mode(rescale_by)
    if distance <= 0:
        raise GeometryError(f'Distance H={distance:g} must be positive')
    return GeometryConfig(
        profile=profile,
        mean_height=distance + float(height(profile, 0.0)),
        distance=distance,
        rescale_by=rescale_by
    )


def rescaled_geometry(config: GeometryConfig) -> RescaledGeometry:
    """
    Converts a physical geometry into dimensionless units with the sphere at (0, 1).

    'normal' moves the surface point beneath the sphere to zero and divides
    by H. 'mean' divides by Hbar and leaves the profile's zero line in place,
    which needs Hbar > 0.
    """
    if config.distance <= 0:
        raise GeometryError('The sphere touches the surface')

    if config.rescale_by == 'normal':
        shifted = shift_vertical(config.profile, -float(height(config.profile, 0.0)))
        return RescaledGeometry(
            profile=rescale(shifted, config.distance),
            scale=config.distance,
            alpha_factor=1.0
        )

    if config.rescale_by == 'mean':
        if config.mean_height <= 0:
            raise GeometryError(
                f'Rescaling by Hbar={config.mean_height:g} needs the sphere '
                'above the profile zero line'
            )
        return RescaledGeometry(
            profile=rescale(config.profile, config.mean_height),
            scale=config.mean_height,
            alpha_factor=(config.distance / config.mean_height) ** 2
        )

    raise ConfigError(f'rescale_by must be one of {RESCALE_MODES}')


def casimir_polder_energy(
    alpha0: float,
    distance: float,
    radius: float = 0.0,
    alpha0_planar: Optional[float] = None
) -> EnergyResult:
    """
    Assembles the energy in units of hbar c r / H^2.

    :param alpha0: Geometry factor in units of H.
    :param distance: Distance H along the normal.
    :param radius: Sphere radius; 0 keeps the result dimensionless.
    :param alpha0_planar: Optional planar baseline for the ratio.
    """
    if alpha0 <= 0:
        raise DomainError(f'alpha_0 must be positive, got {alpha0:g}')
    if distance <= 0:
        raise DomainError(f'H must be positive, got {distance:g}')
    if radius < 0:
        raise DomainError(f'The sphere radius must not be negative, got {radius:g}')
    if radius / distance > RADIUS_WARN_RATIO:
        LOGGER.warning(
            'r/H = %.3g is not small, finite-size corrections are ignored',
            radius / distance
        )

    ratio = None
    if alpha0_planar is not None:
        ratio = normalized_ratio(alpha0, alpha0_planar)
    return EnergyResult(
        alpha0=alpha0,
        distance=distance,
        radius=radius,
        e_scaled=-0.5 * alpha0,
        ratio=ratio
    )


def normalized_ratio(
    alpha0_corr: float,
    alpha0_planar: float,
    corr_plan: Optional[NumericalPlan] = None,
    planar_plan: Optional[NumericalPlan] = None
) -> float:
    """
    Returns E / E_planar = alpha0_corr / alpha0_planar against the numerical
    planar baseline.

    :raises ProtocolError: if both plans are given and differ.
    """
    if alpha0_corr <= 0 or alpha0_planar <= 0:
        raise DomainError('Both geometry factors must be positive')
    if corr_plan is not None and planar_plan is not None and corr_plan != planar_plan:
        raise ProtocolError('The planar baseline was computed with a different numerical plan')
    return alpha0_corr / alpha0_planar


def reference_alpha(alpha0: float, distance: float, reference: float) -> float:
    """
    Re-expresses alpha_0 in units of another reference distance, so that
    alpha_0 / alpha_0_planar compares against the plane at that distance.
    E is unchanged: alpha_0 / H^2 = alpha_ref / reference^2.
    """
    if distance <= 0 or reference <= 0:
        raise DomainError('Both distances must be positive')
    return alpha0 * (reference / distance) ** 2
