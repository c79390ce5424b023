"""
Runner class for Ondula. Owns the configuration, the worker pools and the
planar baseline cache, and evaluates sweep points.
"""

from concurrent.futures import ThreadPoolExecutor
from functools import partial
from math import isfinite
from os import cpu_count
from threading import Lock
from typing import TYPE_CHECKING, Callable, Dict, List, Optional, Sequence, Tuple

from dataclass.record import SweepRecord
from numerics import profile as profiles
from numerics.energy import (geometry_from_distance, geometry_from_mean_height,
                             normalized_ratio, reference_alpha, rescaled_geometry)
from numerics.extrapolate import estimate_alpha, resolved_plan

from .exceptions import OndulaError
from .logger import create_logger
from .time import Stopwatch

if TYPE_CHECKING:
    from dataclass.config import Config, NumericalPlan
    from dataclass.energy import GeometryConfig
    from dataclass.estimate import AlphaEstimate
    from dataclass.profile import HeightProfile
    from storage.sweep_store import SweepStore


class Ondula:
    """
    Runner class for Ondula.
    """
    def __init__(self):
        self._config: Optional['Config'] = None

        # Momentum solves run on one pool, sweep points on another, so a
        # point never waits on the pool it runs in
        self._solve_pool: Optional[ThreadPoolExecutor] = None
        self._point_pool: Optional[ThreadPoolExecutor] = None

        # Planar baselines per numerical plan
        self._planar: Dict['NumericalPlan', 'AlphaEstimate'] = {}
        self._planar_lock = Lock()

        self._logger = create_logger(self.__class__.__name__)

    def __enter__(self) -> 'Ondula':
        return self

    def __exit__(self, *_):
        self.close()

    @property
    def config(self) -> 'Config':
        """
        Gets the runner's config.
        """
        if self._config is None:
            raise RuntimeError('Config has not been initialized')
        return self._config

    @property
    def workers(self) -> int:
        """
        Gets the worker count, falling back to the available CPUs.
        """
        if self.config.workers > 0:
            return self.config.workers
        return cpu_count() or 1

    @property
    def solve_pool(self) -> ThreadPoolExecutor:
        """
        Gets the pool for momentum solves, creating it on first use.
        """
        if self._solve_pool is None:
            self._solve_pool = ThreadPoolExecutor(
                max_workers=self.workers, thread_name_prefix='solve'
            )
        return self._solve_pool

    @property
    def point_pool(self) -> ThreadPoolExecutor:
        """
        Gets the pool for sweep points, creating it on first use.
        """
        if self._point_pool is None:
            self._point_pool = ThreadPoolExecutor(
                max_workers=self.workers, thread_name_prefix='point'
            )
        return self._point_pool

    def init_config(self, config: 'Config'):
        """
        Initialize the runner with a config.
        Drops cached baselines computed under a previous config.
        """
        self._config = config
        self._planar.clear()
        self._logger.debug('Using %d workers', self.workers)

    def close(self):
        """
        Shuts the worker pools down.
        """
        for pool in (self._point_pool, self._solve_pool):
            if pool is not None:
                pool.shutdown(wait=True)
        self._point_pool = None
        self._solve_pool = None

    def build_profile(self, phase: Optional[float] = None) -> 'HeightProfile':
        """
        Builds the configured profile in physical units (lengths in A).

        :param phase: Lateral phase overriding the configured one.
        """
        spec = self.config.profile
        phi = spec.phase if phase is None else phase
        if spec.kind == 'planar':
            return profiles.planar()
        if spec.kind == 'sine':
            return profiles.sine(spec.amplitude, spec.omega, phi)
        if spec.kind == 'sawtooth':
            wavelength = spec.wavelength * spec.amplitude
            return profiles.sawtooth(
                spec.amplitude, wavelength, spec.smoothing * wavelength, phi
            )
        assert spec.table is not None
        return profiles.with_phase(profiles.load_tabulated(spec.table), phi)

    def planar_baseline(self, plan: Optional['NumericalPlan'] = None) -> 'AlphaEstimate':
        """
        Gets the planar alpha_0 for a plan, computing it once.
        The rescaled planar geometry is the same at every distance.
        """
        plan = plan or self.config.plan
        with self._planar_lock:
            if plan not in self._planar:
                self._logger.info('Computing planar baseline...')
                self._planar[plan] = estimate_alpha(
                    profiles.planar(), plan, self.solve_pool
                )
            return self._planar[plan]

    def scan_profile(self, h_over_a: Optional[float] = None) -> 'HeightProfile':
        """
        Returns the rescaled profile used by the diagnostic scans: the flat
        surface, or the configured profile at distance H/A.
        """
        if h_over_a is None:
            return profiles.planar()
        geometry = geometry_from_distance(
            self.build_profile(),
            h_over_a * self.config.profile.amplitude,
            self.config.rescale_by
        )
        return rescaled_geometry(geometry).profile

    def estimate(
        self,
        geometry: 'GeometryConfig',
        plan: Optional['NumericalPlan'] = None
    ) -> 'AlphaEstimate':
        """
        Runs the limit protocol for a physical geometry, on site counts
        refined to resolve the corrugation. The estimate carries the plan
        it was computed with.
        """
        rescaled = rescaled_geometry(geometry)
        plan = resolved_plan(rescaled.profile, plan or self.config.plan)
        return estimate_alpha(rescaled.profile, plan, self.solve_pool)

    def _compare(
        self,
        geometry: 'GeometryConfig',
        plan: 'NumericalPlan',
        by_mean_height: bool = False
    ) -> Tuple[float, float, float, float]:
        """
        Returns alpha_0 of the geometry, the planar alpha_0 on the same
        plan, their ratio and the spread of that ratio against the
        verification pair.

        alpha_0 is in units of H, so the ratio compares against the plane at
        the same normal distance. With by_mean_height it is in units of Hbar
        and the ratio compares against the plane at the sphere's mean height.
        """
        factor = rescaled_geometry(geometry).alpha_factor
        if by_mean_height:
            factor = reference_alpha(factor, geometry.distance, geometry.mean_height)

        corr = self.estimate(geometry, plan)
        planar = self.planar_baseline(corr.plan)
        alpha0_corr = corr.alpha0 * factor
        ratio = normalized_ratio(alpha0_corr, planar.alpha0, corr.plan, planar.plan)

        spread = 0.0
        if corr.verify_alpha0 is not None and planar.verify_alpha0 is not None:
            spread = abs(ratio - corr.verify_alpha0 * factor / planar.verify_alpha0)
        return alpha0_corr, planar.alpha0, ratio, spread

    def _evaluate(self, geometry_factory: Callable[[], 'GeometryConfig'], phi: float,
                  h_over_a: float, hbar_over_a: float,
                  by_mean_height: bool = False) -> SweepRecord:
        """
        Evaluates one sweep point, turning failures into error records.
        """
        spec = self.config.profile
        plan = self.config.plan
        record = partial(SweepRecord, profile=spec.kind, omega_a=spec.omega_a, phi=phi)

        with Stopwatch() as watch:
            try:
                geometry = geometry_factory()
                h_over_a = geometry.distance / spec.amplitude
                hbar_over_a = geometry.mean_height / spec.amplitude
                alpha0_corr, alpha0_planar, ratio, spread = self._compare(
                    geometry, plan, by_mean_height
                )
            except OndulaError as e:
                self._logger.error('Point H/A=%g, phi=%g failed: %s', h_over_a, phi, e.message)
                return record(h_over_a=h_over_a, hbar_over_a=hbar_over_a,
                              seconds=watch.elapsed, error=e.message)

        self._logger.info('H/A=%.4g phi=%.4g: ratio %.6f (%s)', h_over_a, phi, ratio, watch)
        return record(
            h_over_a=h_over_a,
            hbar_over_a=hbar_over_a,
            alpha0_corr=alpha0_corr,
            alpha0_planar=alpha0_planar,
            ratio=ratio,
            spread=spread,
            seconds=watch.elapsed
        )

    def vertical_point(self, h_over_a: float, phase: Optional[float] = None) -> SweepRecord:
        """
        Evaluates the sphere at distance H = h_over_a * A above the surface.
        """
        profile = self.build_profile(phase)
        amplitude = self.config.profile.amplitude
        rescale_by = self.config.rescale_by
        return self._evaluate(
            lambda: geometry_from_distance(profile, h_over_a * amplitude, rescale_by),
            profile.phase, h_over_a, float('nan')
        )

    def lateral_point(self, phase: float, hbar_over_a: Optional[float] = None) -> SweepRecord:
        """
        Evaluates the sphere at mean height Hbar above the profile with the
        surface moved to the given phase. The ratio compares against the
        plane at Hbar, so every phase shares one reference.
        """
        if hbar_over_a is None:
            hbar_over_a = self.config.sweep.hbar_over_a
        profile = self.build_profile(phase)
        amplitude = self.config.profile.amplitude
        rescale_by = self.config.rescale_by
        return self._evaluate(
            lambda: geometry_from_mean_height(profile, hbar_over_a * amplitude, rescale_by),
            phase, float('nan'), hbar_over_a, by_mean_height=True
        )

    def run_points(
        self,
        evaluate: Callable[[float], SweepRecord],
        values: Sequence[float],
        store: Optional['SweepStore'] = None
    ) -> List[SweepRecord]:
        """
        Evaluates sweep points on the point pool and writes them in sweep order.
        """
        with Stopwatch() as watch:
            # Computed up front so that no point waits for it
            self.planar_baseline()

            futures = [self.point_pool.submit(evaluate, value) for value in values]
            records = []
            for future in futures:
                record = future.result()
                records.append(record)
                if store is not None:
                    store.write(record)

        failed = sum(1 for r in records if r.failed)
        self._logger.info(
            'Sweep of %d points finished in %s (%d failed)',
            len(records), watch, failed
        )
        return records

    def vertical_sweep(
        self,
        values: Sequence[float],
        store: Optional['SweepStore'] = None,
        phase: Optional[float] = None
    ) -> List[SweepRecord]:
        """
        Sweeps H/A at the given phase, or the configured one.
        """
        return self.run_points(partial(self.vertical_point, phase=phase), values, store)

    def lateral_sweep(
        self,
        phases: Sequence[float],
        store: Optional['SweepStore'] = None,
        hbar_over_a: Optional[float] = None
    ) -> List[SweepRecord]:
        """
        Sweeps the phase at the given Hbar/A, or the configured one.
        """
        return self.run_points(partial(self.lateral_point, hbar_over_a=hbar_over_a), phases, store)


def records_ok(records: Sequence[SweepRecord]) -> bool:
    """
    Returns whether every record succeeded with a finite ratio.
    """
    return all(not r.failed and isfinite(r.ratio) for r in records)
