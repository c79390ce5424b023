"""
CheckCommands: the planar benchmark and single-point evaluations.
"""

from typing import TYPE_CHECKING, Optional

from numerics.energy import casimir_polder_energy, geometry_from_distance, rescaled_geometry
from numerics.kernel import assemble
from numerics.lattice import build_lattice, build_schedule
from storage.dump import write_kernel_dump
from utils.constants import ALPHA_PLANAR, PLANAR_CHECK_TOLERANCE
from utils.exceptions import AcceptanceFailure, ConfigError, NumericalFailure
from utils.logger import create_logger

if TYPE_CHECKING:
    from argparse import Namespace, _SubParsersAction

    from utils.ondula import Ondula


class CheckCommands:
    """
    Commands that evaluate one geometry: the planar check against
    1/(4 pi) and a single sweep point.
    """
    def __init__(self, runner: 'Ondula'):
        """
        Constructor for CheckCommands.
        """
        self._runner = runner
        self._logger = create_logger(self.__class__.__name__)
        self._logger.debug('Loaded CheckCommands')

    def register(self, subparsers: '_SubParsersAction'):
        """
        Adds planar-check and alpha to the parser.
        """
        check = subparsers.add_parser(
            'planar-check', help='run the full protocol on the flat surface'
        )
        check.set_defaults(handler=self.planar_check)

        alpha = subparsers.add_parser('alpha', help='evaluate a single point')
        alpha.add_argument('--h-over-a', type=float, help='distance H/A (default: sweep.point)')
        alpha.add_argument('--phi', type=float, help='lateral phase in radians')
        alpha.add_argument('--dump-kernel', metavar='PATH',
                           help='write the kernel system of the first sample to PATH')
        alpha.add_argument('--dump-q', type=float, default=1.0,
                           help='momentum of the dumped kernel (default: 1)')
        alpha.set_defaults(handler=self.alpha)

    def planar_check(self, _: 'Namespace') -> int:
        """
        Runs the flat surface through both lattice pairs and compares
        alpha_0 to 1/(4 pi).
        """
        plan = self._runner.config.plan
        estimate = self._runner.planar_baseline(plan)

        results = [(plan.nx_pair, estimate.alpha0)]
        if estimate.verify_alpha0 is not None:
            results.append((plan.nx_verify, estimate.verify_alpha0))

        failed = []
        print(f'Analytic alpha: {ALPHA_PLANAR:.7f}')
        for nx_pair, alpha0 in results:
            deviation = abs(alpha0 - ALPHA_PLANAR) / ALPHA_PLANAR
            verdict = 'pass' if deviation < PLANAR_CHECK_TOLERANCE else 'FAIL'
            print(
                f'Nx={nx_pair[0]},{nx_pair[1]} eps={plan.epsilon_pair[0]:g},'
                f'{plan.epsilon_pair[1]:g}: alpha_0 = {alpha0:.7f} '
                f'deviation {100 * deviation:.3f}% [{verdict}]'
            )
            if verdict != 'pass':
                failed.append(nx_pair)

        if failed:
            raise AcceptanceFailure(
                f'Planar alpha_0 is off by more than {100 * PLANAR_CHECK_TOLERANCE:g}% '
                f'for Nx pairs {failed}'
            )
        return 0

    def _dump(self, path: str, h_over_a: float, phi: Optional[float], q: float):
        config = self._runner.config
        profile = self._runner.build_profile(phi)
        geometry = geometry_from_distance(
            profile, h_over_a * config.profile.amplitude, config.rescale_by
        )
        rescaled = rescaled_geometry(geometry)
        plan = config.plan
        lattice = build_lattice(
            build_schedule(plan.a0x, plan.n0x), plan.nx_pair[0], plan.lx_override
        )
        system = assemble(rescaled.profile, lattice, q, plan.epsilon_pair[0])
        write_kernel_dump(path, system)
        self._logger.info('Wrote kernel at q=%g, Nx=%d to %s', q, lattice.nx, path)

    def alpha(self, args: 'Namespace') -> int:
        """
        Evaluates the configured profile at one distance.
        """
        config = self._runner.config
        h_over_a = args.h_over_a if args.h_over_a is not None else config.sweep.point
        if h_over_a is None:
            raise ConfigError('No point given, pass --h-over-a or set sweep.point')

        if args.dump_kernel is not None:
            self._dump(args.dump_kernel, h_over_a, args.phi, args.dump_q)

        record = self._runner.vertical_point(h_over_a, args.phi)
        if record.failed:
            assert record.error is not None
            raise NumericalFailure(record.error)

        energy = casimir_polder_energy(
            record.alpha0_corr, h_over_a * config.profile.amplitude, config.radius
        )
        print(f'profile      {record.profile} (omega A = {record.omega_a:g}, phi = {record.phi:g})')
        print(f'H/A          {record.h_over_a:g} (Hbar/A = {record.hbar_over_a:g})')
        print(f'alpha_0      {record.alpha0_corr:.7f}')
        print(f'alpha_0 flat {record.alpha0_planar:.7f}')
        print(f'E/E_planar   {record.ratio:.6f} +- {record.spread:.1e}')
        print(f'E            {energy.energy_label}')
        return 0

