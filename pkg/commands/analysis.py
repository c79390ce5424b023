"""
AnalysisCommands: fits over sweep CSVs, regulator and continuum scans,
and plot scripts.
"""

from typing import TYPE_CHECKING, List

from dataclass.fit import FitResult
from numerics.alpha import build_momentum_quadrature
from numerics.extrapolate import continuum_scan, linearity_scan
from numerics.fit import (default_windows, fit_beta, fit_eta,
                          fit_frequency_scaling)
from numerics.lattice import build_schedule
from storage.summary import write_fit_summary
from storage.sweep_store import read_curve
from storage.tables import write_table
from utils.exceptions import FitError
from utils.logger import create_logger
from views.plot_script import FIGURE_KINDS, emit_plot_script

from .options import float_list, int_list

if TYPE_CHECKING:
    from argparse import Namespace, _SubParsersAction

    from utils.ondula import Ondula

DEFAULT_SCAN_EPSILONS = (
    0.003, 0.0045, 0.006, 0.008, 0.01, 0.015, 0.02, 0.025, 0.03, 0.04, 0.05
)
DEFAULT_SCAN_NX = (80, 100, 120, 140, 160, 180, 200)
DEFAULT_CONTINUUM_EPSILONS = (0.005, 0.01, 0.02, 0.04)


class AnalysisCommands:
    """
    Commands that analyse results or check the numerical plan.
    """
    def __init__(self, runner: 'Ondula'):
        """
        Constructor for AnalysisCommands.
        """
        self._runner = runner
        self._logger = create_logger(self.__class__.__name__)
        self._logger.debug('Loaded AnalysisCommands')

    def register(self, subparsers: '_SubParsersAction'):
        """
        Adds fit, linearity-scan, continuum-scan and plot to the parser.
        """
        fit = subparsers.add_parser('fit', help='fit eta or beta over sweep CSVs')
        fit.add_argument('--csv', nargs='+',
                         help='vertical sweep CSVs (default: output.csv in the config)')
        fit.add_argument('--kind', choices=('eta', 'beta'), default='eta')
        fit.add_argument('--window', type=float, nargs=2, metavar=('LO', 'HI'),
                         help='H/A window (default: standard windows for eta)')
        fit.add_argument('--curve', choices=('well', 'crest'), default='well',
                         help='curve shape for the standard windows')
        fit.add_argument('--weighted', action='store_true',
                         help='weight points by their spread')
        fit.add_argument('--json',
                         help='output JSON (default: output.fit_json in the config)')
        fit.set_defaults(handler=self.fit)

        linearity = subparsers.add_parser(
            'linearity-scan', help='tabulate the continuum intercept against eps'
        )
        linearity.add_argument('--epsilons', type=float_list,
                               default=list(DEFAULT_SCAN_EPSILONS))
        linearity.add_argument('--h-over-a', type=float,
                               help='scan the configured profile instead of the flat one')
        linearity.add_argument('--csv', default='linearity.csv')
        linearity.set_defaults(handler=self.linearity_scan)

        continuum = subparsers.add_parser(
            'continuum-scan', help='tabulate alpha against 1/Nx at fixed eps'
        )
        continuum.add_argument('--nx', type=int_list, default=list(DEFAULT_SCAN_NX))
        continuum.add_argument('--epsilons', type=float_list,
                               default=list(DEFAULT_CONTINUUM_EPSILONS))
        continuum.add_argument('--h-over-a', type=float,
                               help='scan the configured profile instead of the flat one')
        continuum.add_argument('--csv', default='continuum.csv')
        continuum.set_defaults(handler=self.continuum_scan)

        plot = subparsers.add_parser('plot', help='write a plot script for a results file')
        plot.add_argument('--csv', help='results file (default: output.csv in the config)')
        plot.add_argument('--kind', choices=FIGURE_KINDS, default='vertical')
        plot.add_argument('--out',
                          help='script path (default: output.plot_script in the config)')
        plot.set_defaults(handler=self.plot)

    def _fit_curve(self, path: str, args: 'Namespace') -> List[FitResult]:
        curve, skipped = read_curve(path)
        if skipped:
            self._logger.warning('Skipped %d error rows in %s', skipped, path)

        if args.window is not None:
            method = fit_beta if args.kind == 'beta' else fit_eta
            return [method(curve, tuple(args.window), args.weighted)]
        if args.kind == 'beta':
            raise FitError('Slope fits need an explicit --window')

        results = []
        for name, window in default_windows(curve, args.curve).items():
            try:
                result = fit_eta(curve, window, args.weighted)
            except FitError as e:
                self._logger.warning('Skipping %s window of %s: %s', name, path, e.message)
                continue
            result.metadata['window_name'] = name
            results.append(result)
        return results

    def fit(self, args: 'Namespace') -> int:
        """
        Fits every given curve. With several curves and one window, also fits
        the power of the corrugation frequency.
        """
        config = self._runner.config
        paths = args.csv or [config.csv_path]

        results = []
        for path in paths:
            for result in self._fit_curve(path, args):
                name = result.metadata.get('window_name', 'window')
                print(
                    f'{path}: {result.kind} {result.value:.4f} over H/A in '
                    f'[{result.window[0]:g}, {result.window[1]:g}] ({name}, '
                    f'{result.point_count} points, rms {result.residual_rms:.2e})'
                )
                results.append(result)
        if not results:
            raise FitError('No window held enough points to fit')

        if len(paths) > 1 and args.window is not None:
            pairs = [(r.metadata['omega_A'], abs(r.value)) for r in results]
            scaling = fit_frequency_scaling(pairs)
            print(f'{results[0].kind} ~ (omega A)^{scaling.value:.3f}')
            results.append(scaling)

        write_fit_summary(args.json or config.fit_json_path, results)
        return 0

    def linearity_scan(self, args: 'Namespace') -> int:
        """
        Writes the (eps, continuum intercept) table. A bent window is a
        warning, not a failure.
        """
        plan = self._runner.config.plan
        scan = linearity_scan(
            self._runner.scan_profile(args.h_over_a),
            build_schedule(plan.a0x, plan.n0x),
            plan.nx_pair,
            args.epsilons,
            build_momentum_quadrature(plan.n_q, plan.q_max),
            plan.epsilon_pair,
            self._runner.solve_pool,
            plan.lx_override
        )
        write_table(args.csv, ('epsilon', 'alpha_intercept'), scan.rows)
        for epsilon, intercept in scan.rows:
            print(f'{epsilon:<8g} {intercept:.7f}')
        return 0

    def continuum_scan(self, args: 'Namespace') -> int:
        """
        Writes the (eps, Nx, 1/Nx, alpha) table.
        """
        plan = self._runner.config.plan
        samples = continuum_scan(
            self._runner.scan_profile(args.h_over_a),
            build_schedule(plan.a0x, plan.n0x),
            args.nx,
            args.epsilons,
            build_momentum_quadrature(plan.n_q, plan.q_max),
            self._runner.solve_pool,
            plan.lx_override
        )
        rows = [(s.epsilon, s.nx, s.inv_nx, s.alpha) for s in samples]
        write_table(args.csv, ('epsilon', 'nx', 'inv_nx', 'alpha'), rows)
        return 0

    def plot(self, args: 'Namespace') -> int:
        """
        Writes a plot script for a sweep CSV or scan table.
        """
        config = self._runner.config
        emit_plot_script(
            args.csv or config.csv_path,
            args.kind,
            args.out or config.plot_script_path
        )
        return 0
