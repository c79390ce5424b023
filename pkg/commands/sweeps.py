"""
SweepCommands: vertical and lateral sweeps written to CSV.
"""

from typing import TYPE_CHECKING, List

import numpy as np

from storage.sweep_store import SweepStore
from utils.exceptions import ConfigError, NumericalFailure
from utils.logger import create_logger
from utils.ondula import records_ok
from views.plot_script import emit_plot_script

from .options import float_list

if TYPE_CHECKING:
    from argparse import Namespace, _SubParsersAction

    from dataclass.record import SweepRecord
    from utils.ondula import Ondula


class SweepCommands:
    """
    Commands that sweep the sphere position and write one CSV row per point.
    """
    def __init__(self, runner: 'Ondula'):
        """
        Constructor for SweepCommands.
        """
        self._runner = runner
        self._logger = create_logger(self.__class__.__name__)
        self._logger.debug('Loaded SweepCommands')

    def register(self, subparsers: '_SubParsersAction'):
        """
        Adds sweep and lateral to the parser.
        """
        sweep = subparsers.add_parser('sweep', help='sweep the distance H/A')
        sweep.add_argument('--values', type=float_list, help='comma separated H/A values')
        sweep.add_argument('--range', type=float, nargs=3, metavar=('LO', 'HI', 'N'),
                           help='N log-spaced H/A values from LO to HI')
        sweep.add_argument('--phi', type=float, help='lateral phase in radians')
        sweep.add_argument('--csv', help='output CSV (default: output.csv in the config)')
        sweep.add_argument('--plot', action='store_true', help='also write a plot script')
        sweep.set_defaults(handler=self.sweep)

        lateral = subparsers.add_parser('lateral', help='sweep the lateral phase')
        lateral.add_argument('--values', type=float_list, help='comma separated phases')
        lateral.add_argument('--points', type=int,
                             help='N evenly spaced phases over [-pi, pi]')
        lateral.add_argument('--hbar-over-a', type=float, help='mean height Hbar/A')
        lateral.add_argument('--csv', help='output CSV (default: output.csv in the config)')
        lateral.add_argument('--plot', action='store_true', help='also write a plot script')
        lateral.set_defaults(handler=self.lateral)

    def _vertical_values(self, args: 'Namespace') -> List[float]:
        if args.values:
            return args.values
        if args.range is not None:
            lo, hi, count = args.range
            if lo <= 0 or hi <= lo or count < 2:
                raise ConfigError('--range needs 0 < LO < HI and N >= 2')
            return [float(v) for v in np.geomspace(lo, hi, int(count))]
        return list(self._runner.config.sweep.vertical)

    def _lateral_values(self, args: 'Namespace') -> List[float]:
        if args.values:
            return args.values
        if args.points is not None:
            if args.points < 2:
                raise ConfigError('--points must be at least 2')
            return [float(v) for v in np.linspace(-np.pi, np.pi, args.points)]
        return list(self._runner.config.sweep.lateral)

    def _finish(self, records: List['SweepRecord'], csv_path: str, kind: str, plot: bool) -> int:
        if plot:
            emit_plot_script(csv_path, kind, self._runner.config.plot_script_path)
        if not records_ok(records):
            raise NumericalFailure(
                f'{sum(1 for r in records if r.failed)} of {len(records)} points failed, '
                f'see the error column of {csv_path}'
            )
        return 0

    def sweep(self, args: 'Namespace') -> int:
        """
        Sweeps H/A at a fixed phase.
        """
        values = self._vertical_values(args)
        if not values:
            raise ConfigError('The vertical sweep is empty')
        csv_path = args.csv or self._runner.config.csv_path

        with SweepStore(csv_path) as store:
            records = self._runner.vertical_sweep(values, store, phase=args.phi)
        return self._finish(records, csv_path, 'vertical', args.plot)

    def lateral(self, args: 'Namespace') -> int:
        """
        Sweeps the phase at a fixed mean height.
        """
        phases = self._lateral_values(args)
        if not phases:
            raise ConfigError('The lateral sweep is empty')
        hbar_over_a = args.hbar_over_a or self._runner.config.sweep.hbar_over_a
        csv_path = args.csv or self._runner.config.csv_path

        with SweepStore(csv_path) as store:
            records = self._runner.lateral_sweep(phases, store, hbar_over_a=hbar_over_a)
        return self._finish(records, csv_path, 'lateral', args.plot)
