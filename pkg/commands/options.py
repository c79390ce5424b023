"""
Command line flags shared by every subcommand, and their application on
top of the file configuration.
"""

from argparse import ArgumentParser, ArgumentTypeError, Namespace
from dataclasses import replace
from typing import List, Optional

from dataclass.config import RESCALE_MODES, Config
from utils.config import override_plan


def float_list(value: str) -> List[float]:
    """
    Parses a comma separated list of floats.
    """
    try:
        return [float(v) for v in value.split(',') if v.strip()]
    except ValueError as e:
        raise ArgumentTypeError(f'expected comma separated numbers, got {value!r}') from e


def int_list(value: str) -> List[int]:
    """
    Parses a comma separated list of ints.
    """
    try:
        return [int(v) for v in value.split(',') if v.strip()]
    except ValueError as e:
        raise ArgumentTypeError(f'expected comma separated integers, got {value!r}') from e


def add_global_arguments(parser: ArgumentParser):
    """
    Adds the flags that override the configuration file.
    """
    parser.add_argument('--config', metavar='PATH', help='YAML or JSON config file')
    parser.add_argument('--print-config', action='store_true',
                        help='print the resolved configuration and exit')
    parser.add_argument('--debug', action='store_true', help='enable debug logging')
    parser.add_argument('--workers', type=int, help='worker pool size')

    numerics = parser.add_argument_group('numerics')
    numerics.add_argument('--nx-pair', type=int, nargs=2, metavar=('N1', 'N2'))
    numerics.add_argument('--nx-verify', type=int, nargs=2, metavar=('N1', 'N2'))
    numerics.add_argument('--epsilon-pair', type=float, nargs=2, metavar=('E1', 'E2'))
    numerics.add_argument('--n-q', type=int, help='momentum nodes')
    numerics.add_argument('--q-max', type=float, help='momentum cutoff')
    numerics.add_argument('--a0x', type=float, help='reference lattice spacing')
    numerics.add_argument('--n0x', type=int, help='reference site count')
    numerics.add_argument('--lx', type=float, dest='lx_override',
                          help='fixed lattice half-length instead of the schedule')
    numerics.add_argument('--no-verify', action='store_true',
                          help='skip the verification pair')
    numerics.add_argument('--points-per-wavelength', type=int, metavar='N',
                          help='refine site counts to N per corrugation wavelength, 0 to disable')
    numerics.add_argument('--rescale-by', choices=RESCALE_MODES)
    numerics.add_argument('--radius', type=float, help='sphere radius, report only')


def apply_arguments(config: Config, args: Namespace) -> Config:
    """
    Returns the config with command line flags applied. Flags win over
    environment variables and the config file.
    """
    verify: Optional[bool] = False if args.no_verify else None
    plan = override_plan(
        config.plan,
        nx_pair=None if args.nx_pair is None else tuple(args.nx_pair),
        nx_verify=None if args.nx_verify is None else tuple(args.nx_verify),
        epsilon_pair=None if args.epsilon_pair is None else tuple(args.epsilon_pair),
        n_q=args.n_q,
        q_max=args.q_max,
        a0x=args.a0x,
        n0x=args.n0x,
        lx_override=args.lx_override,
        verify=verify,
        points_per_wavelength=args.points_per_wavelength
    )

    changes = {'plan': plan}
    if args.workers is not None:
        changes['workers'] = args.workers
    if args.debug:
        changes['debug_enabled'] = True
    if args.rescale_by is not None:
        changes['rescale_by'] = args.rescale_by
    if args.radius is not None:
        changes['radius'] = args.radius
    return replace(config, **changes)
