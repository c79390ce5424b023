"""
Main entry point.
"""

import json
import sys
from argparse import ArgumentParser
from typing import List, Optional

from commands import setup
from commands.options import add_global_arguments, apply_arguments
from utils.config import SENTRY_DSN, SENTRY_ENV, load_config
from utils.constants import RELEASE
from utils.exceptions import OndulaError
from utils.logger import create_logger, enable_debug
from utils.ondula import Ondula


def build_parser(runner: Ondula) -> ArgumentParser:
    """
    Builds the argument parser with every subcommand registered.
    """
    parser = ArgumentParser(
        prog='ondula',
        allow_abbrev=False,
        description='Casimir-Polder potentials above uniaxially corrugated surfaces'
    )
    add_global_arguments(parser)
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    setup(subparsers, runner)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parses arguments, resolves the configuration and runs one subcommand.

    :return: The process exit code.
    """
    logger = create_logger('main')
    runner = Ondula()
    parser = build_parser(runner)
    args = parser.parse_args(argv)

    try:
        config = apply_arguments(load_config(args.config), args)
    except OndulaError as e:
        logger.error('%s', e.message)
        return e.exit_code

    if args.print_config:
        print(json.dumps(config.as_dict(), indent=2, sort_keys=True))
        return 0

    # Print parsed config
    if config.debug_enabled:
        enable_debug()
        logger.debug('Parsed configuration:')
        logger.debug('  Profile: %s', config.profile)
        logger.debug('  Numerical plan: %s', config.plan)
        logger.debug('  Rescale by: %s', config.rescale_by)
        logger.debug('  Workers: %s', config.workers or 'all CPUs')
        if SENTRY_DSN is not None and SENTRY_ENV is not None:
            logger.debug('  Sentry DSN: %s...', SENTRY_DSN[:10])
            logger.debug('  Sentry environment: %s', SENTRY_ENV)
        else:
            logger.debug('  Sentry integration disabled')

    if args.command is None:
        parser.print_help()
        return 2

    runner.init_config(config)
    logger.info('Ondula release %s running %s', RELEASE, args.command)
    try:
        return args.handler(args)
    except OndulaError as e:
        logger.error('%s', e.message)
        return e.exit_code
    finally:
        runner.close()


if __name__ == '__main__':
    sys.exit(main())
