"""
Subcommand groups for Ondula. Each group registers its subcommands on
the argument parser and handles them against the shared runner.
"""

from typing import TYPE_CHECKING

from .analysis import AnalysisCommands
from .checks import CheckCommands
from .sweeps import SweepCommands

if TYPE_CHECKING:
    from argparse import _SubParsersAction

    from utils.ondula import Ondula


def setup(subparsers: '_SubParsersAction', runner: 'Ondula'):
    """
    Setup function for the commands package.
    """
    CheckCommands(runner).register(subparsers)
    SweepCommands(runner).register(subparsers)
    AnalysisCommands(runner).register(subparsers)
