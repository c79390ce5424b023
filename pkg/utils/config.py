"""
Configuration parser.

This module parses the configuration file and environment variables and
provides a single object with the synthesized configuration values,
where the environment variables take precedence over the config file
and command line flags take precedence over both.

The file may be written in YAML or JSON; both are read with the YAML loader.
"""

from dataclasses import replace
from os import environ
from os.path import isfile
from typing import Any, Dict, Optional

from yaml import YAMLError, safe_load

from dataclass.config import Config, NumericalPlan, ProfileSpec, SweepSpec

from .exceptions import ConfigError

DEFAULT_CONFIG_FILE = 'config.yml'

# Read eagerly so that loggers created at import time pick them up
DEBUG_ENABLED = environ.get('ONDULA_DEBUG', 'false').lower() == 'true'
SENTRY_DSN = environ.get('ONDULA_SENTRY_DSN', None)
SENTRY_ENV = environ.get('ONDULA_SENTRY_ENV', None)


def read_config_file(path: str) -> Dict[str, Any]:
    """
    Reads a YAML or JSON configuration file into a dictionary.

    :param path: Path to the configuration file.
    :return: The parsed mapping, empty if the file is empty.
    """
    with open(path, encoding='UTF-8') as f:
        try:
            config_file = safe_load(f)
        except YAMLError as e:
            raise ConfigError(f'Error parsing {path}: {e}') from e

    if config_file is None:
        return {}
    if not isinstance(config_file, dict):
        raise ConfigError(f'{path} must contain a mapping at the top level')
    return config_file


def _pair(value: Any, cast, name: str):
    try:
        first, second = value
    except (TypeError, ValueError) as e:
        raise ConfigError(f'{name} must be a list of two values') from e
    return cast(first), cast(second)


def parse_config(config_file: Dict[str, Any]) -> Config:
    """
    Turns a parsed configuration mapping into a Config object.

    :param config_file: The mapping read from a YAML or JSON file.
    """
    try:
        profile_section = config_file.get('profile', {}) or {}
        profile = ProfileSpec(
            kind=profile_section.get('kind', 'sine'),
            amplitude=float(profile_section.get('amplitude', 1.0)),
            omega=float(profile_section.get('omega', 1.0)),
            phase=float(profile_section.get('phase', 0.0)),
            wavelength=float(profile_section.get('wavelength', 2.8)),
            smoothing=float(profile_section.get('smoothing', 0.05)),
            table=profile_section.get('table', None)
        )

        sweep_section = config_file.get('sweep', {}) or {}
        point = sweep_section.get('point', None)
        sweep = SweepSpec(
            vertical=[float(h) for h in sweep_section.get('vertical', [])],
            lateral=[float(phi) for phi in sweep_section.get('lateral', [])],
            hbar_over_a=float(sweep_section.get('hbar_over_a', 4.0)),
            point=None if point is None else float(point)
        )

        # Numerical plan, only the keys present override the defaults
        numerics = config_file.get('numerics', {}) or {}
        plan_kwargs: Dict[str, Any] = {}
        if 'nx_pair' in numerics:
            plan_kwargs['nx_pair'] = _pair(numerics['nx_pair'], int, 'nx_pair')
        if 'nx_verify' in numerics:
            plan_kwargs['nx_verify'] = _pair(numerics['nx_verify'], int, 'nx_verify')
        if 'epsilon_pair' in numerics:
            plan_kwargs['epsilon_pair'] = _pair(numerics['epsilon_pair'], float, 'epsilon_pair')
        for key, cast in (('n_q', int), ('q_max', float), ('a0x', float), ('n0x', int),
                          ('points_per_wavelength', int)):
            if key in numerics:
                plan_kwargs[key] = cast(numerics[key])
        if numerics.get('lx_override', None) is not None:
            plan_kwargs['lx_override'] = float(numerics['lx_override'])
        if 'verify' in numerics:
            plan_kwargs['verify'] = bool(numerics['verify'])
        plan = NumericalPlan(**plan_kwargs)

        geometry = config_file.get('geometry', {}) or {}
        output = config_file.get('output', {}) or {}
        return Config(
            profile=profile,
            sweep=sweep,
            plan=plan,
            rescale_by=geometry.get('rescale_by', 'normal'),
            radius=float(geometry.get('radius', 0.0)),
            csv_path=output.get('csv', 'sweep.csv'),
            fit_json_path=output.get('fit_json', 'fit.json'),
            plot_script_path=output.get('plot_script', 'plot.py'),
            workers=int(config_file.get('workers', 0)),
            debug_enabled=bool(config_file.get('debug', False))
        )
    except (TypeError, ValueError) as e:
        raise ConfigError(f'Invalid configuration value: {e}') from e


def load_config(path: Optional[str] = None) -> Config:
    """
    Loads the configuration from a file (if any) and the environment.

    :param path: Explicit config file. If None, config.yml in the working
        directory is used when it exists, otherwise all defaults apply.
    """
    config_file: Dict[str, Any] = {}
    if path is not None:
        if not isfile(path):
            raise ConfigError(f'Config file {path} does not exist')
        config_file = read_config_file(path)
    elif isfile(DEFAULT_CONFIG_FILE):
        config_file = read_config_file(DEFAULT_CONFIG_FILE)

    config = parse_config(config_file)

    # Override config from environment variables
    if 'ONDULA_WORKERS' in environ:
        try:
            config = replace(config, workers=int(environ['ONDULA_WORKERS']))
        except ValueError as e:
            raise ConfigError('ONDULA_WORKERS must be an integer') from e
    if DEBUG_ENABLED:
        config = replace(config, debug_enabled=True)

    return config


def override_plan(plan: NumericalPlan, **overrides: Any) -> NumericalPlan:
    """
    Returns a copy of the plan with the given non-None values replaced.
    Used to apply command line flags on top of the file configuration.
    """
    values = {key: value for key, value in overrides.items() if value is not None}
    if not values:
        return plan
    return replace(plan, **values)
