"""
Renders matplotlib scripts that plot sweep and scan results.
Each figure kind has its own Jinja2 template under views/templates.
"""

from os.path import basename, dirname, join, splitext
from typing import Any, Dict, List, Optional

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from storage.sweep_store import read_records
from storage.tables import read_table
from utils.exceptions import ConfigError
from utils.logger import create_logger

FIGURE_KINDS = ('vertical', 'lateral', 'linearity', 'continuum')
TEMPLATE_DIR = join(dirname(__file__), 'templates')

LOGGER = create_logger('plot_script')

_ENV = Environment(
    loader=FileSystemLoader(TEMPLATE_DIR),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True
)


def _fmt(values: List[float]) -> str:
    return ', '.join(repr(float(v)) for v in values)


def _docstring_safe(text: Optional[str]) -> str:
    return (text or '').replace('\\', '/').replace('"', "'")


def _sweep_context(csv_path: str, kind: str) -> Dict[str, Any]:
    records = read_records(csv_path)
    good = [r for r in records if not r.failed]
    skipped = [
        f'H/A={r.h_over_a!r} phi={r.phi!r}: {_docstring_safe(r.error)}'
        for r in records if r.failed
    ]
    if skipped:
        LOGGER.warning('Skipping %d error rows of %s', len(skipped), csv_path)

    if kind == 'vertical':
        good.sort(key=lambda r: r.h_over_a)
        xs = [r.h_over_a for r in good]
    else:
        good.sort(key=lambda r: r.phi)
        xs = [r.phi for r in good]
    return {
        'xs': _fmt(xs),
        'ratios': _fmt([r.ratio for r in good]),
        'spreads': _fmt([r.spread for r in good]),
        'skipped': skipped,
        'label': good[0].profile if good else '',
    }


def _linearity_context(csv_path: str) -> Dict[str, Any]:
    header, rows = read_table(csv_path)
    if header[:2] != ['epsilon', 'alpha_intercept']:
        raise ConfigError(f'{csv_path} is not a linearity scan')
    return {
        'xs': _fmt([row[0] for row in rows]),
        'ys': _fmt([row[1] for row in rows]),
        'skipped': [],
    }


def _continuum_context(csv_path: str) -> Dict[str, Any]:
    header, rows = read_table(csv_path)
    if header[:4] != ['epsilon', 'nx', 'inv_nx', 'alpha']:
        raise ConfigError(f'{csv_path} is not a continuum scan')

    series: Dict[float, List[List[float]]] = {}
    for epsilon, _, inv_nx, alpha in rows:
        series.setdefault(epsilon, []).append([inv_nx, alpha])
    return {
        'series': [
            {'epsilon': repr(eps), 'xs': _fmt([p[0] for p in points]),
             'ys': _fmt([p[1] for p in points])}
            for eps, points in sorted(series.items())
        ],
        'skipped': [],
    }


def render_plot_script(csv_path: str, kind: str) -> str:
    """
    Returns the plot script for a results file.

    :param csv_path: Sweep CSV or scan table.
    :param kind: One of vertical, lateral, linearity, continuum.
    """
    if kind not in FIGURE_KINDS:
        raise ConfigError(f'Unknown figure kind {kind!r}, expected one of {FIGURE_KINDS}')

    if kind in ('vertical', 'lateral'):
        context = _sweep_context(csv_path, kind)
    elif kind == 'linearity':
        context = _linearity_context(csv_path)
    else:
        context = _continuum_context(csv_path)

    context['source'] = basename(csv_path)
    context['image'] = splitext(basename(csv_path))[0] + '.pdf'
    return _ENV.get_template(f'{kind}.py.j2').render(**context)


def emit_plot_script(csv_path: str, kind: str, output_path: str) -> str:
    """
    Writes the plot script for a results file and returns its path.
    """
    script = render_plot_script(csv_path, kind)
    with open(output_path, 'w', encoding='UTF-8') as f:
        f.write(script)
    LOGGER.info('Wrote %s plot script to %s', kind, output_path)
    return output_path
