"""
JSON summaries of fit results.
"""

import json
from typing import Sequence

from dataclass.fit import FitResult


def write_fit_summary(path: str, results: Sequence[FitResult], **metadata):
    """
    Writes fit results as a JSON list, one object per fit.
    Extra keyword arguments are echoed into every object's metadata.
    """
    payload = []
    for result in results:
        payload.append({
            'kind': result.kind,
            'value': result.value,
            'window': list(result.window),
            'residual_rms': result.residual_rms,
            'n_points': result.point_count,
            'metadata': {**result.metadata, **metadata},
        })

    with open(path, 'w', encoding='UTF-8') as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write('\n')
