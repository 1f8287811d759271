"""Weight hierarchies of trace codes over finite fields."""

import json

from ._core import Field, GhwlabError, gaussian_periods, ghw_closed, verify
from . import _core

__all__ = [
    "Field",
    "GhwlabError",
    "analyze",
    "gaussian_periods",
    "ghw_closed",
    "omega",
    "verify",
]


def analyze(p, m, d_mode="one", methods=None, r_max=None, threads=1, ceiling=10_000_000):
    """Return (report, exit_code); report has the same layout as `ghwlab analyze --format json`."""
    if methods is not None and not isinstance(methods, str):
        methods = ",".join(methods)
    text, code = _core.analyze_json(p, m, d_mode, methods, r_max, threads, ceiling)
    return json.loads(text), code


def omega(field, M, a_log, b_log=None):
    return json.loads(_core.omega(field, M, a_log, b_log))
