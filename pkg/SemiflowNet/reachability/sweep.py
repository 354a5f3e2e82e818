"""sweep instantiates a parameterized fixture net over a grid of
parameter values, decides liveness and mutual exclusion on each
instance, and compares the verdicts with the closed-form conditions
known for the template.
"""

import itertools
import logging
from dataclasses import dataclass

from .graph import build_rg
from .properties import live_transitions, mutual_exclusion_holds

logger = logging.getLogger(__name__)

TEMPLATES = {
    "mutex_param": ("k", "l", "x", "y", "z"),
    "mutex3": ("k", "l", "x", "y", "z"),
    "tinyk": ("k", "a0", "b0"),
}


@dataclass(frozen=True)
class SweepRow:
    """Verdicts for one grid point. matches is None when the graph was
    truncated.
    """

    template: str
    params: dict
    live: object
    mutual_exclusion: object
    expected: dict
    matches: object
    states: int
    truncated: bool


def expected_verdicts(template, params):
    """Closed-form liveness and mutual exclusion of a template instance."""
    if template in ("mutex_param", "mutex3"):
        k, l, x, y, z = (params[name] for name in TEMPLATES[template])
        return {
            "live": k > 0 and l > 0 and z >= max(x, y),
            "mutual_exclusion": z < x + y or k == 0 or l == 0,
        }
    if template == "tinyk":
        k, a0, b0 = (params[name] for name in TEMPLATES[template])
        tokens = a0 + k * b0
        return {"live": tokens > k and tokens % k != 0,
                "mutual_exclusion": None}
    raise ValueError("unknown template '{}'".format(template))


def _instantiate(template, params):
    from ..netio.fixtures import Mutex3Net, MutexParamNet, TinyKNet

    builders = {"mutex_param": MutexParamNet, "mutex3": Mutex3Net,
                "tinyk": TinyKNet}
    return builders[template](**params)


def _grid_points(template, grid):
    names = TEMPLATES[template]
    unknown = set(grid) - set(names)
    if unknown:
        raise ValueError("template '{}' has no parameter {}".format(
            template, ", ".join(sorted(unknown))))
    missing = [name for name in names if name not in grid]
    if missing:
        raise ValueError("grid lacks parameter {}".format(", ".join(missing)))
    for values in itertools.product(*(grid[name] for name in names)):
        yield dict(zip(names, values))


def parameter_sweep(template, grid, max_states=None):
    """Returns one SweepRow per point of grid, in lexicographic order of
    the template parameters.
    """
    if template not in TEMPLATES:
        raise ValueError("unknown template '{}'; choose one of {}".format(
            template, ", ".join(sorted(TEMPLATES))))
    rows = []
    for params in _grid_points(template, grid):
        net, q0 = _instantiate(template, params)
        rg = build_rg(net, q0, max_states)
        live = live_transitions(rg).is_live_net
        if template == "tinyk":
            exclusion = None
        else:
            exclusion = mutual_exclusion_holds(rg, "B", "E").holds
        expected = expected_verdicts(template, params)
        if rg.truncated:
            matches = None
        else:
            matches = live == expected["live"] and \
                exclusion == expected["mutual_exclusion"]
        if matches is False:
            logger.warning("%s %s: live=%s mutual_exclusion=%s, expected %s",
                           template, params, live, exclusion, expected)
        rows.append(SweepRow(template, params, live, exclusion, expected,
                             matches, len(rg), rg.truncated))
    logger.info("swept %d instance(s) of %s", len(rows), template)
    return rows
