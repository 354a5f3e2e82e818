"""bounds derives place bounds from a generating set: every reachable
marking q satisfies q(p) <= mu(p, q0) = min e.q0 / e(p) over the members e
covering p. The bounds and the union of supports do not depend on which
generating set is used.

Read the documentation in docs/source/semiflows.rst.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .farkas import compute_fundamental_set, structurally_bounded_support

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundReport:
    """Place bounds of a net under an initial marking.

    bounds maps each place to an exact Fraction or math.inf; rho is the
    set of places covered by some semiflow. The structural boundedness
    witness is independent of the marking.
    """

    bounds: dict
    rho: frozenset
    structurally_bounded_places: frozenset
    witness: tuple

    def bound(self, place):
        return self.bounds[place]

    def integer_bound(self, place):
        """floor(mu(p, q0)), or math.inf."""
        value = self.bounds[place]
        return value if value == math.inf else math.floor(value)


def place_bounds(net, q0, gens=None):
    """Computes mu(p, q0) for every place of net.

    gens defaults to the fundamental set; any valid generating set over N
    or Q+ gives the same report.
    """
    q0 = net.check_marking(q0)
    if gens is None:
        gens = compute_fundamental_set(net)
    else:
        gens.validate(net)
    bounds = {}
    for i, place in enumerate(net.places):
        candidates = [Fraction(e.dot(q0), e[i]) for e in gens if e[i]]
        bounds[place] = min(candidates) if candidates else math.inf
    rho = frozenset(net.places[i] for e in gens for i in e.support)
    places, witness = structurally_bounded_support(net)
    unbounded = [p for p, v in bounds.items() if v == math.inf]
    if unbounded:
        logger.info("net '%s': no semiflow covers %s", net.name,
                    ", ".join(map(str, unbounded)))
    return BoundReport(bounds, rho, places, tuple(witness))
