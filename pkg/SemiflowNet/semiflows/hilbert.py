"""hilbert computes the minimal semiflows of a net (the Hilbert basis of
its semiflow cone, the unique minimal generating set over N) and Q-bases
of generating sets.

The Hilbert basis is completed from the fundamental set by the
Contejean-Devie procedure: candidate vectors grow one unit at a time, and
a candidate x is only extended along places that bring its defect x.C
closer to zero.

Read the documentation in docs/source/semiflows.rst.
"""

import logging

from ..arithmetic import extract_independent_subset
from ..config import DEFAULT_SETTINGS
from ..exceptions import NotASemiflowError, ResourceLimitError
from ..net import incidence
from .farkas import compute_fundamental_set
from .semiflow import (GeneratingSet, GeneratorKind, Semiflow, Semiring,
                       is_semiflow)

logger = logging.getLogger(__name__)


def _dominates(vector, basis):
    """True iff some member of basis is <= vector."""
    return any(all(b <= v for b, v in zip(member, vector)) for member in basis)


def compute_minimal_semiflows(net, cap=None):
    """Returns every <=-minimal nonzero semiflow of net.

    cap bounds the coordinates of candidate vectors; exceeding it raises
    ResourceLimitError rather than returning a partial basis.
    """
    if cap is None:
        cap = DEFAULT_SETTINGS.hilbert_coordinate_cap
    c = incidence(net)
    n, m = len(net.places), len(net.transitions)
    rows = [tuple(int(v) for v in c[i, :]) for i in range(n)]

    basis = [member.weights for member in compute_fundamental_set(net)]
    frontier = {}
    for i in range(n):
        unit = tuple(1 if k == i else 0 for k in range(n))
        if not _dominates(unit, basis):
            frontier[unit] = rows[i]

    level = 1
    while frontier:
        solutions = [x for x, d in frontier.items() if not any(d)]
        for x in solutions:
            if not _dominates(x, basis):
                basis.append(x)
        candidates = {}
        for x, defect in frontier.items():
            if not any(defect):
                continue
            for j in range(n):
                # Only grow along places that push the defect towards zero
                if sum(a * b for a, b in zip(defect, rows[j])) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if y in candidates or _dominates(y, basis):
                    continue
                if y[j] > cap:
                    raise ResourceLimitError(
                        "Hilbert basis of '{}' needs a coordinate above {}"
                        .format(net.name, cap), limit=cap)
                candidates[y] = tuple(a + b for a, b in zip(defect, rows[j]))
        frontier = candidates
        level += 1
        logger.debug("level %d: %d candidate(s), %d basis member(s)", level,
                     len(frontier), len(basis))

    basis.sort(key=lambda v: (tuple(i for i, w in enumerate(v) if w), v))
    logger.info("net '%s': %d minimal semiflow(s) over %d transition(s)",
                net.name, len(basis), m)
    return GeneratingSet(Semiring.N, [Semiflow(v) for v in basis],
                         GeneratorKind.hilbert_basis,
                         labels=["m{}".format(i + 1)
                                 for i in range(len(basis))])


def is_minimal(net, vector, hilbert_basis=None):
    """True iff vector is a minimal semiflow of net: no other nonzero
    semiflow lies below it.
    """
    weights = tuple(vector)
    if not is_semiflow(net, weights) or any(w < 0 for w in weights) \
            or not any(weights):
        raise NotASemiflowError(
            "{} is not a nonzero semiflow of '{}'".format(weights, net.name))
    if hilbert_basis is None:
        hilbert_basis = compute_minimal_semiflows(net)
    return Semiflow(weights) in hilbert_basis


def q_basis_of(generating_set):
    """Returns the members of generating_set that increase the rank when
    scanned in order, as a Q-basis keeping their labels.
    """
    members = list(generating_set)
    kept = extract_independent_subset([m.weights for m in members])
    labels = []
    remaining = list(zip(generating_set.labels, members))
    for weights in kept:
        index = next(i for i, (_, m) in enumerate(remaining)
                     if m.weights == weights)
        labels.append(remaining.pop(index)[0])
    return GeneratingSet(Semiring.Q, [Semiflow(w) for w in kept],
                         GeneratorKind.q_basis, labels=labels)


def compute_q_basis(net, fundamental_set=None):
    """Returns a linearly independent subset of the fundamental set
    spanning the same Q-space.
    """
    if fundamental_set is None:
        fundamental_set = compute_fundamental_set(net)
    return q_basis_of(fundamental_set)
