"""farkas computes semiflows of minimal support by Farkas column
elimination on the matrix [C | I], and derives from the same elimination
the structural boundedness witness and the Sperner bounds on the number of
minimal supports.

Read the documentation in docs/source/semiflows.rst.
"""

import logging

from scipy.special import comb

from ..arithmetic import gcd_normalize
from ..net import incidence
from .semiflow import GeneratingSet, GeneratorKind, Semiflow, Semiring

logger = logging.getLogger(__name__)


def _support(identity):
    return frozenset(i for i, v in enumerate(identity) if v)


def _prune(table):
    """Drops duplicated rows and rows whose support strictly contains the
    support of another row.
    """
    unique = {}
    for constraint, identity in table:
        unique.setdefault(identity, constraint)
    rows = [(c, i, _support(i)) for i, c in unique.items()]
    kept = []
    for constraint, identity, support in rows:
        if any(other < support for _, _, other in rows):
            continue
        kept.append((constraint, identity))
    return kept


def farkas_rays(rows):
    """Non-negative integer combinations of rows that vanish, with minimal
    supports.

    rows[i] is the constraint part of row i. The result holds, for each
    minimal support, the canonical combination vector (one weight per
    row), in deterministic order.
    """
    n = len(rows)
    m = len(rows[0]) if rows else 0
    table = []
    for i, row in enumerate(rows):
        identity = tuple(1 if k == i else 0 for k in range(n))
        table.append((tuple(int(v) for v in row), identity))

    for j in range(m):
        zero = [r for r in table if r[0][j] == 0]
        positive = [r for r in table if r[0][j] > 0]
        negative = [r for r in table if r[0][j] < 0]
        combined = list(zero)
        for c_pos, i_pos in positive:
            for c_neg, i_neg in negative:
                a, b = -c_neg[j], c_pos[j]
                identity, g = gcd_normalize(
                    tuple(a * x + b * y for x, y in zip(i_pos, i_neg)))
                constraint = tuple((a * x + b * y) // g
                                   for x, y in zip(c_pos, c_neg))
                combined.append((constraint, identity))
        table = _prune(combined)
        logger.debug("column %d eliminated: %d row(s) remain", j, len(table))

    rays = [identity for _, identity in table]
    supports = [_support(r) for r in rays]
    minimal = [r for r, s in zip(rays, supports)
               if not any(other < s for other in supports)]
    return sorted(set(minimal), key=_order_key)


def _order_key(vector):
    return tuple(sorted(_support(vector))), vector


def compute_fundamental_set(net):
    """Returns the fundamental set of net: the canonical semiflow of every
    minimal support. It is a minimal generating set over Q+.
    """
    c = incidence(net)
    rows = [tuple(c[i, :]) for i in range(len(net.places))]
    members = [Semiflow(v) for v in farkas_rays(rows)]
    logger.info("net '%s': %d semiflow(s) of minimal support", net.name,
                len(members))
    return GeneratingSet(Semiring.Qplus, members, GeneratorKind.fundamental,
                         labels=["f{}".format(i + 1)
                                 for i in range(len(members))])


def minimal_supports(net, fundamental_set=None):
    """Returns the minimal supports of net as sets of place identifiers."""
    if fundamental_set is None:
        fundamental_set = compute_fundamental_set(net)
    return [m.support_places(net) for m in fundamental_set]


def structurally_bounded_support(net):
    """Finds a non-negative v with v.C <= 0 of maximal support.

    One slack row per transition turns v.C <= 0 into an equality system
    handled by the same elimination as the fundamental set. Returns the
    set of places certified structurally bounded and the witness v; the
    whole net is structurally bounded iff every place is in the set.
    """
    c = incidence(net)
    n, m = len(net.places), len(net.transitions)
    rows = [tuple(c[i, :]) for i in range(n)]
    rows += [tuple(1 if k == j else 0 for k in range(m)) for j in range(m)]
    witness = [0] * n
    for ray in farkas_rays(rows):
        for i in range(n):
            witness[i] += ray[i]
    witness, _ = gcd_normalize(witness)
    places = frozenset(net.places[i] for i, v in enumerate(witness) if v)
    return places, witness


def sperner_bound(d):
    """Upper bound binomial(d, floor(d/2)) on the number of minimal
    supports of a net with d places.
    """
    if d < 0:
        raise ValueError("d must be a natural number")
    return int(comb(d, d // 2, exact=True))


def optimized_sperner_bound(net):
    """Sperner bound after merging places linked by a transition with one
    input and one output of equal weight: such places enter every support
    together.
    """
    parent = {p: p for p in net.places}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for t in net.transitions:
        inputs = [(p, w) for p, w in zip(net.places, net.pre_vector(t)) if w]
        outputs = [(p, w) for p, w in zip(net.places, net.post_vector(t))
                   if w]
        if len(inputs) == 1 and len(outputs) == 1 \
                and inputs[0][1] == outputs[0][1]:
            parent[find(inputs[0][0])] = find(outputs[0][0])
    classes = {find(p) for p in net.places}
    return sperner_bound(len(classes))
