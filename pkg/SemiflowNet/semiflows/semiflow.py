"""semiflow defines semiflows (non-negative place weightings conserved by
every transition) and generating sets of semiflows, together with the
elementary queries on them: conservation, canonicity, supports and
enabling thresholds.

Read the documentation in docs/source/semiflows.rst.
"""

from enum import Enum
from functools import cached_property
from itertools import combinations

import numpy as np

from ..arithmetic import as_integer_vector, gcd_normalize, rational_rank
from ..exceptions import DimensionError, NotASemiflowError
from ..net import incidence


class Semiring(Enum):
    """Coefficient domain of a generating set or a decomposition."""

    N = "N"
    Qplus = "Qplus"
    Q = "Q"


class GeneratorKind(Enum):
    """How a generating set was obtained."""

    fundamental = "fundamental"
    hilbert_basis = "hilbert_basis"
    q_basis = "q_basis"
    user_supplied = "user_supplied"


class Semiflow:
    """Non-negative integer weighting of the places of a net.

    Conservation (f.C = 0) is a property of a semiflow relative to a net
    and is checked by is_semiflow or GeneratingSet.validate; the class
    itself only enforces non-negative integer weights.
    """

    def __init__(self, weights):
        weights = as_integer_vector(weights)
        if any(w < 0 for w in weights):
            raise NotASemiflowError(
                "semiflow weights must be non-negative: {}".format(weights))
        self.weights = weights
        self.support = frozenset(i for i, w in enumerate(weights) if w)

    def __repr__(self):
        return "Semiflow({})".format(self.weights)

    def __eq__(self, other):
        if isinstance(other, Semiflow):
            return self.weights == other.weights
        return NotImplemented

    def __hash__(self):
        return hash(self.weights)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, index):
        return self.weights[index]

    def __add__(self, other):
        if len(other) != len(self):
            raise DimensionError("semiflows of different dimensions")
        return Semiflow(a + b for a, b in zip(self, other))

    def scale(self, factor):
        """Returns factor * self for a natural factor."""
        return Semiflow(factor * w for w in self.weights)

    @cached_property
    def canonical(self):
        """True iff the gcd of the nonzero weights is 1."""
        return gcd_normalize(self.weights)[1] == 1

    @property
    def is_zero(self):
        return not self.support

    def leq(self, other):
        """Componentwise self <= other."""
        return all(a <= b for a, b in zip(self.weights, other))

    def dot(self, vector):
        """Scalar product with a marking or any vector over places."""
        if len(vector) != len(self.weights):
            raise DimensionError("vector has {} entries, semiflow {}".format(
                len(vector), len(self.weights)))
        return sum(w * v for w, v in zip(self.weights, vector))

    def support_places(self, net):
        """Support as a set of place identifiers of net."""
        return frozenset(net.places[i] for i in self.support)


def semiflow_from_places(net, weights):
    """Builds the Semiflow of net with the given place -> weight map."""
    vector = [0] * len(net.places)
    for place, weight in weights.items():
        vector[net.place_index(place)] = weight
    return Semiflow(vector)


def is_semiflow(net, vector):
    """True iff vector.C = 0, i.e. every transition conserves the weighted
    token count. Negative coordinates are allowed.
    """
    if len(vector) != len(net.places):
        raise DimensionError("vector has {} entries, the net has {} places"
                             .format(len(vector), len(net.places)))
    if not net.transitions:
        return True
    weights = np.array([int(v) for v in vector], dtype=object)
    return all(value == 0 for value in weights.dot(incidence(net)))


def is_canonical(vector):
    """True iff the gcd of the nonzero coordinates is 1. The zero vector
    is not canonical.
    """
    return gcd_normalize(tuple(vector))[1] == 1


def support_union(f, g, net=None):
    """Returns the support of f + g, which for non-negative f and g is the
    union of their supports. With net the support is given as place
    identifiers, otherwise as place indices.
    """
    f = f if isinstance(f, Semiflow) else Semiflow(f)
    g = g if isinstance(g, Semiflow) else Semiflow(g)
    total = f + g
    assert total.support == f.support | g.support
    if net is not None:
        if len(total) != len(net.places):
            raise DimensionError("semiflow has {} weights, the net has {} "
                                 "places".format(len(total), len(net.places)))
        return total.support_places(net)
    return total.support


def enabling_threshold(f, net, t):
    """Returns f.Pre(., t), the weighted token count t needs to fire."""
    f = f if isinstance(f, Semiflow) else Semiflow(f)
    if f.is_zero:
        raise NotASemiflowError("the zero vector has no enabling threshold")
    return f.dot(net.pre_vector(t))


def satisfies_enabling_threshold(f, net, q0, t):
    """Necessary liveness condition for t: f.q0 >= f.Pre(., t)."""
    f = f if isinstance(f, Semiflow) else Semiflow(f)
    return f.dot(net.check_marking(q0)) >= enabling_threshold(f, net, t)


class GeneratingSet:
    """Tagged collection of semiflows generating F+ over a semiring.

    Members are pairwise distinct and nonzero. A fundamental set holds
    canonical members whose supports form a Sperner family; a Q-basis
    holds linearly independent members.
    """

    def __init__(self, semiring, members, kind=GeneratorKind.user_supplied,
                 labels=None):
        self.semiring = Semiring(semiring)
        self.kind = GeneratorKind(kind)
        self.members = tuple(m if isinstance(m, Semiflow) else Semiflow(m)
                             for m in members)
        if labels is None:
            labels = ["e{}".format(i + 1) for i in range(len(self.members))]
        self.labels = tuple(labels)
        self._check()

    def _check(self):
        if len(self.labels) != len(self.members):
            raise ValueError("one label per member is required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("generator labels must be distinct")
        if len({len(m) for m in self.members}) > 1:
            raise DimensionError("generators of different dimensions")
        if len(set(self.members)) != len(self.members):
            raise ValueError("generators must be pairwise distinct")
        if any(m.is_zero for m in self.members):
            raise ValueError("the zero vector is never a generator")
        if self.kind is GeneratorKind.fundamental:
            if not all(m.canonical for m in self.members):
                raise ValueError("fundamental sets hold canonical semiflows")
            for f, g in combinations(self.members, 2):
                if f.support <= g.support or g.support <= f.support:
                    raise ValueError(
                        "fundamental set supports must be pairwise "
                        "incomparable")
        if self.kind is GeneratorKind.q_basis:
            if rational_rank([m.weights for m in self.members]) != \
                    len(self.members):
                raise ValueError("a Q-basis must be linearly independent")

    def __repr__(self):
        return "GeneratingSet({}, {}, {})".format(
            self.semiring.value, self.kind.value,
            [m.weights for m in self.members])

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, index):
        return self.members[index]

    def __contains__(self, semiflow):
        return semiflow in self.members

    def member(self, label):
        """Returns the member named label."""
        try:
            return self.members[self.labels.index(label)]
        except ValueError:
            raise KeyError("no generator labelled '{}'".format(label)) \
                from None

    def supports(self):
        return [m.support for m in self.members]

    def reordered(self, labels):
        """Returns a user-supplied copy holding the named members in the
        given order.
        """
        return GeneratingSet(self.semiring, [self.member(l) for l in labels],
                             GeneratorKind.user_supplied, labels=labels)

    def validate(self, net):
        """Raises NotASemiflowError unless every member is a semiflow of
        net.
        """
        for label, member in zip(self.labels, self.members):
            if not is_semiflow(net, member.weights):
                raise NotASemiflowError(
                    "generator '{}' = {} is not a semiflow of '{}'".format(
                        label, member.weights, net.name))
        return self
