"""petri_net holds the place/transition net data model: the Pre and Post
weight matrices, markings, the firing rule, the incidence matrix and the
state equation.

All vectors and matrices follow the declaration order of places and
transitions. Token counts are Python ints held in object-dtype numpy
arrays, so nothing ever overflows.

Read the documentation in docs/source/net.rst.
"""

from collections import Counter

import numpy as np

from ..exceptions import (DimensionError, InvalidNetError, NotEnabledError,
                          UnknownIdentifierError)


def _natural_matrix(values, shape, label):
    """Builds a read-only object array of Python ints from values."""
    matrix = np.empty(shape, dtype=object)
    rows = [list(row) for row in values] if shape[1] else [[] for _ in
                                                             range(shape[0])]
    if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
        raise DimensionError("{} must be a {}x{} matrix".format(label, *shape))
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            weight = int(value)
            if weight != value:
                raise InvalidNetError(
                    "{} weights must be integers, got {!r}".format(label,
                                                                    value))
            if weight < 0:
                raise InvalidNetError(
                    "{} weights must be non-negative, got {}".format(label,
                                                                     weight))
            matrix[i, j] = weight
    matrix.setflags(write=False)
    return matrix


class Marking(tuple):
    """A marking: one natural number of tokens per place, in place
    declaration order.
    """

    def __new__(cls, values=()):
        tokens = []
        for value in values:
            count = int(value)
            if count != value or count < 0:
                raise InvalidNetError(
                    "markings hold natural numbers, got {!r}".format(value))
            tokens.append(count)
        return super().__new__(cls, tokens)

    def __repr__(self):
        return "Marking({})".format(tuple(self))


class Net:
    """Place/transition net defined by its places, its transitions and
    the Pre and Post matrices (place x transition).

    A Net is immutable once built. Two nets are equal when they have the
    same places, transitions and matrices; the name is only a label.
    """

    def __init__(self, places, transitions, pre, post, name="net"):
        self.name = name
        self.places = tuple(places)
        self.transitions = tuple(transitions)

        for kind, ids in (("place", self.places),
                          ("transition", self.transitions)):
            duplicated = [i for i, n in Counter(ids).items() if n > 1]
            if duplicated:
                raise InvalidNetError(
                    "duplicate {} identifier '{}'".format(kind, duplicated[0]))
        shared = set(self.places) & set(self.transitions)
        if shared:
            raise InvalidNetError("identifier '{}' names both a place and a "
                                  "transition".format(sorted(shared)[0]))

        shape = (len(self.places), len(self.transitions))
        self.pre = _natural_matrix(pre, shape, "Pre")
        self.post = _natural_matrix(post, shape, "Post")

        self._place_index = {p: i for i, p in enumerate(self.places)}
        self._transition_index = {t: j for j, t in enumerate(self.transitions)}

        # Sparse arc lists make the firing rule cheap during exploration
        self._inputs = []
        self._changes = []
        for j in range(shape[1]):
            self._inputs.append(tuple((i, self.pre[i, j])
                                      for i in range(shape[0])
                                      if self.pre[i, j]))
            self._changes.append(tuple((i, self.post[i, j] - self.pre[i, j])
                                       for i in range(shape[0])
                                       if self.post[i, j] != self.pre[i, j]))

        incidence_matrix = self.post - self.pre
        incidence_matrix.setflags(write=False)
        self._incidence = incidence_matrix

    def __repr__(self):
        return "Net({!r}, places={}, transitions={})".format(
            self.name, list(self.places), list(self.transitions))

    def __eq__(self, other):
        if not isinstance(other, Net):
            return NotImplemented
        return (self.places == other.places
                and self.transitions == other.transitions
                and np.array_equal(self.pre, other.pre)
                and np.array_equal(self.post, other.post))

    def __hash__(self):
        return hash((self.places, self.transitions,
                     tuple(map(tuple, self.pre)), tuple(map(tuple, self.post))))

    # Accessor methods

    def place_index(self, place):
        """Returns the declaration index of place."""
        try:
            return self._place_index[place]
        except KeyError:
            raise UnknownIdentifierError("place", place) from None

    def transition_index(self, transition):
        """Returns the declaration index of transition."""
        try:
            return self._transition_index[transition]
        except KeyError:
            raise UnknownIdentifierError("transition", transition) from None

    def pre_vector(self, transition):
        """Returns Pre(., t) as a tuple over places."""
        return tuple(self.pre[:, self.transition_index(transition)])

    def post_vector(self, transition):
        """Returns Post(., t) as a tuple over places."""
        return tuple(self.post[:, self.transition_index(transition)])

    def check_marking(self, marking):
        """Returns marking as a Marking after checking it conforms to the
        net.
        """
        marking = marking if isinstance(marking, Marking) else Marking(marking)
        if len(marking) != len(self.places):
            raise DimensionError(
                "marking has {} entries, the net has {} places".format(
                    len(marking), len(self.places)))
        return marking

    def marking_from_dict(self, tokens):
        """Builds a marking from a place -> tokens mapping; unmentioned
        places hold no token.
        """
        values = [0] * len(self.places)
        for place, count in tokens.items():
            values[self.place_index(place)] = count
        return Marking(values)

    def reversed(self):
        """Returns the net with Pre and Post swapped."""
        return Net(self.places, self.transitions, self.post, self.pre,
                   name=self.name + "-reversed")


def enabled(net, q, t):
    """True iff q >= Pre(., t) componentwise."""
    j = net.transition_index(t)
    q = net.check_marking(q)
    return all(q[i] >= weight for i, weight in net._inputs[j])


def fire(net, q, t):
    """Returns q - Pre(., t) + Post(., t).

    Raises NotEnabledError naming the first deficient place when t is
    not enabled at q.
    """
    j = net.transition_index(t)
    q = net.check_marking(q)
    for i, weight in net._inputs[j]:
        if q[i] < weight:
            raise NotEnabledError(t, net.places[i], weight, q[i])
    tokens = list(q)
    for i, delta in net._changes[j]:
        tokens[i] += delta
    return Marking(tokens)


def _successor(net, q, j):
    """Firing rule on indices, without validation; None when disabled."""
    for i, weight in net._inputs[j]:
        if q[i] < weight:
            return None
    tokens = list(q)
    for i, delta in net._changes[j]:
        tokens[i] += delta
    return Marking(tokens)


def fire_sequence(net, q, sequence):
    """Fires every transition of sequence in turn from q."""
    for t in sequence:
        q = fire(net, q, t)
    return q


def incidence(net):
    """Returns the incidence matrix C = Post - Pre.

    Pure loops cancel: C(p, t) = 0 whenever Pre(p, t) = Post(p, t).
    """
    return net._incidence


def parikh_vector(net, sequence):
    """Counts the occurrences of each transition in sequence."""
    counts = [0] * len(net.transitions)
    for t in sequence:
        counts[net.transition_index(t)] += 1
    return tuple(counts)


def unit_parikh(net, t):
    """Parikh vector of the one-transition sequence t."""
    return parikh_vector(net, [t])


def state_equation_residual(net, q0, r, q):
    """Returns q - (C.r + q0).

    A zero residual means (q0, r, q) satisfies the state equation; a
    nonzero one proves that no firing sequence with Parikh vector r leads
    from q0 to q.
    """
    q0 = net.check_marking(q0)
    q = net.check_marking(q)
    if len(r) != len(net.transitions):
        raise DimensionError(
            "Parikh vector has {} entries, the net has {} transitions".format(
                len(r), len(net.transitions)))
    counts = np.array([int(c) for c in r], dtype=object)
    if len(net.transitions):
        change = net._incidence.dot(counts)
    else:
        change = np.zeros(len(net.places), dtype=object)
    return tuple(int(q[i] - change[i] - q0[i]) for i in range(len(q)))
