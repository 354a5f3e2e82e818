"""properties decides behavioural properties on a reachability graph:
linear invariants, home spaces and home states, liveness, safeness,
deadlocks and mutual exclusion. It also separates unreachable markings
from the initial one with a semiflow, and looks for starvation cycles.

Answers on a truncated graph are three-valued: holds is None when the
explored part cannot decide the property.

Read the documentation in docs/source/reachability.rst.
"""

import logging
import operator
from dataclasses import dataclass, field

import networkx as nx

from ..exceptions import DimensionError
from ..net import enabled

logger = logging.getLogger(__name__)

_COMPARATORS = {
    "==": operator.eq,
    "!=": operator.ne,
    "<=": operator.le,
    ">=": operator.ge,
    "<": operator.lt,
    ">": operator.gt,
}


@dataclass(frozen=True)
class CheckResult:
    """holds is True, False, or None when truncation leaves it unknown.
    witness is a state number (or a cycle, or a marking) backing the
    verdict.
    """

    holds: object
    witness: object = None
    note: str = ""

    def __bool__(self):
        return self.holds is True


class HomeSpaceQuery:
    """A set of markings, given explicitly, as a conjunction of linear
    constraints, or as a union of such queries.
    """

    def __init__(self, markings=None, constraints=None, parts=None):
        self.markings = frozenset(tuple(m) for m in markings) \
            if markings is not None else None
        self.constraints = tuple(constraints) if constraints is not None \
            else None
        self.parts = tuple(parts) if parts is not None else None
        if sum(x is not None for x in (self.markings, self.constraints,
                                       self.parts)) != 1:
            raise ValueError("a home space query is either explicit, linear "
                             "or a union")
        for _, comparator, _ in self.constraints or ():
            if comparator not in _COMPARATORS:
                raise ValueError("unknown comparator '{}'".format(comparator))

    def __repr__(self):
        if self.markings is not None:
            return "HomeSpaceQuery(markings={})".format(sorted(self.markings))
        if self.constraints is not None:
            return "HomeSpaceQuery(constraints={})".format(self.constraints)
        return "HomeSpaceQuery(parts={})".format(self.parts)

    @classmethod
    def linear(cls, net, weights, comparator, constant):
        """Query {q | weights.q <comparator> constant}. weights is a vector
        over places or a place -> weight mapping.
        """
        if isinstance(weights, dict):
            vector = [0] * len(net.places)
            for place, weight in weights.items():
                vector[net.place_index(place)] = weight
            weights = vector
        if len(weights) != len(net.places):
            raise DimensionError("constraint has {} weights, the net has {} "
                                 "places".format(len(weights),
                                                 len(net.places)))
        return cls(constraints=[(tuple(weights), comparator, constant)])

    def union(self, other):
        return HomeSpaceQuery(parts=[self, other])

    def contains(self, marking):
        if self.markings is not None:
            return tuple(marking) in self.markings
        if self.constraints is not None:
            return all(
                _COMPARATORS[comparator](
                    sum(w * v for w, v in zip(weights, marking)), constant)
                for weights, comparator, constant in self.constraints)
        return any(part.contains(marking) for part in self.parts)


@dataclass(frozen=True)
class LivenessReport:
    """Per-transition verdicts; live is the set of transitions proved
    live.
    """

    verdicts: dict
    live: frozenset
    is_live_net: object
    cross_checked: bool = False


@dataclass(frozen=True)
class SafenessReport:
    """safe is None when the graph was truncated and no explored place
    exceeds one token. deadlocks never lists an unexpanded state.
    """

    max_tokens: dict
    safe: object
    deadlocks: tuple
    exhaustive: bool


@dataclass(frozen=True)
class PropertyReport:
    """Every behavioural verdict on one reachability graph. exhaustive is
    False when the graph was truncated.
    """

    safe: object
    max_tokens: dict
    deadlocks: tuple
    live_transitions: frozenset
    is_live_net: object
    home_state_q0: object
    violated_invariants: tuple = field(default_factory=tuple)
    exhaustive: bool = True


@dataclass(frozen=True)
class UnreachabilityCertificate:
    """generator.q0 = expected while generator.q = actual, so q is not
    reachable from q0.
    """

    label: str
    generator: tuple
    expected: int
    actual: int


def check_linear_invariant(rg, f, q0=None):
    """Checks f.q = f.q0 on every explored state; the first violating
    state is the witness.
    """
    if len(f) != len(rg.net.places):
        raise DimensionError("invariant has {} weights, the net has {} places"
                             .format(len(f), len(rg.net.places)))
    q0 = rg.initial_marking if q0 is None else rg.net.check_marking(q0)
    value = sum(w * v for w, v in zip(f, q0))
    for s, q in enumerate(rg.states):
        if sum(w * v for w, v in zip(f, q)) != value:
            return CheckResult(False, s, "value {} differs from {}".format(
                sum(w * v for w, v in zip(f, q)), value))
    if rg.truncated:
        return CheckResult(None, None,
                           "no violation found among explored states")
    return CheckResult(True, None, "constant value {}".format(value))


def is_home_space(rg, hs):
    """True iff every reachable state has a path into hs; a state with no
    such path is the witness.
    """
    targets = {s for s, q in enumerate(rg.states) if hs.contains(q)}
    if not targets:
        if rg.truncated:
            return CheckResult(None, None, "no explored state is in HS")
        return CheckResult(False, None, "HS does not meet the reachable set")
    closure = rg.backward_closure(targets)
    outside = [s for s in range(len(rg.states)) if s not in closure]
    if rg.truncated:
        return CheckResult(None, outside[0] if outside else None,
                           "graph truncated")
    if outside:
        return CheckResult(False, outside[0], "state {} cannot reach HS"
                           .format(outside[0]))
    return CheckResult(True)


def is_home_state(rg, q):
    """True iff q is reachable from every reachable state. Raises
    UnknownMarkingError when q is not a state of rg.
    """
    rg.index_of(q)
    return is_home_space(rg, HomeSpaceQuery(markings=[q]))


def live_transitions(rg):
    """A transition is live iff every state can reach a state enabling it.

    When the initial marking is a home state the live transitions are
    exactly the edge labels, which is checked as well.
    """
    verdicts = {}
    for t in rg.net.transitions:
        enabling = rg.enabling_states(t)
        if not enabling:
            verdicts[t] = CheckResult(False if not rg.truncated else None, 0,
                                      "never enabled")
            continue
        closure = rg.backward_closure(enabling)
        outside = [s for s in range(len(rg.states)) if s not in closure]
        if rg.truncated:
            verdicts[t] = CheckResult(None, outside[0] if outside else None,
                                      "graph truncated")
        elif outside:
            verdicts[t] = CheckResult(False, outside[0],
                                      "state {} never enables {}".format(
                                          outside[0], t))
        else:
            verdicts[t] = CheckResult(True)

    live = frozenset(t for t, v in verdicts.items() if v.holds is True)
    if rg.truncated:
        is_live_net = False if any(v.holds is False
                                   for v in verdicts.values()) else None
        return LivenessReport(verdicts, live, is_live_net)

    cross_checked = False
    if is_home_state(rg, rg.initial_marking).holds:
        if live != rg.labels():
            raise AssertionError(
                "live transitions {} differ from edge labels {} although q0 "
                "is a home state".format(sorted(live), sorted(rg.labels())))
        cross_checked = True
    return LivenessReport(verdicts, live,
                          len(live) == len(rg.net.transitions),
                          cross_checked)


def safeness_and_deadlocks(rg):
    """Maximum tokens per place, safeness and sink states."""
    places = rg.net.places
    max_tokens = {p: max(q[i] for q in rg.states)
                  for i, p in enumerate(places)}
    deadlocks = tuple(s for s in range(len(rg.states))
                      if rg.graph.out_degree(s) == 0
                      and s not in rg.unexpanded)
    if any(v > 1 for v in max_tokens.values()):
        safe = False
    else:
        safe = None if rg.truncated else True
    return SafenessReport(max_tokens, safe, deadlocks, not rg.truncated)


def property_report(rg, invariants=()):
    """Assembles every verdict; invariants is a sequence of (label,
    vector) pairs or a GeneratingSet.
    """
    if hasattr(invariants, "labels") and hasattr(invariants, "members"):
        invariants = [(label, m.weights) for label, m in
                      zip(invariants.labels, invariants.members)]
    safeness = safeness_and_deadlocks(rg)
    liveness = live_transitions(rg)
    violated = []
    for label, vector in invariants:
        result = check_linear_invariant(rg, vector)
        if result.holds is False:
            violated.append((label, result.witness))
    return PropertyReport(
        safe=safeness.safe,
        max_tokens=safeness.max_tokens,
        deadlocks=safeness.deadlocks,
        live_transitions=liveness.live,
        is_live_net=liveness.is_live_net,
        home_state_q0=is_home_state(rg, rg.initial_marking).holds,
        violated_invariants=tuple(violated),
        exhaustive=not rg.truncated)


def mutual_exclusion_holds(rg, first, second):
    """True iff no explored state marks both places."""
    i = rg.net.place_index(first)
    j = rg.net.place_index(second)
    for s, q in enumerate(rg.states):
        if q[i] and q[j]:
            return CheckResult(False, s, "{} and {} both marked".format(
                first, second))
    if rg.truncated:
        return CheckResult(None, None, "graph truncated")
    return CheckResult(True)


def unreachability_certificate(net, q0, q, gens):
    """Returns the first generator e of gens with e.q != e.q0, which
    proves q unreachable from q0, or None when no generator separates
    them.
    """
    q0 = net.check_marking(q0)
    q = net.check_marking(q)
    gens.validate(net)
    for label, member in zip(gens.labels, gens.members):
        expected, actual = member.dot(q0), member.dot(q)
        if expected != actual:
            return UnreachabilityCertificate(label, member.weights, expected,
                                             actual)
    logger.info("no generator separates %s from %s", tuple(q), tuple(q0))
    return None


def find_starvation_cycle(rg, place, blocked):
    """Looks for a cycle of reachable states that all mark place and none
    of which enables blocked: along it blocked is starved forever while
    place stays marked.

    Returns the cycle as (source, transition, target) triples, or None.
    """
    i = rg.net.place_index(place)
    rg.net.transition_index(blocked)
    nodes = [s for s, q in enumerate(rg.states)
             if q[i] > 0 and not enabled(rg.net, q, blocked)]
    subgraph = rg.graph.subgraph(nodes)
    for component in nx.strongly_connected_components(subgraph):
        start = min(component)
        try:
            cycle = nx.find_cycle(subgraph.subgraph(component), start)
        except nx.NetworkXNoCycle:
            continue
        return [(u, key, v) for u, v, key in cycle]
    return None


def draw_reachability_graph(rg, path):
    """Draws rg to an image file with matplotlib."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(rg.states)))
    labels = {}
    for source, transition, target in rg.edges:
        graph.add_edge(source, target)
        labels.setdefault((source, target), []).append(str(transition))
    layout = nx.spring_layout(graph, seed=0)
    figure, axes = plt.subplots(figsize=(8, 6))
    nx.draw_networkx(graph, layout, ax=axes, node_color="lightsteelblue",
                     arrows=True)
    nx.draw_networkx_edge_labels(
        graph, layout, ax=axes,
        edge_labels={k: ",".join(v) for k, v in labels.items()})
    axes.set_title("Reachability graph of {}".format(rg.net.name))
    axes.axis("off")
    figure.savefig(path)
    plt.close(figure)
    return path
