"""graph builds the reachability graph of a marked net by breadth-first
exploration and exposes it as a networkx multigraph together with its
strongly connected component condensation.

Read the documentation in docs/source/reachability.rst.
"""

import logging
from collections import deque

import networkx as nx

from ..config import DEFAULT_SETTINGS
from ..exceptions import UnknownMarkingError
from ..net import enabled
from ..net.petri_net import _successor

logger = logging.getLogger(__name__)


class ReachGraph:
    """Labelled reachability graph of a marked net.

    State 0 is the initial marking and states are numbered in discovery
    order. Edges are (source, transition, target) triples; a transition
    labels at most one edge out of a state, while distinct transitions
    joining the same two states give parallel edges.

    When truncated is True the exploration hit its state cap:
    unexpanded holds the states with at least one successor that was not
    added, and every other state has all its outgoing edges.
    """

    def __init__(self, net, states, edges, truncated=False, unexpanded=()):
        self.net = net
        self.states = tuple(states)
        self.edges = tuple(edges)
        self.truncated = truncated
        self.unexpanded = frozenset(unexpanded)
        self._index = {q: s for s, q in enumerate(self.states)}

        self.graph = nx.MultiDiGraph()
        self.graph.add_nodes_from(range(len(self.states)))
        for source, transition, target in self.edges:
            self.graph.add_edge(source, target, key=transition)

        self.scc = nx.condensation(nx.DiGraph(self.graph))
        self.component_of = self.scc.graph["mapping"]

    def __repr__(self):
        return "ReachGraph({!r}, states={}, edges={}, truncated={})".format(
            self.net.name, len(self.states), len(self.edges), self.truncated)

    def __len__(self):
        return len(self.states)

    @property
    def initial_marking(self):
        return self.states[0]

    def index_of(self, marking):
        """Returns the state number of marking."""
        marking = self.net.check_marking(marking)
        try:
            return self._index[marking]
        except KeyError:
            raise UnknownMarkingError(
                "marking {} is not a state of the reachability graph".format(
                    tuple(marking))) from None

    def __contains__(self, marking):
        return tuple(marking) in self._index

    def out_edges(self, state):
        """Outgoing (transition, target) pairs of state."""
        return [(t, target) for _, target, t in
                self.graph.out_edges(state, keys=True)]

    def labels(self):
        """Transitions labelling at least one edge."""
        return frozenset(t for _, t, _ in self.edges)

    def enabling_states(self, transition):
        """States that enable transition."""
        return [s for s, q in enumerate(self.states)
                if enabled(self.net, q, transition)]

    def backward_closure(self, targets):
        """Returns the set of states with a path into targets.

        The closure runs once over the condensation DAG in reverse
        topological order.
        """
        targets = set(targets)
        good = {}
        for component in reversed(list(nx.topological_sort(self.scc))):
            members = self.scc.nodes[component]["members"]
            good[component] = bool(members & targets) or any(
                good[c] for c in self.scc.successors(component))
        return {s for s in range(len(self.states))
                if good[self.component_of[s]]}

    def sink_components(self):
        """Components without outgoing edges, as sets of states."""
        return [set(self.scc.nodes[c]["members"]) for c in self.scc.nodes
                if self.scc.out_degree(c) == 0]


def build_rg(net, q0, max_states=None):
    """Explores the reachable markings of (net, q0) breadth first.

    Transitions are tried in declaration order, so two builds of the same
    marked net number states and list edges identically. Exploration
    never holds more than max_states states; hitting the cap sets
    truncated instead of raising.
    """
    if max_states is None:
        max_states = DEFAULT_SETTINGS.max_states
    if max_states < 1:
        raise ValueError("max_states must be at least 1")
    q0 = net.check_marking(q0)

    states = [q0]
    index = {q0: 0}
    edges = []
    unexpanded = set()
    queue = deque([0])
    while queue:
        s = queue.popleft()
        q = states[s]
        for j, t in enumerate(net.transitions):
            successor = _successor(net, q, j)
            if successor is None:
                continue
            target = index.get(successor)
            if target is None:
                if len(states) >= max_states:
                    unexpanded.add(s)
                    continue
                target = len(states)
                index[successor] = target
                states.append(successor)
                queue.append(target)
            edges.append((s, t, target))

    truncated = bool(unexpanded)
    if truncated:
        logger.warning("reachability graph of '%s' truncated at %d states",
                       net.name, max_states)
    else:
        logger.info("reachability graph of '%s': %d states, %d edges",
                    net.name, len(states), len(edges))
    return ReachGraph(net, states, edges, truncated, unexpanded)
