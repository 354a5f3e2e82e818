"""BehaviouralAnalysis builds the reachability graph of a marked net and
decides its behavioural properties in one run(). Results are available
through accessor methods.

Read the documentation in docs/source/reachability.rst.
"""

import logging

from ..config import DEFAULT_SETTINGS
from .graph import build_rg
from .properties import (is_home_state, live_transitions, property_report,
                         safeness_and_deadlocks)

logger = logging.getLogger(__name__)


class BehaviouralAnalysis:
    """Class framework for the behavioural analysis of a marked net."""

    def __init__(self, net=None, initial_marking=None, invariants=(),
                 settings=None):
        """Initializes a BehaviouralAnalysis object."""
        self.net = net
        self.initial_marking = initial_marking
        self.invariants = invariants
        self.settings = settings if settings is not None else DEFAULT_SETTINGS

        self.reach_graph = None
        self.safeness = None
        self.liveness = None
        self.home_state_q0 = None
        self.report = None

    # Accessor methods

    def get_net(self):
        """Accessor method for net."""
        return self.net

    def get_initial_marking(self):
        """Accessor method for initial_marking."""
        return self.initial_marking

    def get_invariants(self):
        """Accessor method for invariants."""
        return self.invariants

    def get_reach_graph(self):
        """Accessor method for reach_graph."""
        return self.reach_graph

    def get_safeness(self):
        """Accessor method for safeness."""
        return self.safeness

    def get_liveness(self):
        """Accessor method for liveness."""
        return self.liveness

    def get_home_state_q0(self):
        """Accessor method for home_state_q0."""
        return self.home_state_q0

    def get_report(self):
        """Accessor method for report."""
        return self.report

    # Modifier methods

    def set_net(self, new_net=None):
        """Modifier method for net."""
        self.net = new_net

    def set_initial_marking(self, new_initial_marking=None):
        """Modifier method for initial_marking."""
        self.initial_marking = new_initial_marking

    def set_invariants(self, new_invariants=()):
        """Modifier method for invariants."""
        self.invariants = new_invariants

    def set_max_states(self, new_max_states=None):
        """Modifier method for the state cap of the exploration."""
        self.settings = self.settings.with_overrides(
            max_states=new_max_states)

    # Wrapper for the behavioural analyses

    def run(self):
        """Builds the reachability graph and decides every property."""
        if self.net is None or self.initial_marking is None:
            raise ValueError("BehaviouralAnalysis needs a net and an initial "
                             "marking")

        self.reach_graph = build_rg(self.net, self.initial_marking,
                                    self.settings.max_states)
        self.safeness = safeness_and_deadlocks(self.reach_graph)
        self.liveness = live_transitions(self.reach_graph)
        self.home_state_q0 = is_home_state(
            self.reach_graph, self.reach_graph.initial_marking).holds
        self.report = property_report(self.reach_graph, self.invariants)

        if self.reach_graph.truncated:
            logger.warning("verdicts on '%s' are partial: the graph was "
                           "truncated", self.net.name)
        return self
