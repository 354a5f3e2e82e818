"""StructuralAnalysis runs every structural analysis of a net at once:
the fundamental set, the minimal semiflows, a Q-basis, the minimal
supports, the place bounds and the Sperner bounds. Results are available
through accessor methods after run().

Read the documentation in docs/source/semiflows.rst.
"""

import logging

from ..config import DEFAULT_SETTINGS
from .bounds import place_bounds
from .farkas import (compute_fundamental_set, minimal_supports,
                     optimized_sperner_bound, sperner_bound)
from .hilbert import compute_minimal_semiflows, compute_q_basis

logger = logging.getLogger(__name__)


class StructuralAnalysis:
    """Class framework for the structural analysis of a net."""

    def __init__(self, net=None, initial_marking=None, settings=None):
        """Initializes a StructuralAnalysis object."""
        self.net = net
        self.initial_marking = initial_marking
        self.settings = settings if settings is not None else DEFAULT_SETTINGS

        self.fundamental_set = None
        self.hilbert_basis = None
        self.q_basis = None
        self.minimal_supports = None
        self.bound_report = None
        self.sperner_bound = None
        self.optimized_sperner_bound = None

    # Accessor methods

    def get_net(self):
        """Accessor method for net."""
        return self.net

    def get_initial_marking(self):
        """Accessor method for initial_marking."""
        return self.initial_marking

    def get_settings(self):
        """Accessor method for settings."""
        return self.settings

    def get_fundamental_set(self):
        """Accessor method for fundamental_set."""
        return self.fundamental_set

    def get_hilbert_basis(self):
        """Accessor method for hilbert_basis."""
        return self.hilbert_basis

    def get_q_basis(self):
        """Accessor method for q_basis."""
        return self.q_basis

    def get_minimal_supports(self):
        """Accessor method for minimal_supports."""
        return self.minimal_supports

    def get_bound_report(self):
        """Accessor method for bound_report."""
        return self.bound_report

    def get_sperner_bound(self):
        """Accessor method for sperner_bound."""
        return self.sperner_bound

    def get_optimized_sperner_bound(self):
        """Accessor method for optimized_sperner_bound."""
        return self.optimized_sperner_bound

    # Modifier methods

    def set_net(self, new_net=None):
        """Modifier method for net."""
        self.net = new_net

    def set_initial_marking(self, new_initial_marking=None):
        """Modifier method for initial_marking."""
        self.initial_marking = new_initial_marking

    def set_settings(self, new_settings=None):
        """Modifier method for settings."""
        self.settings = new_settings if new_settings is not None \
            else DEFAULT_SETTINGS

    # Wrapper for the structural analyses

    def run(self):
        """Computes every structural result and updates the instance data.

        The place bounds are only computed when an initial marking is set.
        """
        self._check_inputs()

        self.fundamental_set = compute_fundamental_set(self.net)
        self.hilbert_basis = compute_minimal_semiflows(
            self.net, cap=self.settings.hilbert_coordinate_cap)
        self.q_basis = compute_q_basis(self.net, self.fundamental_set)
        self.minimal_supports = minimal_supports(self.net,
                                                 self.fundamental_set)
        self.sperner_bound = sperner_bound(len(self.net.places))
        self.optimized_sperner_bound = optimized_sperner_bound(self.net)

        if self.initial_marking is not None:
            self.bound_report = place_bounds(self.net, self.initial_marking,
                                             self.fundamental_set)
        else:
            self.bound_report = None

        logger.info("structural analysis of '%s': %d fundamental, %d minimal, "
                    "%d in Q-basis", self.net.name, len(self.fundamental_set),
                    len(self.hilbert_basis), len(self.q_basis))
        return self

    # Helper methods

    def _check_inputs(self):
        """Verifies that a net is set and that the initial marking fits
        it.
        """
        if self.net is None:
            raise ValueError("StructuralAnalysis needs a net; call set_net()")
        if self.initial_marking is not None:
            self.initial_marking = self.net.check_marking(self.initial_marking)
