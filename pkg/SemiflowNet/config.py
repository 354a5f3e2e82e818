"""Default analysis settings shared by the library and the command line."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Settings:
    """Resource caps used by the analyses.

    max_states bounds the reachability graph, hilbert_coordinate_cap
    bounds any coordinate of a Hilbert-basis candidate and
    decomposition_node_cap bounds the exhaustive search behind an
    infeasible decomposition over N.
    """

    max_states: int = 1_000_000
    hilbert_coordinate_cap: int = 10_000
    decomposition_node_cap: int = 1_000_000

    def with_overrides(self, **overrides):
        """Returns a copy with every non-None override applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        for key, value in changes.items():
            if value < 1:
                raise ValueError("{} must be at least 1".format(key))
        return replace(self, **changes)


DEFAULT_SETTINGS = Settings()
