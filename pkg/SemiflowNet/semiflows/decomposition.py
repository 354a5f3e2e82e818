"""decomposition writes a semiflow as a combination of the members of a
generating set, with natural, non-negative rational or rational
coefficients.

Over N the coefficients are chosen greedily in the order of the
generating set, each as large as the remainder allows; the result
therefore depends on that order. When greedy subtraction gets stuck an
exhaustive search either finds a decomposition or proves that none
exists.

Read the documentation in docs/source/semiflows.rst.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ..arithmetic import find_nonnegative_solution, solve_rational
from ..config import DEFAULT_SETTINGS
from ..exceptions import DimensionError, ResourceLimitError
from .semiflow import GeneratingSet, Semiflow, Semiring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """target = sum(coefficients[i] * generators[i]), checked exactly."""

    target: Semiflow
    generators: GeneratingSet
    coefficients: tuple
    semiring: Semiring

    def __post_init__(self):
        if len(self.coefficients) != len(self.generators):
            raise DimensionError("one coefficient per generator is required")
        total = [Fraction(0)] * len(self.target)
        for k, member in zip(self.coefficients, self.generators):
            for i, w in enumerate(member):
                total[i] += k * w
        if tuple(total) != self.target.weights:
            raise ValueError("coefficients {} do not reconstruct {}".format(
                self.coefficients, self.target.weights))
        if self.semiring is Semiring.N and any(
                k < 0 or Fraction(k).denominator != 1
                for k in self.coefficients):
            raise ValueError("decompositions over N have natural coefficients")
        if self.semiring is Semiring.Qplus and any(
                k < 0 for k in self.coefficients):
            raise ValueError(
                "decompositions over Q+ have non-negative coefficients")

    def as_dict(self):
        """Maps generator labels to coefficients."""
        return dict(zip(self.generators.labels, self.coefficients))


@dataclass(frozen=True)
class Infeasible:
    """No decomposition of target exists over semiring.

    certificate names the method that proved it: "exhaustion" (N, with
    the number of search nodes), "phase_one" (Q+, with the positive
    phase-one optimum) or "rank" (Q, with the two ranks).
    """

    target: Semiflow
    semiring: Semiring
    certificate: dict = field(default_factory=dict)


def _greedy(target, members):
    remainder = list(target)
    coefficients = []
    for member in members:
        quotients = [r // w for r, w in zip(remainder, member) if w > 0]
        k = min(quotients) if quotients else 0
        coefficients.append(k)
        if k:
            remainder = [r - k * w for r, w in zip(remainder, member)]
    return coefficients, remainder


def _exhaustive(target, members, node_cap):
    """Depth-first search over natural coefficients, largest first.

    Returns (coefficients or None, number of nodes visited).
    """
    nodes = 0

    def search(j, remainder):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise ResourceLimitError(
                "decomposition search visited more than {} nodes".format(
                    node_cap), limit=node_cap)
        if not any(remainder):
            return [0] * (len(members) - j)
        if j == len(members):
            return None
        member = members[j]
        quotients = [r // w for r, w in zip(remainder, member) if w > 0]
        for k in range(min(quotients) if quotients else 0, -1, -1):
            rest = search(j + 1, [r - k * w for r, w in zip(remainder,
                                                             member)])
            if rest is not None:
                return [k] + rest
        return None

    return search(0, list(target)), nodes


def decompose(f, gens, semiring=None, node_cap=None):
    """Decomposes f over the members of gens.

    Returns a Decomposition, or an Infeasible value carrying a
    certificate. semiring defaults to the semiring of gens.
    """
    target = f if isinstance(f, Semiflow) else Semiflow(f)
    semiring = Semiring(semiring) if semiring is not None else gens.semiring
    if node_cap is None:
        node_cap = DEFAULT_SETTINGS.decomposition_node_cap
    if not len(gens):
        raise ValueError("cannot decompose over an empty generating set")
    if any(len(m) != len(target) for m in gens):
        raise DimensionError("target and generators differ in dimension")
    members = [m.weights for m in gens]

    if semiring is Semiring.N:
        coefficients, remainder = _greedy(target.weights, members)
        if any(remainder):
            logger.debug("greedy decomposition of %s stuck at %s, searching",
                         target.weights, tuple(remainder))
            coefficients, nodes = _exhaustive(target.weights, members,
                                              node_cap)
            if coefficients is None:
                return Infeasible(target, semiring,
                                  {"method": "exhaustion", "nodes": nodes})
        return Decomposition(target, gens, tuple(coefficients), semiring)

    if semiring is Semiring.Qplus:
        alpha, optimum = find_nonnegative_solution(members, target.weights)
        if alpha is None:
            return Infeasible(target, semiring,
                              {"method": "phase_one", "optimum": optimum})
        return Decomposition(target, gens, alpha, semiring)

    alpha, ranks = solve_rational(members, target.weights)
    if alpha is None:
        return Infeasible(target, semiring,
                          {"method": "rank", "rank_generators": ranks[0],
                           "rank_augmented": ranks[1]})
    return Decomposition(target, gens, alpha, semiring)
