import math
from fractions import Fraction

import numpy as np
import pytest

from SemiflowNet.exceptions import NotASemiflowError
from SemiflowNet.reachability import build_rg, safeness_and_deadlocks
from SemiflowNet.semiflows import (GeneratingSet, GeneratorKind, Semiring,
                                   compute_fundamental_set,
                                   compute_minimal_semiflows, place_bounds)


def test_tiny_bounds(tiny):
    net, _ = tiny
    report = place_bounds(net, (5, 0))
    assert report.bound("A") == 5
    assert report.bound("B") == Fraction(5, 2)
    assert report.integer_bound("B") == 2
    assert report.rho == {"A", "B"}
    assert report.structurally_bounded_places == {"A", "B"}
    assert report.witness == (1, 2)


def test_mutex_bounds(mutex):
    net, q0 = mutex
    report = place_bounds(net, q0)
    assert report.bounds == {p: 1 for p in net.places}


def test_uncovered_places_are_unbounded(no_semiflow):
    report = place_bounds(no_semiflow, (4,))
    assert report.bound("p") == math.inf
    assert report.integer_bound("p") == math.inf
    assert report.rho == frozenset()


def test_bounds_do_not_depend_on_the_generating_set(weighted):
    q0 = (3, 0, 0)
    from_fundamental = place_bounds(weighted, q0)
    from_hilbert = place_bounds(weighted, q0,
                                compute_minimal_semiflows(weighted))
    assert from_fundamental.bounds == from_hilbert.bounds == {
        "a": 3, "b": 0, "c": 0}
    assert from_fundamental.rho == from_hilbert.rho


def test_bounds_reject_foreign_generators(tiny):
    net, q0 = tiny
    with pytest.raises(NotASemiflowError):
        place_bounds(net, q0, GeneratingSet(Semiring.N, [(1, 1)]))


def test_observed_tokens_stay_below_bounds(marked):
    net, q0 = marked
    report = place_bounds(net, q0, compute_fundamental_set(net))
    observed = safeness_and_deadlocks(build_rg(net, q0)).max_tokens
    for place, tokens in observed.items():
        assert tokens <= report.integer_bound(place)


@pytest.mark.parametrize("seed", [0, 1])
def test_bounds_agree_across_generating_sets(marked, seed):
    net, q0 = marked
    fundamental = compute_fundamental_set(net)
    hilbert = compute_minimal_semiflows(net)
    rng = np.random.default_rng(seed)
    candidates = [fundamental, hilbert]
    for gens in (fundamental, hilbert):
        order = rng.permutation(len(gens))
        candidates.append(GeneratingSet(
            Semiring.Qplus, [gens[int(i)] for i in order],
            GeneratorKind.user_supplied,
            [gens.labels[int(i)] for i in order]))

    reference = place_bounds(net, q0, fundamental)
    for gens in candidates:
        report = place_bounds(net, q0, gens)
        assert report.bounds == reference.bounds
        assert report.rho == reference.rho
