import pytest

from SemiflowNet.exceptions import (DimensionError, InvalidNetError,
                                    NotEnabledError, UnknownIdentifierError)
from SemiflowNet.net import (Marking, Net, enabled, fire, fire_sequence,
                             incidence, parikh_vector, state_equation_residual,
                             unit_parikh)
from SemiflowNet.reachability import build_rg


def test_enabled_compares_with_pre(tiny):
    net, _ = tiny
    assert enabled(net, (2, 0), "t1")
    assert not enabled(net, (1, 0), "t1")


def test_enabled_on_initial_mutex_marking(mutex):
    net, q0 = mutex
    assert q0 == (1, 0, 1, 0, 1)
    assert enabled(net, q0, "Semp1")


def test_fire_tiny(tiny):
    net, _ = tiny
    assert fire(net, (3, 0), "t1") == (1, 1)
    assert fire(net, (1, 1), "t2") == (3, 0)


def test_fire_disabled_names_deficient_place(tiny):
    net, _ = tiny
    with pytest.raises(NotEnabledError) as info:
        fire(net, (1, 0), "t1")
    assert info.value.place == "A"
    assert info.value.required == 2
    assert info.value.available == 1


def test_unknown_transition(tiny):
    net, _ = tiny
    with pytest.raises(UnknownIdentifierError):
        enabled(net, (1, 0), "t9")
    with pytest.raises(KeyError):
        fire(net, (1, 0), "t9")


def test_pure_loop_leaves_marking_unchanged():
    net = Net(["p"], ["t"], [[1]], [[1]])
    assert fire(net, (2,), "t") == (2,)
    assert incidence(net)[0, 0] == 0
    # Loops cancel in C but still gate enabling
    assert not enabled(net, (0,), "t")


def test_incidence_columns(tiny, mutex):
    net, _ = tiny
    c = incidence(net)
    assert tuple(c[:, 0]) == (-2, 1)
    assert tuple(c[:, 1]) == (2, -1)

    net, _ = mutex
    column = dict(zip(net.places, incidence(net)[:, 0]))
    assert column == {"A": -1, "B": 1, "D": 0, "E": 0, "S": -1}


def test_incidence_is_read_only(tiny):
    net, _ = tiny
    with pytest.raises(ValueError):
        incidence(net)[0, 0] = 5


def test_net_without_arcs_has_zero_incidence():
    net = Net(["p", "q"], ["t"], [[0], [0]], [[0], [0]])
    assert all(v == 0 for v in incidence(net).flatten())


def test_state_equation_residual(tiny):
    net, _ = tiny
    assert state_equation_residual(net, (3, 0), (1, 0), (1, 1)) == (0, 0)
    assert state_equation_residual(net, (3, 0), (0, 0), (3, 0)) == (0, 0)
    assert state_equation_residual(net, (2, 0), (0, 1), (4, 0)) == (0, 1)


def test_state_equation_dimension_check(tiny):
    net, _ = tiny
    with pytest.raises(DimensionError):
        state_equation_residual(net, (3, 0), (1,), (1, 1))


def test_firing_satisfies_state_equation(marked):
    net, q0 = marked
    rg = build_rg(net, q0)
    for s, t, target in rg.edges:
        q = rg.states[s]
        successor = fire(net, q, t)
        assert successor == rg.states[target]
        assert all(v >= 0 for v in successor)
        assert not any(state_equation_residual(net, q, unit_parikh(net, t),
                                               successor))


def test_reversed_net_restores_marking(marked):
    net, q0 = marked
    back = net.reversed()
    for t in net.transitions:
        if enabled(net, q0, t):
            assert fire(back, fire(net, q0, t), t) == q0


def test_fire_sequence_and_parikh_vector(tiny):
    net, _ = tiny
    sequence = ["t1", "t2", "t1"]
    q = fire_sequence(net, (3, 0), sequence)
    assert q == (1, 1)
    assert parikh_vector(net, sequence) == (2, 1)
    assert state_equation_residual(net, (3, 0), (2, 1), q) == (0, 0)


def test_markings_are_natural():
    with pytest.raises(InvalidNetError):
        Marking((1, -1))
    assert Marking([10 ** 30]) == (10 ** 30,)


def test_check_marking_dimension(tiny):
    net, _ = tiny
    with pytest.raises(DimensionError):
        net.check_marking((1, 2, 3))


def test_net_validation():
    with pytest.raises(InvalidNetError):
        Net(["p", "p"], ["t"], [[0], [0]], [[0], [0]])
    with pytest.raises(InvalidNetError):
        Net(["x"], ["x"], [[0]], [[0]])
    with pytest.raises(InvalidNetError):
        Net(["p"], ["t"], [[-1]], [[0]])
    with pytest.raises(DimensionError):
        Net(["p"], ["t"], [[0, 1]], [[0]])


def test_equality_ignores_name(tiny):
    net, _ = tiny
    copy = Net(net.places, net.transitions, net.pre, net.post, name="other")
    assert copy == net
    assert hash(copy) == hash(net)
    assert net.reversed() != net
