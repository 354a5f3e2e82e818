import json
import math
from fractions import Fraction

import pytest

from SemiflowNet.netio import STC3Vectors, emit_report, to_json_value
from SemiflowNet.netio.report import (bounds_section, certificate_section,
                                      decomposition_section,
                                      reachability_section, semiflows_section)
from SemiflowNet.reachability import (build_rg, is_home_state,
                                      live_transitions, safeness_and_deadlocks)
from SemiflowNet.semiflows import (GeneratingSet, Semiring,
                                   compute_fundamental_set,
                                   compute_minimal_semiflows, decompose,
                                   place_bounds)


@pytest.mark.parametrize("value, expected", [
    (Fraction(5, 2), {"num": 5, "den": 2}),
    (Fraction(4, 2), 2),
    (math.inf, "inf"),
    (Semiring.Qplus, "Qplus"),
    (frozenset({"b", "a"}), ["a", "b"]),
    ((1, Fraction(1, 3)), [1, {"num": 1, "den": 3}]),
    (True, True),
    (None, None),
])
def test_to_json_value(value, expected):
    assert to_json_value(value) == expected


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        to_json_value(0.5)
    with pytest.raises(TypeError):
        to_json_value(object())


def test_emit_report_is_sorted_and_terminated():
    text = emit_report({"b": 1, "a": {"d": Fraction(1, 2), "c": 2}})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert text.index('"c"') < text.index('"d"')
    assert json.loads(text) == {"a": {"c": 2, "d": {"num": 1, "den": 2}},
                                "b": 1}


def test_semiflows_section(mutex):
    net, _ = mutex
    fundamental = compute_fundamental_set(net)
    section = to_json_value(semiflows_section(
        net, fundamental, compute_minimal_semiflows(net)))
    assert section["kind"] == "fundamental"
    assert [m["weights"] for m in section["members"]] == [
        {"A": 1, "B": 1}, {"B": 1, "E": 1, "S": 1}, {"D": 1, "E": 1}]
    assert all(m["canonical"] and m["minimal"] for m in section["members"])
    assert section["members"][1]["support"] == ["B", "E", "S"]


def test_empty_semiflows_section(no_semiflow):
    section = to_json_value(semiflows_section(
        no_semiflow, compute_fundamental_set(no_semiflow)))
    assert section["members"] == []


def test_bounds_section(tiny):
    net, _ = tiny
    report = place_bounds(net, (5, 0))
    section = json.loads(emit_report(bounds_section(report, 2, 2)))
    assert section["mu"] == {"A": 5, "B": {"num": 5, "den": 2}}
    assert section["rho"] == ["A", "B"]
    assert section["structurally_bounded"]["witness"] == [1, 2]


def test_unbounded_place_is_reported_as_inf(no_semiflow):
    report = place_bounds(no_semiflow, (1,))
    assert json.loads(emit_report(bounds_section(report, 1, 1)))["mu"] == {
        "p": "inf"}


def test_reachability_section(mutex):
    rg = build_rg(*mutex)
    section = json.loads(emit_report(reachability_section(
        rg, safeness_and_deadlocks(rg), live_transitions(rg),
        is_home_state(rg, rg.initial_marking))))
    assert section["state_count"] == 3
    assert section["states"][0] == {"A": 1, "B": 0, "D": 1, "E": 0, "S": 1}
    assert section["edges"][0] == [0, "Semp1", 1]
    assert section["live_transitions"] == ["Semp1", "Semp2", "Semv1",
                                           "Semv2"]
    assert section["safe"] is True
    assert section["deadlocks"] == []
    assert section["home_state_q0"] == {"holds": True}

    brief = reachability_section(rg, include_states=False)
    assert "states" not in brief and brief["edge_count"] == 4


def test_certificate_section(tiny):
    net, q0 = tiny
    assert certificate_section(net, q0, None)["verdict"] == "unknown"


def test_decomposition_sections():
    fixture = STC3Vectors()
    gs = fixture.generators.reordered(["g1", "g2", "g3"])
    f1 = fixture.generators.member("f1")

    section = to_json_value(decomposition_section(decompose(f1, gs)))
    assert section["feasible"] is False
    assert section["certificate"]["method"] == "exhaustion"

    section = to_json_value(decomposition_section(
        decompose(f1, gs, Semiring.Qplus)))
    assert section["coefficients"] == {"g1": {"num": 2, "den": 3}, "g2": 0,
                                       "g3": {"num": 1, "den": 3}}
    assert section["target"] == [3, 3, 2, 0, 1]

    infeasible = decompose((1, 0), GeneratingSet(Semiring.Qplus, [(1, 1)]))
    section = to_json_value(decomposition_section(infeasible))
    assert section["certificate"]["optimum"] == 1
