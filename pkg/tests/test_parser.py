import pytest

from SemiflowNet.exceptions import NetParseError, NotASemiflowError
from SemiflowNet.net import enabled, fire, incidence
from SemiflowNet.netio import (emit_net, fixture_names, load_fixture,
                               load_net, parse_assignments, parse_generators,
                               parse_grid, parse_net, parse_source)
from SemiflowNet.semiflows import Semiring

TINY = """\
# comment line
net tiny
place A init 3
place B
trans t1
  in A:2
  out B      # trailing comment
trans t2
  in A B
  out A:3
"""


def parse_error_line(text, **params):
    with pytest.raises(NetParseError) as info:
        parse_net(text, params or None)
    return info.value.line


def test_parse_tiny():
    net, q0 = parse_net(TINY)
    assert net.name == "tiny"
    assert net.places == ("A", "B")
    assert net.transitions == ("t1", "t2")
    assert q0 == (3, 0)
    c = incidence(net)
    assert tuple(c[:, 0]) == (-2, 1)
    assert tuple(c[:, 1]) == (2, -1)


def test_crlf_is_tolerated():
    net, q0 = parse_net(TINY.replace("\n", "\r\n"))
    assert net == parse_net(TINY)[0]
    assert q0 == (3, 0)


def test_empty_transition_is_always_enabled():
    net, q0 = parse_net("net n\nplace p\ntrans idle\n")
    assert q0 == (0,)
    assert enabled(net, q0, "idle")
    assert fire(net, q0, "idle") == q0


def test_arcs_default_to_weight_one_and_accumulate():
    net, _ = parse_net("place p\nplace q\ntrans t\n  in p p\n  out q:2 q\n")
    assert net.pre_vector("t") == (2, 0)
    assert net.post_vector("t") == (0, 3)
    assert net.name == "net"


def test_parameters_and_overrides():
    text = "param k 2\nplace A init k\nplace B\ntrans t\n  in A:k\n  out B\n"
    source = parse_source(text)
    assert source.params == {"k": 2}
    assert source.marking == (2, 0)
    source = parse_source(text, {"k": 5})
    assert source.marking == (5, 0)
    assert source.net.pre_vector("t") == (5, 0)
    assert parse_error_line(text, z=1) == 0


@pytest.mark.parametrize("text, line", [
    ("place A init -1\n", 1),
    ("place A\nplace A\n", 2),
    ("place A\ntrans t\n  in B\n", 3),
    ("place A\ntrans t\n  in A:\n", 3),
    ("place A\ntrans t\n  in A:x\n", 3),
    ("place A\ntrans t\ntrans t\n", 3),
    ("place A\n  in A\n", 2),
    ("place A\nedge A t\n", 2),
    ("place A init\n", 1),
    ("net a\nnet b\n", 2),
    ("place 9lives\n", 1),
    ("place A\ntrans A\n", 0),
])
def test_parse_errors_carry_line_numbers(text, line):
    assert parse_error_line(text) == line


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_round_trip(name):
    net, q0 = load_fixture(name)
    text = emit_net(net, q0)
    again, marking = parse_net(text)
    assert again == net
    assert marking == q0
    assert emit_net(again, marking) == text


def test_load_net(tmp_path):
    path = tmp_path / "tiny.net"
    path.write_text(TINY, encoding="utf-8")
    source = load_net(path)
    assert source.path == str(path)
    assert source.text == TINY
    assert source.marking == (3, 0)


def test_parse_assignments(tiny):
    net, q0 = tiny
    assert parse_assignments(net, "B=4") == (0, 4)
    assert parse_assignments(net, "B=4", base=q0) == (3, 4)
    assert parse_assignments(net, "") == (0, 0)
    with pytest.raises(NetParseError):
        parse_assignments(net, "C=1")
    with pytest.raises(NetParseError):
        parse_assignments(net, "A")
    with pytest.raises(NetParseError):
        parse_assignments(net, "A=-1")


def test_parse_grid():
    assert parse_grid("k=0..2, x=1|3, z=4") == {"k": [0, 1, 2], "x": [1, 3],
                                                 "z": [4]}
    for text in ("k=2..1", "k=1,k=2", "=1", "k"):
        with pytest.raises(NetParseError):
            parse_grid(text)


def test_parse_generators(mutex):
    net, _ = mutex
    gens = parse_generators(net, "sem B E S\nf1 A:1 B:1  # program 1\n")
    assert gens.labels == ("sem", "f1")
    assert gens.member("sem").weights == (0, 1, 0, 1, 1)
    assert gens.semiring is Semiring.Qplus
    assert parse_generators(net, "f1 A B", Semiring.N).semiring is Semiring.N


def test_parse_generators_errors(mutex):
    net, _ = mutex
    with pytest.raises(NotASemiflowError):
        parse_generators(net, "g A\n")
    with pytest.raises(NetParseError) as info:
        parse_generators(net, "g A B\ng D E\n")
    assert info.value.line == 2
    with pytest.raises(NetParseError) as info:
        parse_generators(net, "g\n")
    assert info.value.line == 0
    with pytest.raises(NetParseError):
        parse_generators(net, "g Q:1\n")
