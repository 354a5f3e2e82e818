"""parser reads and writes the line-oriented text format for marked nets,
and parses the small assignment, grid and generator notations used on
the command line.

    net <name>
    param <name> <nat>
    place <id> [init <nat|param>]
    trans <id>
      in <place>[:<nat|param>] ...
      out <place>[:<nat|param>] ...

An arc without weight has weight 1 and repeated arcs accumulate. '#'
starts a comment. Every error is a NetParseError carrying the 1-based
line number.

Read the documentation in docs/source/netio.rst.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from ..exceptions import NetParseError
from ..net import Marking, Net
from ..semiflows import GeneratingSet, GeneratorKind, Semiflow, Semiring

logger = logging.getLogger(__name__)

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")
_NATURAL = re.compile(r"^[0-9]+$")


@dataclass
class SourceNet:
    """A parsed net together with its source text and resolved
    parameters.
    """

    text: str
    net: Net
    marking: Marking
    params: dict = field(default_factory=dict)
    path: str = None


def _identifier(token, line, kind):
    if not _IDENTIFIER.match(token):
        raise NetParseError(line, "invalid {} identifier '{}'".format(kind,
                                                                       token))
    return token


def _value(token, params, line):
    """A natural literal or the value of a declared parameter."""
    if _NATURAL.match(token):
        return int(token)
    if token.startswith("-") and _NATURAL.match(token[1:]):
        raise NetParseError(line, "negative number {}".format(token))
    if token in params:
        return params[token]
    if _IDENTIFIER.match(token):
        raise NetParseError(line, "unknown parameter '{}'".format(token))
    raise NetParseError(line, "expected a natural number, got '{}'".format(
        token))


def _lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content.split()


def parse_source(text, params=None, path=None):
    """Parses text into a SourceNet; params override declared parameter
    defaults.
    """
    params = dict(params or {})
    name = None
    declared = {}
    places = []
    initial = {}
    transitions = []
    arcs = {}
    current = None

    for line, tokens in _lines(text):
        keyword, args = tokens[0], tokens[1:]
        if keyword == "net":
            if name is not None:
                raise NetParseError(line, "net name declared twice")
            if len(args) != 1:
                raise NetParseError(line, "expected 'net <name>'")
            name = _identifier(args[0], line, "net")
        elif keyword == "param":
            if len(args) != 2:
                raise NetParseError(line, "expected 'param <name> <nat>'")
            pname = _identifier(args[0], line, "parameter")
            if pname in declared:
                raise NetParseError(line, "duplicate parameter '{}'".format(
                    pname))
            default = _value(args[1], {}, line)
            declared[pname] = params.get(pname, default)
        elif keyword == "place":
            if len(args) not in (1, 3) or (len(args) == 3
                                           and args[1] != "init"):
                raise NetParseError(line,
                                    "expected 'place <id> [init <nat>]'")
            place = _identifier(args[0], line, "place")
            if place in initial:
                raise NetParseError(line, "duplicate place '{}'".format(place))
            places.append(place)
            initial[place] = _value(args[2], declared, line) \
                if len(args) == 3 else 0
            current = None
        elif keyword == "trans":
            if len(args) != 1:
                raise NetParseError(line, "expected 'trans <id>'")
            current = _identifier(args[0], line, "transition")
            if current in arcs:
                raise NetParseError(line, "duplicate transition '{}'".format(
                    current))
            transitions.append(current)
            arcs[current] = {"in": [], "out": []}
        elif keyword in ("in", "out"):
            if current is None:
                raise NetParseError(line, "'{}' outside a transition".format(
                    keyword))
            for arc in args:
                place, sep, weight = arc.partition(":")
                value = _value(weight, declared, line) if sep else 1
                arcs[current][keyword].append((place, value, line))
        else:
            raise NetParseError(line, "unknown keyword '{}'".format(keyword))

    unknown = set(params) - set(declared)
    if unknown:
        raise NetParseError(0, "unknown parameter override '{}'".format(
            sorted(unknown)[0]))
    for t in transitions:
        if t in initial:
            raise NetParseError(0, "identifier '{}' names both a place and a "
                                   "transition".format(t))

    index = {p: i for i, p in enumerate(places)}
    pre = [[0] * len(transitions) for _ in places]
    post = [[0] * len(transitions) for _ in places]
    for j, t in enumerate(transitions):
        for direction, matrix in (("in", pre), ("out", post)):
            for place, weight, line in arcs[t][direction]:
                if place not in index:
                    raise NetParseError(line, "unknown place '{}'".format(
                        place))
                matrix[index[place]][j] += weight

    net = Net(places, transitions, pre, post, name=name or "net")
    marking = Marking(initial[p] for p in places)
    logger.debug("parsed net '%s': %d places, %d transitions", net.name,
                 len(places), len(transitions))
    return SourceNet(text, net, marking, declared, path)


def parse_net(text, params=None):
    """Returns (net, initial marking) parsed from text."""
    source = parse_source(text, params)
    return source.net, source.marking


def load_net(path, params=None):
    """Reads and parses the net file at path (UTF-8)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_source(text, params, str(path))


def emit_net(net, q0=None):
    """Canonical text of (net, q0); parsing it back gives the same net and
    marking, and emitting again the same text.
    """
    q0 = net.check_marking(q0 if q0 is not None
                           else [0] * len(net.places))
    lines = ["net {}".format(net.name)]
    for place, tokens in zip(net.places, q0):
        if tokens:
            lines.append("place {} init {}".format(place, tokens))
        else:
            lines.append("place {}".format(place))
    for t in net.transitions:
        lines.append("trans {}".format(t))
        for keyword, vector in (("in", net.pre_vector(t)),
                                ("out", net.post_vector(t))):
            arcs = ["{}:{}".format(p, w) for p, w in zip(net.places, vector)
                    if w]
            if arcs:
                lines.append("  {} {}".format(keyword, " ".join(arcs)))
    return "\n".join(lines) + "\n"


def parse_assignments(net, text, base=None):
    """Parses 'A=3,B=0' into a vector over places; unmentioned places keep
    their value in base (zero by default).
    """
    values = list(base) if base is not None else [0] * len(net.places)
    if len(values) != len(net.places):
        raise NetParseError(1, "base vector does not match the net")
    for item in filter(None, (s.strip() for s in text.split(","))):
        place, sep, value = item.partition("=")
        place = place.strip()
        if not sep:
            raise NetParseError(1, "expected <place>=<nat>, got '{}'".format(
                item))
        if place not in net.places:
            raise NetParseError(1, "unknown place '{}'".format(place))
        values[net.places.index(place)] = _value(value.strip(), {}, 1)
    return tuple(values)


def parse_grid(text):
    """Parses 'k=0..2,x=1|3' into {'k': [0, 1, 2], 'x': [1, 3]}."""
    grid = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, sep, choices = item.partition("=")
        name = name.strip()
        if not sep or not _IDENTIFIER.match(name):
            raise NetParseError(1, "expected <name>=<values>, got '{}'"
                                .format(item))
        values = []
        for choice in choices.split("|"):
            low, dots, high = choice.strip().partition("..")
            low = _value(low.strip(), {}, 1)
            high = _value(high.strip(), {}, 1) if dots else low
            if high < low:
                raise NetParseError(1, "empty range '{}'".format(choice))
            values.extend(range(low, high + 1))
        if name in grid:
            raise NetParseError(1, "parameter '{}' given twice".format(name))
        grid[name] = sorted(set(values))
    return grid


def parse_generators(net, text, semiring=Semiring.Qplus):
    """Parses one generator per line, '<label> <place>:<weight> ...', into
    a user-supplied GeneratingSet checked against net.
    """
    labels = []
    members = []
    for line, tokens in _lines(text):
        label = _identifier(tokens[0], line, "generator")
        if label in labels:
            raise NetParseError(line, "duplicate generator '{}'".format(label))
        vector = [0] * len(net.places)
        for arc in tokens[1:]:
            place, sep, weight = arc.partition(":")
            if place not in net.places:
                raise NetParseError(line, "unknown place '{}'".format(place))
            vector[net.places.index(place)] += \
                _value(weight, {}, line) if sep else 1
        labels.append(label)
        members.append(Semiflow(vector))
    try:
        generating_set = GeneratingSet(semiring, members,
                                       GeneratorKind.user_supplied, labels)
    except ValueError as error:
        raise NetParseError(0, str(error)) from None
    return generating_set.validate(net)
