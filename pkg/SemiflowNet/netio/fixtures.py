"""Shipped example nets and semiflow families.

Each net loader parses a .net file bundled with the package and checks
that the semiflows published for the net are semiflows of the parsed
structure, raising FixtureError otherwise. The STC2 and STC3 families
are only known as vectors; they come with a transition-free net over
their places so they can be used wherever a net is expected.
"""

import logging
from dataclasses import dataclass
from importlib import resources

from ..exceptions import FixtureError
from ..net import Net
from ..semiflows import (GeneratingSet, GeneratorKind, Semiflow, Semiring,
                         is_semiflow, semiflow_from_places)
from .parser import parse_source

logger = logging.getLogger(__name__)


def fixture_text(name):
    """Source text of the shipped fixture name.net."""
    return resources.files(__package__).joinpath("nets").joinpath(
        "{}.net".format(name)).read_text(encoding="utf-8")


def fixture_names():
    return sorted(entry.name[:-4] for entry in
                  resources.files(__package__).joinpath("nets").iterdir()
                  if entry.name.endswith(".net"))


def load_fixture(name, **params):
    """Parses a shipped fixture and validates it; returns (net, q0)."""
    source = parse_source(fixture_text(name), params or None,
                          path="{}.net".format(name))
    validate_fixture(name, source.net, source.params)
    return source.net, source.marking


def published_semiflows(name, net, params):
    """The semiflows known for fixture name, as label -> Semiflow."""
    p = params
    weights = {
        "tiny": {"f": {"A": 1, "B": 2}},
        "tinyk": {"g": {"A": 1, "B": p.get("k")}},
        "mutex": {"f1": {"A": 1, "B": 1}, "f2": {"D": 1, "E": 1},
                  "sem": {"B": 1, "E": 1, "S": 1}},
        "mutex_param": {"f1": {"A": 1, "B": 1}, "f2": {"D": 1, "E": 1},
                        "sem2": {"B": p.get("x"), "E": p.get("y"), "S": 1}},
        "mutex3": {"f1": {"A": 1, "B": 1}, "f2": {"D": 1, "E": 1},
                   "sem2": {"B": p.get("x"), "E": p.get("y"), "S": 1},
                   "turn": {"T1": 1, "T2": 1}},
        "telecom": {
            "f1": {"LA": 1, "CLA": 1, "W": 1, "PU": 1, "S": 1},
            "f2": {"LA": 1, "PU": 1, "F": 1, "CA": 1},
            "f3": {"CLA": 1, "S": 1, "R": 1, "A": 1},
        },
    }
    return {label: semiflow_from_places(net, w)
            for label, w in weights.get(name, {}).items()}


def validate_fixture(name, net, params):
    for label, semiflow in published_semiflows(name, net, params).items():
        if not is_semiflow(net, semiflow.weights):
            raise FixtureError("published semiflow {} = {} is not a semiflow "
                               "of fixture '{}'".format(label,
                                                        semiflow.weights,
                                                        name))
    logger.debug("fixture '%s' validated", name)


##### Tiny net #####
def TinyNet():
    return load_fixture("tiny")


##### Tiny net generalised to k #####
def TinyKNet(k=2, a0=3, b0=0):
    if k < 1:
        raise ValueError("tinyk needs k >= 1")
    return load_fixture("tinyk", k=k, a0=a0, b0=b0)


##### Mutual exclusion with a binary semaphore #####
def MutexNet():
    return load_fixture("mutex")


##### Mutual exclusion with a counting semaphore #####
def MutexParamNet(k=1, l=1, x=1, y=1, z=1):
    return load_fixture("mutex_param", k=k, l=l, x=x, y=y, z=z)


##### Counting semaphore with alternating turns #####
def Mutex3Net(k=2, l=2, x=1, y=2, z=2):
    return load_fixture("mutex3", k=k, l=l, x=x, y=y, z=z)


##### Telephone call #####
def TelecomNet():
    return load_fixture("telecom")


@dataclass(frozen=True)
class VectorFixture:
    """A family of semiflows over the places of a transition-free net,
    with named target vectors to decompose.
    """

    net: Net
    generators: GeneratingSet
    targets: dict


def _vector_fixture(vectors, labels, targets):
    places = ["p{}".format(i + 1) for i in range(len(vectors[0]))]
    net = Net(places, [], [[] for _ in places], [[] for _ in places],
              name="vectors")
    generators = GeneratingSet(Semiring.N, [Semiflow(v) for v in vectors],
                               GeneratorKind.user_supplied, labels)
    return VectorFixture(net, generators,
                         {k: Semiflow(v) for k, v in targets.items()})


##### Non-unique decomposition over N #####
def STC2Vectors():
    return _vector_fixture(
        [(0, 1, 1, 0), (0, 1, 0, 1), (1, 0, 1, 0), (1, 0, 0, 1)],
        ["g1", "g2", "g3", "g4"],
        {"f": (1, 1, 1, 1)})


##### Minimal semiflows without minimal support #####
def STC3Vectors():
    return _vector_fixture(
        [(3, 3, 2, 0, 1), (4, 4, 1, 0, 2), (2, 2, 3, 0, 0), (1, 1, 0, 1, 0),
         (5, 5, 0, 0, 3)],
        ["f1", "f2", "g1", "g2", "g3"],
        {"h": (9, 9, 6, 0, 3)})
