import itertools

import numpy as np
import pytest

from SemiflowNet.net import Net
from SemiflowNet.netio import (MutexNet, Mutex3Net, MutexParamNet, TelecomNet,
                               TinyKNet, TinyNet)


@pytest.fixture
def tiny():
    return TinyNet()


@pytest.fixture
def mutex():
    return MutexNet()


@pytest.fixture
def telecom():
    return TelecomNet()


@pytest.fixture
def weighted():
    """One transition consuming a + 2b and producing 3c: its minimal
    semiflows are (3,0,1), (0,3,2) and (1,1,1), the last one without a
    minimal support.
    """
    return Net(["a", "b", "c"], ["t"], [[1], [2], [0]], [[0], [0], [3]],
               name="weighted")


@pytest.fixture
def no_semiflow():
    """Single place, single transition consuming 1 and producing 2."""
    return Net(["p"], ["t"], [[1]], [[2]], name="no_semiflow")


@pytest.fixture
def source():
    """Single place fed by a transition without input."""
    return Net(["p"], ["t"], [[0]], [[1]], name="source")


def marked_fixtures():
    return {
        "tiny": TinyNet(),
        "tinyk": TinyKNet(k=3, a0=4, b0=0),
        "mutex": MutexNet(),
        "mutex_param": MutexParamNet(k=2, l=1, x=1, y=2, z=2),
        "mutex3": Mutex3Net(),
        "telecom": TelecomNet(),
    }


@pytest.fixture(params=sorted(marked_fixtures()))
def marked(request):
    return marked_fixtures()[request.param]


def brute_force_minimal_semiflows(net, box=6):
    """<=-minimal nonzero solutions of v.C = 0 with coordinates in
    0..box, by exhaustive enumeration.
    """
    d = len(net.places)
    c = np.array(net.post - net.pre, dtype=np.int64)
    vectors = np.array(list(itertools.product(range(box + 1), repeat=d)),
                       dtype=np.int64)
    if c.shape[1]:
        solutions = vectors[np.all(vectors @ c == 0, axis=1)]
    else:
        solutions = vectors
    solutions = solutions[solutions.sum(axis=1) > 0]
    minimal = []
    for v in solutions:
        below = np.all(solutions <= v, axis=1) & np.any(solutions != v, axis=1)
        if not below.any():
            minimal.append(tuple(int(x) for x in v))
    return set(minimal)
