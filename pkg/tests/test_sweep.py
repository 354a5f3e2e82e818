import pytest

from SemiflowNet.reachability import expected_verdicts, parameter_sweep


def row_for(rows, **params):
    return next(r for r in rows if all(r.params[k] == v
                                       for k, v in params.items()))


def test_mutex_param_closed_form():
    grid = {"k": range(3), "l": range(3), "x": range(1, 4),
            "y": range(1, 4), "z": range(7)}
    rows = parameter_sweep("mutex_param", grid)
    assert len(rows) == 3 * 3 * 3 * 3 * 7
    for row in rows:
        assert row.matches is True, row
        k, l, x, y, z = (row.params[n] for n in "klxyz")
        both = row.live and row.mutual_exclusion
        assert both == (k > 0 and l > 0 and max(x, y) <= z <= x + y - 1)


@pytest.mark.parametrize("params, live, exclusion", [
    ({"k": 2, "l": 2, "x": 1, "y": 1, "z": 1}, True, True),
    ({"k": 1, "l": 1, "x": 1, "y": 1, "z": 2}, True, False),
    ({"k": 0, "l": 1, "x": 1, "y": 1, "z": 1}, False, True),
    ({"k": 1, "l": 1, "x": 2, "y": 1, "z": 1}, False, True),
])
def test_mutex_param_rows(params, live, exclusion):
    grid = {name: [value] for name, value in params.items()}
    row, = parameter_sweep("mutex_param", grid)
    assert row.live is live
    assert row.mutual_exclusion is exclusion
    assert not row.truncated


def test_tiny_closed_form():
    rows = parameter_sweep("tinyk", {"k": [2], "a0": range(9),
                                     "b0": range(4)})
    for row in rows:
        tokens = row.params["a0"] + 2 * row.params["b0"]
        assert row.live == (tokens % 2 == 1 and tokens > 2)
        assert row.mutual_exclusion is None


@pytest.mark.parametrize("k", [1, 3, 4])
def test_tinyk_closed_form(k):
    rows = parameter_sweep("tinyk", {"k": [k], "a0": range(10),
                                     "b0": range(3)})
    assert all(row.matches for row in rows)


def test_tinyk_rows():
    row, = parameter_sweep("tinyk", {"k": [2], "a0": [3], "b0": [0]})
    assert row.live is True
    row, = parameter_sweep("tinyk", {"k": [3], "a0": [3], "b0": [0]})
    assert row.live is False


def test_mutex3_closed_form():
    grid = {"k": range(3), "l": range(3), "x": [1, 2], "y": [1, 2],
            "z": range(5)}
    assert all(row.matches for row in parameter_sweep("mutex3", grid))


def test_truncated_rows_are_flagged():
    rows = parameter_sweep("mutex_param", {"k": [3], "l": [3], "x": [1],
                                           "y": [1], "z": [2]}, max_states=4)
    assert rows[0].truncated
    assert rows[0].matches is None
    assert rows[0].states == 4


def test_sweep_argument_checks():
    with pytest.raises(ValueError):
        parameter_sweep("telecom", {})
    with pytest.raises(ValueError):
        parameter_sweep("tinyk", {"k": [2], "a0": [3]})
    with pytest.raises(ValueError):
        parameter_sweep("tinyk", {"k": [2], "a0": [3], "b0": [0], "z": [1]})
    with pytest.raises(ValueError):
        expected_verdicts("telecom", {})


def test_expected_verdicts():
    assert expected_verdicts("mutex_param", dict(k=1, l=1, x=1, y=2, z=2)) \
        == {"live": True, "mutual_exclusion": True}
    assert expected_verdicts("tinyk", dict(k=3, a0=4, b0=0)) == \
        {"live": True, "mutual_exclusion": None}
