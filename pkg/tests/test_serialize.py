import csv
import io
import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from reference import SIGMA_X

from eigenseq import serialize
from eigenseq.errors import InputError
from eigenseq.gateseq import iterate_sequence

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


def test_identity_format():
    assert json.loads(serialize.matrix_to_json(np.eye(2))) == {
        "n": 2, "entries": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.tuples(finite, finite), min_size=n * n, max_size=n * n)))
def test_round_trip_bit_exact(entries):
    n = int(round(len(entries) ** 0.5))
    m = np.array([complex(r, i) for r, i in entries]).reshape(n, n)
    back = serialize.matrix_from_json(serialize.matrix_to_json(m))
    assert back.tobytes() == m.astype(np.complex128).tobytes()


@pytest.mark.parametrize("text", [
    "not json",
    '{"n": 2}',
    '{"n": 0, "entries": []}',
    '{"n": 2, "entries": [[[1, 0], [0, 0]]]}',
    '{"n": 1, "entries": [[[1]]]}',
    '{"n": 1, "entries": [[["a", 0]]]}',
    '{"n": 1, "entries": [[[true, 0]]]}',
    '{"n": 1, "entries": [[[NaN, 0]]]}',
    '{"n": true, "entries": [[[1, 0]]]}',
])
def test_malformed(text):
    with pytest.raises(InputError):
        serialize.matrix_from_json(text)


def test_trace_csv_layout():
    states, _ = iterate_sequence(SIGMA_X, 2)
    rows = list(csv.reader(io.StringIO(serialize.trace_to_csv(states))))
    assert rows[0][:5] == ["k", "hs_dist_prev", "d_prev", "re_u1_1", "im_u1_1"]
    assert len(rows[0]) == 3 + 2 * 4
    assert rows[1][:3] == ["0", "", ""]
    assert [float(x) for x in rows[1][3:]] == [0, 0, 1, 0, 1, 0, 0, 0]
    assert float(rows[2][1]) == states[1].hs_dist_prev
    assert len(rows) == 1 + len(states)


def test_state_json():
    states, rep = iterate_sequence(SIGMA_X, 2)
    obj = serialize.state_to_obj(states[1], {"extra": 1})
    assert obj["k"] == 1 and obj["extra"] == 1
    assert np.array_equal(serialize.matrix_from_obj(obj["u"]), states[1].u)
    r = serialize.report_to_obj(rep)
    assert r["reason"] == "max-iterations" and r["steps"] == 2
