"""JSON and CSV encodings of matrices, frames and sequence traces.

Matrix JSON: ``{"n": 2, "entries": [[[re, im], [re, im]], [[re, im], [re, im]]]}``.
Floats are written with ``repr``, the shortest decimal string that parses
back to the same double, so every matrix round-trips bit for bit.
"""
import csv
import io
import json
import math

import numpy as np

from .complexmat import as_matrix
from .eig import clusters_to_dict
from .errors import InputError


def _num(x):
    x = float(x)
    if not math.isfinite(x):
        raise InputError(f"non-finite value {x!r} cannot be serialized")
    return x


def matrix_to_obj(m):
    m = np.asarray(m)
    return {
        "n": int(m.shape[0]),
        "entries": [[[_num(z.real), _num(z.imag)] for z in row] for row in m],
    }


def vector_to_obj(v):
    return [[_num(z.real), _num(z.imag)] for z in np.asarray(v)]


def matrix_from_obj(obj):
    try:
        n = obj["n"]
        rows = obj["entries"]
    except (TypeError, KeyError):
        raise InputError('matrix JSON needs fields "n" and "entries"') from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(rows, list) or len(rows) != n:
        raise InputError(f'"entries" must hold {n} rows')
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"row {i} must hold {n} entries")
        for j, e in enumerate(row):
            if (
                not isinstance(e, list)
                or len(e) != 2
                or not all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in e)
            ):
                raise InputError(f"entry ({i}, {j}) must be a [re, im] pair of numbers")
            out[i, j] = complex(float(e[0]), float(e[1]))
    return as_matrix(out)


def dumps(obj):
    return json.dumps(obj, allow_nan=False)


def matrix_to_json(m):
    return dumps(matrix_to_obj(m))


def matrix_from_json(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}") from None
    return matrix_from_obj(obj)


def frame_to_obj(frame):
    return {
        "columns": matrix_to_obj(frame.columns),
        "phases": [float(t) for t in frame.phases],
        "permutation": list(frame.permutation),
        "unitary_source": frame.unitary_source,
    }


def state_to_obj(state, extras=None):
    obj = {
        "k": state.k,
        "hs_dist_prev": state.hs_dist_prev,
        "d_prev": state.d_prev,
        "u": matrix_to_obj(state.u),
    }
    if extras:
        obj.update(extras)
    return obj


def report_to_obj(report):
    return {
        "converged": report.converged,
        "steps": report.steps,
        "final_distance": report.final_distance,
        "reason": report.reason,
        "limit": matrix_to_obj(report.limit),
    }


def trace_header(n):
    cols = ["k", "hs_dist_prev", "d_prev"]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cols += [f"re_u{i}_{j}", f"im_u{i}_{j}"]
    return cols


def _cell(x):
    return "" if x is None else repr(float(x))


def trace_rows(states):
    for s in states:
        row = [str(s.k), _cell(s.hs_dist_prev), _cell(s.d_prev)]
        for z in np.asarray(s.u).ravel():
            row += [repr(float(z.real)), repr(float(z.imag))]
        yield row


def trace_to_csv(states):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(trace_header(states[0].u.shape[0]))
    w.writerows(trace_rows(states))
    return buf.getvalue()


def spectrum_to_obj(clusters):
    return clusters_to_dict(clusters)
