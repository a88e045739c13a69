"""Gate constructors and matrix compositions.

Compositions: Kronecker product, direct sum, and the star product of a
2x2 matrix with an n x n matrix (corners from the 2x2, centre block from
the other). :func:`check_distributivity` compares the frame of a composite
with the composite of the frames.
"""
import enum
import functools
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .complexmat import DEFAULT_TOL, as_matrix, hs_distance, identity, require_unitary
from .errors import DimensionError, InputError
from .gateseq import build_frame

SQRT2 = np.sqrt(2.0)


class CompositionKind(str, enum.Enum):
    KRONECKER = "kronecker"
    DIRECT_SUM = "direct_sum"
    STAR = "star"


@dataclass(frozen=True)
class DistributivityReport:
    kind: CompositionKind
    lhs: np.ndarray  # F(A op B)
    rhs: np.ndarray  # F(A) op F(B)
    residual: float
    holds: bool
    tol: float


def kronecker(a, b):
    return np.kron(as_matrix(a, "a"), as_matrix(b, "b"))


def direct_sum(*blocks):
    if not blocks:
        raise InputError("direct_sum needs at least one block")
    return scipy.linalg.block_diag(*[as_matrix(b, "block") for b in blocks]).astype(np.complex128)


def star(a, b):
    """Star product of a 2x2 matrix `a` with an n x n matrix `b`.

    The result is (n+2) x (n+2): a's entries sit on the four corners and b
    fills rows/columns 2..n+1.
    """
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape != (2, 2):
        raise DimensionError(f"star product needs a 2x2 first factor, got {a.shape[0]}x{a.shape[0]}")
    n = b.shape[0]
    out = np.zeros((n + 2, n + 2), dtype=np.complex128)
    out[0, 0], out[0, -1] = a[0, 0], a[0, 1]
    out[-1, 0], out[-1, -1] = a[1, 0], a[1, 1]
    out[1:-1, 1:-1] = b
    return out


COMPOSE = {
    CompositionKind.KRONECKER: kronecker,
    CompositionKind.DIRECT_SUM: direct_sum,
    CompositionKind.STAR: star,
}


def compose(kind, a, b):
    return COMPOSE[CompositionKind(kind)](a, b)


# -- gates -------------------------------------------------------------------

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / SQRT2


def phase_gate(phi):
    return np.array([[1, 0], [0, np.exp(1j * phi)]], dtype=np.complex128)


def cnot():
    return direct_sum(identity(2), SIGMA_X)


def toffoli():
    return direct_sum(identity(6), SIGMA_X)


def fredkin():
    return direct_sum(identity(1), SIGMA_X, identity(5))


def teleport_factors():
    """The eight factors U_1..U_8 of the 3-qubit teleportation circuit, in application order."""
    i2, h, cx, x = identity(2), HADAMARD, cnot(), SIGMA_X
    return [
        np.kron(np.kron(i2, h), i2),
        np.kron(i2, cx),
        np.kron(cx, i2),
        np.kron(np.kron(h, i2), i2),
        np.kron(i2, cx),
        np.kron(np.kron(i2, i2), h),
        direct_sum(identity(4), x, x),
        np.kron(np.kron(i2, i2), h),
    ]


def teleport():
    """U_8 U_7 ... U_1, multiplied left to right."""
    return functools.reduce(np.matmul, reversed(teleport_factors()))


def so11_boost(alpha):
    """[[cosh a, sinh a], [sinh a, cosh a]]: hermitian, det 1, not unitary for a != 0."""
    alpha = float(alpha)
    if not np.isfinite(alpha) or abs(alpha) > 300:
        raise InputError(f"boost parameter {alpha!r} overflows (|alpha| must be <= 300)")
    c, s = np.cosh(alpha), np.sinh(alpha)
    return np.array([[c, s], [s, c]], dtype=np.complex128)


_GATES = {
    "not": lambda: SIGMA_X.copy(),
    "sigmax": lambda: SIGMA_X.copy(),
    "sigmay": lambda: SIGMA_Y.copy(),
    "sigmaz": lambda: SIGMA_Z.copy(),
    "hadamard": lambda: HADAMARD.copy(),
    "cnot": cnot,
    "toffoli": toffoli,
    "fredkin": fredkin,
    "teleport": teleport,
}
_PARAM_GATES = {"phase": phase_gate, "boost": so11_boost}

GATE_NAMES = sorted(_GATES) + sorted(_PARAM_GATES)


def gate(name, *params):
    """Build a named gate. Parametrised gates accept ``"phase:0.5"`` or ``gate("phase", 0.5)``."""
    if ":" in name:
        name, _, arg = name.partition(":")
        try:
            params = (float(arg),) + params
        except ValueError:
            raise InputError(f"bad gate parameter {arg!r}") from None
    name = name.lower()
    if name in _GATES:
        if params:
            raise InputError(f"gate {name!r} takes no parameters")
        return _GATES[name]()
    if name in _PARAM_GATES:
        if len(params) != 1:
            raise InputError(f"gate {name!r} takes exactly one parameter")
        return _PARAM_GATES[name](params[0])
    raise InputError(f"unknown gate {name!r}; known: {', '.join(GATE_NAMES)}")


def check_distributivity(kind, ua, ub, tol=1e-9, cfg=DEFAULT_TOL):
    """Compare F(ua op ub) with F(ua) op F(ub).

    Reports the residual; whether the map distributes is an empirical
    question for kronecker and star, so nothing is asserted here.
    """
    kind = CompositionKind(kind)
    ua = as_matrix(ua, "ua")
    ub = as_matrix(ub, "ub")
    require_unitary(ua, "ua", cfg.eps_unitary)
    require_unitary(ub, "ub", cfg.eps_unitary)
    op = COMPOSE[kind]
    lhs = build_frame(op(ua, ub), cfg, kind="unitary").columns
    rhs = op(build_frame(ua, cfg, kind="unitary").columns, build_frame(ub, cfg, kind="unitary").columns)
    r = hs_distance(lhs, rhs)
    return DistributivityReport(kind, lhs, rhs, r, r <= tol, tol)
