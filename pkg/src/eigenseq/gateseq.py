"""Eigenframe map and the iterated sequence U_{k+1} = F(U_k).

The frame of a unitary U is the unitary whose columns are phase-fixed
eigenvectors of U, one orthonormal Gram-Schmidt basis per eigenspace,
sorted by the lexicographic magnitude/argument ordering :func:`compare_lex`.
"""
import enum
import functools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import eig
from .complexmat import (
    DEFAULT_TOL,
    as_matrix,
    hs_distance,
    identity,
    is_hermitian,
    phase_min_distance,
    require_unitary,
    unitarity_residual,
)
from .errors import DegenerateInitialError, EigenseqError, InputError, NotUnitaryError, OrderingError


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def compare_lex(x, y, cfg=DEFAULT_TOL):
    """Compare two vectors under the eigenframe ordering.

    At the first index where the entries differ (by more than
    ``cfg.eps_cmp``), the vector with the larger magnitude comes first;
    on equal magnitudes the smaller argument, taken in (-pi, pi], comes
    first.
    """
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise InputError(f"cannot compare vectors of lengths {x.shape} and {y.shape}")
    eps = cfg.eps_cmp
    diff = np.nonzero(np.abs(x - y) > eps)[0]
    if diff.size == 0:
        return Order.EQUAL
    u = diff[0]
    ax, ay = abs(x[u]), abs(y[u])
    if ax > ay + eps:
        return Order.LESS
    if ay > ax + eps:
        return Order.GREATER
    return Order.LESS if _arg(x[u], eps) < _arg(y[u], eps) else Order.GREATER


def _arg(z, eps):
    """Argument in (-pi, pi]; round-off just below the negative real axis maps to pi."""
    a = float(np.angle(z))
    if a < 0 and abs(z.imag) <= eps and z.real < 0:
        return float(np.pi)
    return a


def phase_fix(x, cfg=DEFAULT_TOL):
    """Rotate `x` so its first entry of magnitude > eps_zero is real positive."""
    x = np.asarray(x, dtype=np.complex128)
    big = np.nonzero(np.abs(x) > cfg.eps_zero)[0]
    if big.size == 0:
        raise EigenseqError("cannot phase-fix a vector with no entry above eps_zero")
    lead = x[big[0]]
    if lead.imag == 0 and lead.real > 0:
        return x.copy()
    y = x * (np.conj(lead) / abs(lead))
    y[big[0]] = abs(lead)
    return y


@dataclass(frozen=True)
class Eigenframe:
    """Output of the frame map.

    ``columns`` is the frame matrix itself. ``phases[j]`` is the eigenphase
    (or real eigenvalue, for a hermitian source) belonging to column j, and
    ``permutation[j]`` is the pre-sort index of column j, where pre-sort
    order is eigenspaces by ascending phase, Gram-Schmidt order within each.
    """

    columns: np.ndarray
    phases: np.ndarray
    permutation: tuple
    unitary_source: bool = True

    @property
    def source_dim(self):
        return self.columns.shape[0]

    def eigenvalues(self):
        if self.unitary_source:
            return np.exp(1j * self.phases)
        return self.phases.astype(np.complex128)


def _source_kind(u, kind, cfg):
    if kind == "unitary":
        require_unitary(u, "u", cfg.eps_unitary)
        return True
    if kind == "hermitian":
        if not is_hermitian(u, cfg.eps_unitary * max(1.0, np.linalg.norm(u))):
            raise EigenseqError("matrix is not hermitian")
        return False
    if kind != "auto":
        raise InputError(f"unknown source kind {kind!r}")
    if unitarity_residual(u) <= cfg.eps_unitary:
        return True
    if is_hermitian(u, cfg.eps_unitary * max(1.0, np.linalg.norm(u))):
        return False
    raise NotUnitaryError(
        f"frame map needs a unitary (or hermitian) matrix; unitarity residual is {unitarity_residual(u):.3e}"
    )


def build_frame(u, cfg=DEFAULT_TOL, kind="auto"):
    """Apply the frame map to `u`.

    ``kind`` selects the spectrum convention: ``"unitary"`` (eigenphases in
    [0, 2pi)), ``"hermitian"`` (real eigenvalues), or ``"auto"``, which
    prefers unitary and falls back to hermitian.
    """
    u = as_matrix(u, "u")
    unitary_source = _source_kind(u, kind, cfg)
    clusters = eig.spectral_clusters(u, unitary_source, cfg)

    vectors, phases = [], []
    for c in clusters:
        for v in eig.gram_schmidt_projected(c, cfg):
            vectors.append(phase_fix(v, cfg))
            phases.append(c.phase)

    key = functools.cmp_to_key(lambda i, j: int(compare_lex(vectors[i], vectors[j], cfg)))
    perm = sorted(range(len(vectors)), key=key)
    for a, b in zip(perm, perm[1:]):
        if compare_lex(vectors[a], vectors[b], cfg) != Order.LESS:
            raise OrderingError("two frame columns compare equal; tolerances are too loose for this matrix")

    cols = np.column_stack([vectors[i] for i in perm])
    return Eigenframe(cols, np.array([phases[i] for i in perm], dtype=float), tuple(perm), unitary_source)


def frame_map(u, cfg=DEFAULT_TOL):
    return build_frame(u, cfg).columns


@dataclass(frozen=True)
class SequenceState:
    k: int
    u: np.ndarray
    frame: Eigenframe
    hs_dist_prev: Optional[float] = None
    d_prev: Optional[float] = None


@dataclass(frozen=True)
class ConvergenceReport:
    converged: bool
    steps: int
    final_distance: float
    limit: np.ndarray
    reason: str  # "distance-below-tol" | "fixed-point" | "max-iterations"


def iterate_sequence(u0, max_k, cfg=DEFAULT_TOL):
    """Iterate the frame map from `u0`.

    Stops when ``|U_{k+1} - U_k| <= eps_conv`` (``"fixed-point"`` if the two
    iterates agree to eps_zero, ``"distance-below-tol"`` otherwise) or after
    `max_k` applications of the map. Every iterate is kept; the last one
    carries its own frame, so the trace holds ``steps + 1`` states.
    """
    u = as_matrix(u0, "u0")
    if max_k < 1:
        raise InputError("max_k must be >= 1")
    require_unitary(u, "u0", cfg.eps_unitary)
    n = u.shape[0]
    if phase_min_distance(u, identity(n), cfg.eps_unitary) <= cfg.eps_conv:
        raise DegenerateInitialError("initial matrix is a global phase of identity, F_n degenerates to identity")

    states = [SequenceState(0, u, build_frame(u, cfg, kind="unitary"))]
    reason = "max-iterations"
    dist = float("nan")
    for k in range(1, max_k + 1):
        prev = states[-1]
        nxt = prev.frame.columns
        dist = hs_distance(nxt, prev.u)
        d = phase_min_distance(nxt, prev.u, cfg.eps_unitary)
        states.append(SequenceState(k, nxt, build_frame(nxt, cfg, kind="unitary"), dist, d))
        if dist <= cfg.eps_conv:
            reason = "fixed-point" if dist <= cfg.eps_zero else "distance-below-tol"
            break

    converged = reason != "max-iterations"
    return states, ConvergenceReport(converged, len(states) - 1, dist, states[-1].u, reason)


def closed_form_step_2x2(a, b):
    """Frame of [[a, b], [b, -a]] for real a, b with a^2 + b^2 = 1, b != 0.

    Written out branch by branch (a > 0, a < 0, a == 0) so it can serve as
    an independent check on :func:`build_frame`.
    """
    if abs(a * a + b * b - 1.0) > 1e-12:
        raise InputError(f"a^2 + b^2 = {a * a + b * b!r}, expected 1")
    if b == 0:
        raise InputError("b = 0: the matrix is already diagonal")
    sb = 1.0 if b > 0 else -1.0
    if a > 0:
        p, q = np.sqrt((1 + a) / 2), np.sqrt((1 - a) / 2)
        m = [[p, q], [sb * q, -sb * p]]
    elif a < 0:
        p, q = np.sqrt((1 - a) / 2), np.sqrt((1 + a) / 2)
        m = [[p, q], [-sb * q, sb * p]]
    else:
        r = 1 / np.sqrt(2)
        m = [[r, r], [r, -r]]
    return np.array(m, dtype=np.complex128)


def reflection_2x2(a, b_sign=1):
    """The matrix [[a, b], [b, -a]] with b = b_sign * sqrt(1 - a^2)."""
    b = b_sign * np.sqrt(1.0 - a * a)
    return np.array([[a, b], [b, -a]], dtype=np.complex128)


def frame_residuals(u, frame):
    """Largest eigen-equation residual |U f_j - lambda_j f_j| over the columns."""
    u = as_matrix(u)
    lam = frame.eigenvalues()
    r = u @ frame.columns - frame.columns * lam[None, :]
    return float(np.max(np.linalg.norm(r, axis=0)))

