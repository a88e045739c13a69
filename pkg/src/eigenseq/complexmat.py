"""Dense complex matrices and Hilbert-Schmidt geometry.

Matrices are plain ``numpy`` arrays of dtype ``complex128`` with shape
``(n, n)``. :func:`as_matrix` is the single entry point that validates
shape and finiteness; everything else assumes its output.
"""
from dataclasses import dataclass, fields

import numpy as np

from .errors import DimensionError, InputError, NotUnitaryError


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical tolerances shared by every module.

    eps_cluster is an angle in radians for unitary spectra and an absolute
    eigenvalue gap for hermitian ones.
    """

    eps_unitary: float = 1e-10
    eps_zero: float = 1e-10
    eps_cluster: float = 1e-8
    eps_cmp: float = 1e-9
    eps_conv: float = 1e-8

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (0.0 < v < 1e-2):
                raise InputError(f"{f.name}={v!r} must lie in (0, 1e-2)")

    def replace(self, **overrides):
        kw = {f.name: getattr(self, f.name) for f in fields(self)}
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return ToleranceConfig(**kw)


DEFAULT_TOL = ToleranceConfig()


def as_matrix(a, name="matrix"):
    """Return `a` as a square finite complex128 array, or raise."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionError(f"{name} must be a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InputError(f"{name} has non-finite entries")
    return m


def _check_same_dim(a, b):
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")


def identity(n):
    return np.eye(n, dtype=np.complex128)


def adjoint(a):
    return np.conj(np.asarray(a)).T


def hs_inner(a, b):
    """Hilbert-Schmidt inner product tr(a b*)."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    _check_same_dim(a, b)
    # tr(a b*) = sum_ij a_ij conj(b_ij)
    return complex(np.vdot(b, a))


def hs_norm(a):
    """sqrt(tr(a a*)), i.e. the Frobenius norm."""
    return float(np.linalg.norm(as_matrix(a), "fro"))


def hs_distance(a, b):
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    _check_same_dim(a, b)
    return float(np.linalg.norm(a - b, "fro"))


def unitarity_residual(a):
    a = np.asarray(a)
    return float(np.linalg.norm(a @ adjoint(a) - np.eye(a.shape[0]), "fro"))


def is_unitary(a, eps=DEFAULT_TOL.eps_unitary):
    return unitarity_residual(as_matrix(a)) <= eps


def is_hermitian(a, eps=DEFAULT_TOL.eps_unitary):
    a = as_matrix(a)
    return float(np.linalg.norm(a - adjoint(a), "fro")) <= eps


def require_unitary(a, name, eps):
    r = unitarity_residual(a)
    if r > eps:
        raise NotUnitaryError(f"{name} is not unitary (residual |{name}{name}* - I| = {r:.3e} > {eps:.1e})")


def phase_min_distance(u, v, eps=DEFAULT_TOL.eps_unitary):
    """Global-phase-invariant distance between two unitaries.

    Returns ``min_phi |e^{i phi} u - v| / sqrt(2n)``, which equals
    ``sqrt(2n - 2|tr(u v*)|) / sqrt(2n)``. The result lies in [0, 1].

    The minimiser is ``e^{i phi} = conj(t)/|t|`` with ``t = tr(u v*)``; the
    norm is evaluated there directly because the subtraction ``2n - 2|t|``
    loses half the significant digits when u and v are phase-equivalent.
    """
    u = as_matrix(u, "u")
    v = as_matrix(v, "v")
    _check_same_dim(u, v)
    require_unitary(u, "u", eps)
    require_unitary(v, "v", eps)
    n = u.shape[0]
    t = np.vdot(v, u)
    rot = np.conj(t) / abs(t) if abs(t) > 0 else 1.0
    d = np.linalg.norm(rot * u - v, "fro") / np.sqrt(2 * n)
    return float(min(d, 1.0))
