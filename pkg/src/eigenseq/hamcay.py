"""Hamilton operators and Cayley transforms.

For a frame F with eigenphases theta_j in [0, 2pi):

    H = F diag(-theta) F*             so that U = exp(-i H)
    V = (H - iI)(H + iI)^{-1}         = -F diag((i + theta)/(i - theta)) F*
"""
import numpy as np

from .complexmat import adjoint, as_matrix, identity, is_hermitian
from .errors import EigenseqError, NotHermitianError


def _hermitian_part(a):
    return (a + adjoint(a)) / 2


def _require_hermitian(h, eps):
    scale = max(1.0, float(np.linalg.norm(h, "fro")))
    if not is_hermitian(h, eps * scale):
        r = float(np.linalg.norm(h - adjoint(h), "fro"))
        raise NotHermitianError(f"matrix is not hermitian (|H - H*| = {r:.3e})")


def _require_unitary_frame(frame):
    if not frame.unitary_source:
        raise EigenseqError("Hamilton operators and spectral Cayley transforms need a frame of a unitary matrix")


def hamiltonian_from_frame(frame):
    """F diag(-theta) F*, returned as a hermitian array."""
    _require_unitary_frame(frame)
    f = frame.columns
    h = (f * (-frame.phases)[None, :]) @ adjoint(f)
    return _hermitian_part(h)


def unitary_from_hamiltonian(h, eps=1e-9):
    """exp(-i H), evaluated through the eigendecomposition of H."""
    h = as_matrix(h, "h")
    _require_hermitian(h, eps)
    w, z = np.linalg.eigh(_hermitian_part(h))
    return (z * np.exp(-1j * w)[None, :]) @ adjoint(z)


def cayley_rational(h, eps=1e-9):
    """(H - iI)(H + iI)^{-1}; +1 is never an eigenvalue of the result.

    H - iI and H + iI commute, so the product is obtained by solving
    (H + iI) X = H - iI instead of forming the inverse.
    """
    h = as_matrix(h, "h")
    _require_hermitian(h, eps)
    one = identity(h.shape[0])
    return np.linalg.solve(h + 1j * one, h - 1j * one)


def cayley_spectral(frame):
    """-F diag((i + theta)/(i - theta)) F*."""
    _require_unitary_frame(frame)
    f = frame.columns
    theta = frame.phases
    lam = -(1j + theta) / (1j - theta)
    return (f * lam[None, :]) @ adjoint(f)
