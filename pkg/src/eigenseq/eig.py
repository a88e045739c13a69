"""Eigendecomposition of normal matrices and eigenspace projectors.

Everything downstream of :func:`spectral_clusters` depends only on the
eigenspace projectors, never on the eigensolver's ordering, phases or the
rotation it picks inside a degenerate eigenspace.
"""
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .complexmat import DEFAULT_TOL, adjoint, as_matrix
from .errors import ClusteringError, EigenseqError, NotNormalError

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class EigenPair:
    value: complex
    vector: np.ndarray


@dataclass(frozen=True)
class EigenCluster:
    """One eigenspace.

    ``phase`` is the eigenphase in [0, 2pi) for unitary sources and the
    (real) eigenvalue itself for hermitian sources. ``basis`` holds the
    orthonormal eigenvectors as columns.
    """

    phase: float
    multiplicity: int
    basis: np.ndarray
    projector: np.ndarray
    unitary_source: bool = True

    @property
    def eigenvalue(self):
        if self.unitary_source:
            return complex(np.exp(1j * self.phase))
        return complex(self.phase)


def normality_residual(a):
    a = np.asarray(a)
    ah = adjoint(a)
    return float(np.linalg.norm(a @ ah - ah @ a, "fro"))


def eig_normal(a, eps=1e-9):
    """Eigenpairs of a normal matrix with orthonormal eigenvectors.

    Hermitian input goes through ``eigh``; anything else through the complex
    Schur form, whose triangular factor is diagonal for a normal matrix.
    """
    a = as_matrix(a)
    scale = max(1.0, float(np.linalg.norm(a, "fro")))
    res = normality_residual(a)
    if res > eps * scale * scale:
        raise NotNormalError(f"matrix is not normal (|AA* - A*A| = {res:.3e})")

    if np.linalg.norm(a - adjoint(a), "fro") <= 1e-14 * scale:
        w, z = np.linalg.eigh((a + adjoint(a)) / 2)
        values = w.astype(np.complex128)
    else:
        t, z = scipy.linalg.schur(a, output="complex")
        values = np.diag(t).copy()

    pairs = []
    for j in range(a.shape[0]):
        v = z[:, j]
        r = np.linalg.norm(a @ v - values[j] * v)
        if r > eps * scale:
            raise EigenseqError(f"eigenpair residual {r:.3e} exceeds {eps * scale:.1e}")
        pairs.append(EigenPair(complex(values[j]), v))
    return pairs


def _circular_mean(angles):
    z = np.mean(np.exp(1j * np.asarray(angles)))
    return float(np.angle(z)) % TWO_PI


def _group_sorted(keys, radius, circular):
    """Single-linkage groups of indices into the ascending array `keys`."""
    m = len(keys)
    if m == 0:
        return []
    groups = [[0]]
    for i in range(1, m):
        if keys[i] - keys[i - 1] <= radius:
            groups[-1].append(i)
        else:
            groups.append([i])
    if circular and len(groups) > 1 and keys[0] + TWO_PI - keys[-1] <= radius:
        groups[0] = groups.pop() + groups[0]
    return groups


def cluster_eigenvalues(pairs, unitary_source=True, cfg=DEFAULT_TOL):
    """Group eigenpairs into eigenspaces and build their projectors.

    Unitary sources are grouped by circular distance between eigenphases,
    hermitian sources by distance between real eigenvalues, both with
    single linkage at radius ``cfg.eps_cluster``. Clusters come back sorted
    by representative phase (or value).
    """
    if not pairs:
        return []
    radius = cfg.eps_cluster
    values = np.array([p.value for p in pairs])
    if unitary_source:
        keys = np.angle(values) % TWO_PI
    else:
        keys = values.real
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    groups = _group_sorted(sorted_keys, radius, unitary_source)

    clusters = []
    for g in groups:
        members = order[g]
        member_keys = keys[members]
        if unitary_source:
            rep = _circular_mean(member_keys)
            spread = np.abs(np.angle(np.exp(1j * (member_keys - rep))))
            # eigenvalue 1 must have phase 0, not 2pi - tiny
            if TWO_PI - rep <= radius:
                rep = 0.0
        else:
            rep = float(np.mean(member_keys))
            spread = np.abs(member_keys - rep)
        if 2 * spread.max() > 10 * radius:
            raise ClusteringError(
                f"near-coincident eigenvalues chain over {2 * spread.max():.3e} "
                f"(> 10 * eps_cluster = {10 * radius:.1e}); clustering is ill-conditioned"
            )
        vecs = np.column_stack([pairs[i].vector for i in members])
        q, _ = np.linalg.qr(vecs)
        projector = q @ adjoint(q)
        projector = (projector + adjoint(projector)) / 2
        clusters.append(EigenCluster(rep, len(members), q, projector, unitary_source))

    clusters.sort(key=lambda c: c.phase)
    return clusters


def spectral_clusters(a, unitary_source=True, cfg=DEFAULT_TOL):
    return cluster_eigenvalues(eig_normal(a), unitary_source, cfg)


def gram_schmidt_projected(cluster, cfg=DEFAULT_TOL):
    """Orthonormal eigenbasis from the projected standard basis.

    Modified Gram-Schmidt (with one re-orthogonalisation pass) over the
    columns ``P e_1, ..., P e_n`` of the cluster projector, in index order,
    discarding any vector whose residual norm is <= ``cfg.eps_zero``.
    The result depends on the projector alone.
    """
    p = cluster.projector
    n = p.shape[0]
    out = []
    for j in range(n):
        w = p[:, j].copy()
        for _ in range(2):
            for q in out:
                w -= np.vdot(q, w) * q
        nrm = np.linalg.norm(w)
        if nrm <= cfg.eps_zero:
            continue
        out.append(w / nrm)
    if len(out) != cluster.multiplicity:
        raise EigenseqError(
            f"Gram-Schmidt produced {len(out)} vectors for an eigenspace of "
            f"multiplicity {cluster.multiplicity}; projector or eps_zero is inconsistent"
        )
    return out


def clusters_to_dict(clusters):
    """JSON-ready description of a spectrum (for ``--emit spectra``)."""
    return [
        {
            "phase": c.phase,
            "multiplicity": c.multiplicity,
            "basis": [[[float(z.real), float(z.imag)] for z in c.basis[:, k]] for k in range(c.multiplicity)],
        }
        for c in clusters
    ]
