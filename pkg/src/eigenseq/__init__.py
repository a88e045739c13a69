"""Eigenvector sequences of quantum gates.

Iterate U_{k+1} = F(U_k), where F(U) collects the phase-fixed, ordered
eigenvectors of U as columns; derive Hamilton operators and Cayley
transforms along the way.
"""
from .complexmat import (
    DEFAULT_TOL,
    ToleranceConfig,
    adjoint,
    hs_distance,
    hs_inner,
    hs_norm,
    identity,
    is_hermitian,
    is_unitary,
    phase_min_distance,
)
from .compose import (
    CompositionKind,
    check_distributivity,
    direct_sum,
    gate,
    kronecker,
    so11_boost,
    star,
)
from .eig import EigenCluster, EigenPair, cluster_eigenvalues, eig_normal, gram_schmidt_projected
from .errors import EigenseqError
from .gateseq import (
    ConvergenceReport,
    Eigenframe,
    Order,
    SequenceState,
    build_frame,
    closed_form_step_2x2,
    compare_lex,
    iterate_sequence,
    phase_fix,
)
from .hamcay import cayley_rational, cayley_spectral, hamiltonian_from_frame, unitary_from_hamiltonian

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "ToleranceConfig",
    "adjoint",
    "hs_distance",
    "hs_inner",
    "hs_norm",
    "identity",
    "is_hermitian",
    "is_unitary",
    "phase_min_distance",
    "CompositionKind",
    "check_distributivity",
    "direct_sum",
    "gate",
    "kronecker",
    "so11_boost",
    "star",
    "EigenCluster",
    "EigenPair",
    "cluster_eigenvalues",
    "eig_normal",
    "gram_schmidt_projected",
    "EigenseqError",
    "ConvergenceReport",
    "Eigenframe",
    "Order",
    "SequenceState",
    "build_frame",
    "closed_form_step_2x2",
    "compare_lex",
    "iterate_sequence",
    "phase_fix",
    "cayley_rational",
    "cayley_spectral",
    "hamiltonian_from_frame",
    "unitary_from_hamiltonian",
]
