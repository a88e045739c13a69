import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import random_unitary
from reference import HADAMARD, SIGMA_X, SIGMA_Z

from eigenseq import compose
from eigenseq.complexmat import hs_distance, identity, phase_min_distance, unitarity_residual
from eigenseq.compose import (
    CompositionKind,
    check_distributivity,
    direct_sum,
    gate,
    kronecker,
    so11_boost,
    star,
)
from eigenseq.errors import DimensionError, InputError
from eigenseq.gateseq import build_frame
from eigenseq.hamcay import cayley_rational

seeds = st.integers(0, 2**32 - 1)


class TestProducts:
    def test_kron_identity(self):
        assert np.array_equal(kronecker(identity(2), identity(2)), identity(4))

    def test_kron_block_diagonal(self):
        expected = np.zeros((4, 4))
        expected[:2, :2] = expected[2:, 2:] = [[0, 1], [1, 0]]
        assert np.array_equal(kronecker(identity(2), SIGMA_X), expected)
        assert not np.array_equal(kronecker(SIGMA_X, identity(2)), expected)

    def test_direct_sum_blocks(self):
        m = direct_sum(HADAMARD, identity(1), SIGMA_Z)
        assert m.shape == (5, 5)
        assert np.array_equal(m[:2, :2], HADAMARD) and m[2, 2] == 1 and np.array_equal(m[3:, 3:], SIGMA_Z)
        assert np.count_nonzero(m) == 4 + 1 + 2

    def test_star_layout(self):
        expected = np.array([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, -1, 0], [1, 0, 0, 0]])
        assert np.array_equal(star(SIGMA_X, SIGMA_Z), expected)
        assert np.array_equal(star(identity(2), identity(2)), identity(4))

    def test_star_general_centre(self):
        a = np.array([[1, 2], [3, 4]])
        b = np.arange(9).reshape(3, 3) + 10
        m = star(a, b)
        assert m.shape == (5, 5)
        assert (m[0, 0], m[0, 4], m[4, 0], m[4, 4]) == (1, 2, 3, 4)
        assert np.array_equal(m[1:4, 1:4], b)

    def test_star_rejects_non_2x2(self):
        with pytest.raises(DimensionError):
            star(identity(3), identity(2))

    @settings(max_examples=200, deadline=None)
    @given(seeds, st.integers(1, 4))
    def test_star_identities(self, seed, n):
        rng = np.random.default_rng(seed)
        a, b = random_unitary(rng, 2), random_unitary(rng, n)
        m = star(a, b)
        assert abs(np.linalg.det(m) - np.linalg.det(a) * np.linalg.det(b)) <= 1e-10
        assert abs(np.trace(m) - np.trace(a) - np.trace(b)) <= 1e-10

    @settings(max_examples=50, deadline=None)
    @given(seeds, st.integers(1, 4), st.integers(1, 4))
    def test_unitarity_closure(self, seed, m, n):
        rng = np.random.default_rng(seed)
        a, b = random_unitary(rng, m), random_unitary(rng, n)
        for out in (kronecker(a, b), direct_sum(a, b), star(random_unitary(rng, 2), b)):
            assert unitarity_residual(out) <= 1e-11


class TestGates:
    def test_phase_zero(self):
        assert np.array_equal(gate("phase", 0.0), identity(2))
        assert np.array_equal(gate("phase:0"), identity(2))

    def test_hadamard(self):
        assert np.array_equal(gate("hadamard"), np.array([[1, 1], [1, -1]]) / math.sqrt(2))

    def test_cnot_family(self):
        cnot = np.eye(4)
        cnot[2:, 2:] = [[0, 1], [1, 0]]
        assert np.array_equal(gate("cnot"), cnot)
        toff = np.eye(8)
        toff[6:, 6:] = [[0, 1], [1, 0]]
        assert np.array_equal(gate("toffoli"), toff)
        fred = np.eye(8)
        fred[1:3, 1:3] = [[0, 1], [1, 0]]
        assert np.array_equal(gate("fredkin"), fred)

    def test_teleport(self):
        factors = compose.teleport_factors()
        assert len(factors) == 8
        x = SIGMA_X
        assert np.array_equal(factors[6], direct_sum(identity(4), x, x))
        prod = factors[7] @ factors[6] @ factors[5] @ factors[4] @ factors[3] @ factors[2] @ factors[1] @ factors[0]
        u = gate("teleport")
        assert np.array_equal(u, prod)
        assert unitarity_residual(u) <= 1e-11

    @pytest.mark.parametrize("name", ["not", "hadamard", "sigmax", "sigmay", "sigmaz", "cnot",
                                      "toffoli", "fredkin", "teleport", "phase:1.7"])
    def test_all_unitary(self, name):
        assert unitarity_residual(gate(name)) <= 1e-12

    @pytest.mark.parametrize("bad", ["nope", "phase", "phase:abc", "hadamard:1"])
    def test_bad_names(self, bad):
        with pytest.raises(InputError):
            gate(bad)


class TestBoost:
    def test_zero(self):
        assert np.array_equal(so11_boost(0), identity(2))

    def test_hermitian_det_one(self):
        b = so11_boost(1.3)
        assert np.array_equal(b, b.conj().T)
        assert np.linalg.det(b) == pytest.approx(1, abs=1e-10)

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0, -0.7])
    def test_frame_is_hadamard(self, alpha):
        assert np.abs(build_frame(so11_boost(alpha)).columns - HADAMARD).max() <= 1e-10

    def test_large_alpha_limit(self):
        # tr(U(a) sigma_x*) = 2 tanh(a), so d = sqrt(1 - tanh(10)) ~ 6.4e-5
        v = cayley_rational(so11_boost(10))
        d = phase_min_distance(v, SIGMA_X)
        assert d < 1e-3
        assert d == pytest.approx(math.sqrt(1 - math.tanh(10)), rel=1e-3)

    @pytest.mark.parametrize("alpha", [301, float("inf"), float("nan")])
    def test_overflow(self, alpha):
        with pytest.raises(InputError):
            so11_boost(alpha)


class TestDistributivity:
    @settings(max_examples=200, deadline=None)
    @given(seeds, st.integers(1, 4), st.integers(1, 4))
    def test_direct_sum(self, seed, m, n):
        rng = np.random.default_rng(seed)
        r = check_distributivity("direct_sum", random_unitary(rng, m), random_unitary(rng, n))
        assert r.kind is CompositionKind.DIRECT_SUM
        assert r.holds and r.residual <= 1e-9

    def test_direct_sum_shared_eigenvalue(self):
        r = check_distributivity(CompositionKind.DIRECT_SUM, np.diag([1, np.exp(1j * math.pi / 3)]), SIGMA_X)
        assert r.holds

    def test_kronecker_sigmax_reports(self):
        r = check_distributivity("kronecker", SIGMA_X, SIGMA_X)
        assert r.residual == pytest.approx(hs_distance(r.lhs, r.rhs))
        assert r.holds == (r.residual <= r.tol)

    def test_star_reports(self):
        r = check_distributivity("star", HADAMARD, SIGMA_X)
        assert r.lhs.shape == (4, 4)
        assert r.holds == (r.residual <= r.tol)
