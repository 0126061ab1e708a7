import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.linalg import logm

from qdistinct.errors import ContractError
from qdistinct.linalg import (DensityMatrix, Spectrum, eig_hermitian, entropy, hs_norm,
                              is_unitary, matrix_function, op_norm, partial_trace,
                              partial_transpose, reduced_from_pure, trace_norm, xlogx,
                              fourier_matrix)

from conftest import random_hermitian, random_state


def cubic_roots_hermitian(a):
    """Eigenvalues of a 3x3 Hermitian matrix from its characteristic polynomial
    (trigonometric form of the cubic formula)."""
    t = np.trace(a).real
    m2 = sum((a[i, i] * a[j, j] - a[i, j] * a[j, i]).real for i, j in ((0, 1), (0, 2), (1, 2)))
    det = np.linalg.det(a).real
    # lambda^3 - t lambda^2 + m2 lambda - det = 0; shift lambda = x + t/3
    p = m2 - t * t / 3
    q = -2 * t**3 / 27 + t * m2 / 3 - det
    r = 2 * math.sqrt(-p / 3)
    phi = math.acos(max(-1.0, min(1.0, 3 * q / (p * r))))
    roots = [r * math.cos((phi - 2 * math.pi * k) / 3) + t / 3 for k in range(3)]
    return np.sort(roots)


def test_eig_trivial():
    w, _ = eig_hermitian(np.eye(2))
    assert np.allclose(w, [1, 1])
    w, _ = eig_hermitian(np.diag([0.3, 0.7]))
    assert np.allclose(w, [0.3, 0.7])


def test_eig_matches_cubic_oracle(rng):
    for _ in range(20):
        a = random_hermitian(rng, 3)
        w, _ = eig_hermitian(a)
        assert np.allclose(w, cubic_roots_hermitian(a), atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**31))
def test_eig_reconstruction(n, seed):
    a = random_hermitian(np.random.default_rng(seed), n)
    w, v = eig_hermitian(a)
    assert np.all(np.diff(w) >= 0)
    err = np.max(np.abs((v * w) @ v.conj().T - a))
    assert err <= 1e-9 * max(np.max(np.abs(a)), 1.0)
    assert is_unitary(v)


def test_matrix_functions():
    assert np.allclose(matrix_function(np.diag([0.25, 0.75]), "sqrt"), np.diag([0.5, math.sqrt(0.75)]))
    assert np.allclose(matrix_function(np.eye(2) / 2, "power", 0.5), np.eye(2) / math.sqrt(2))
    rho = random_state(3, 4)
    assert np.allclose(matrix_function(rho, "log"), logm(rho), atol=1e-10)
    with pytest.raises(ContractError):
        matrix_function(rho, "exp")


def test_xlogx_convention():
    assert np.array_equal(xlogx(np.array([0.0, 1.0])), [0.0, 0.0])
    assert entropy(np.diag([1.0, 0.0])) == 0.0
    assert entropy(np.eye(4) / 4) == pytest.approx(math.log(4))


def test_partial_trace_bell():
    psi = np.array([1, 0, 0, 1]) / math.sqrt(2)
    rho = np.outer(psi, psi)
    assert np.allclose(partial_trace(rho, "B", (2, 2)), np.eye(2) / 2)
    assert np.allclose(partial_trace(rho, "A", (2, 2)), np.eye(2) / 2)


def test_partial_trace_product():
    a, b = random_state(1, 3), random_state(2, 2)
    rho = np.kron(a, b)
    assert np.allclose(partial_trace(rho, "B", (3, 2)), a)
    assert np.allclose(partial_trace(rho, "A", (3, 2)), b)


def test_partial_trace_loop_oracle(rng):
    psi = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    psi /= np.linalg.norm(psi)
    rho = np.outer(psi, psi.conj())
    oracle = np.zeros((3, 3), dtype=complex)
    for i in range(3):
        for k in range(3):
            for j in range(2):
                oracle[i, k] += rho[i * 2 + j, k * 2 + j]
    assert np.allclose(partial_trace(rho, "B", (3, 2)), oracle)
    assert np.allclose(reduced_from_pure(psi, (3, 2)), oracle)
    w = np.linalg.eigvalsh(oracle)
    assert w.min() > -1e-12 and abs(w.sum() - 1) < 1e-12


def test_partial_trace_requires_split():
    with pytest.raises(ContractError):
        partial_trace(np.eye(4) / 4)
    with pytest.raises(ContractError):
        partial_trace(np.eye(4) / 4, dims=(3, 2))


def test_partial_transpose():
    a, b = random_state(4, 2), random_state(5, 3)
    rho = np.kron(a, b)
    pt = partial_transpose(rho, (2, 3))
    assert np.allclose(pt, np.kron(a.T, b))
    assert np.allclose(np.linalg.eigvalsh(pt), np.linalg.eigvalsh(rho))
    psi = np.array([1, 0, 0, 1]) / math.sqrt(2)
    w = np.linalg.eigvalsh(partial_transpose(np.outer(psi, psi), (2, 2)))
    assert np.allclose(w, [-0.5, 0.5, 0.5, 0.5])
    r = random_state(6, 9)
    assert np.trace(partial_transpose(r, (3, 3))).real == pytest.approx(1.0, abs=1e-12)
    assert np.sum(np.linalg.eigvalsh(partial_transpose(DensityMatrix(r, (3, 3))))) == pytest.approx(1.0)


def test_norms():
    d = np.diag([0.5, -0.5])
    assert trace_norm(d) == pytest.approx(1.0)
    assert hs_norm(d) == pytest.approx(math.sqrt(0.5))
    assert op_norm(d) == pytest.approx(0.5)
    z = np.zeros((3, 3))
    assert trace_norm(z) == hs_norm(z) == op_norm(z) == 0.0


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 10), st.integers(0, 2**31))
def test_norm_ordering_and_traceless(n, seed):
    g = random_state(seed, n) - random_state(seed + 1, n)
    w = np.linalg.eigvalsh(g)
    assert abs(w.sum()) < 1e-12
    assert trace_norm(g) >= hs_norm(g) - 1e-12
    assert trace_norm(g) >= op_norm(g) - 1e-12
    assert trace_norm(g) == pytest.approx(w[w > 0].sum() - w[w < 0].sum())


def test_density_matrix_validation():
    DensityMatrix(np.eye(2) / 2)
    with pytest.raises(ContractError):
        DensityMatrix(np.eye(2))
    with pytest.raises(ContractError):
        DensityMatrix(np.array([[0.5, 0.1], [0.2, 0.5]]))
    with pytest.raises(ContractError):
        DensityMatrix(np.diag([1.5, -0.5]))
    with pytest.raises(ContractError):
        DensityMatrix(np.eye(4) / 4, dims=(3, 2))
    assert DensityMatrix(np.eye(4) / 4, dims=(2, 2)).dim == 4


def test_spectrum_rescale():
    s = Spectrum(np.array([0.25, 0.75])).rescaled("by_N", 2)
    assert s.rescale == "by_N" and np.allclose(s.values, [0.5, 1.5])
    with pytest.raises(ContractError):
        s.rescaled("by_N", 2)


def test_fourier_matrix():
    f = fourier_matrix(7)
    assert is_unitary(f)
    assert np.allclose(np.abs(f), 1 / math.sqrt(7))
    assert f[1, 1] == pytest.approx(cmath.exp(2j * math.pi / 7) / math.sqrt(7))
