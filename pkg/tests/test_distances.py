import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qdistinct import distances as D
from qdistinct.ensembles import sample_haar_unitary, sample_induced_array
from qdistinct.errors import ContractError

PAULI = [np.array([[0, 1], [1, 0]], complex), np.array([[0, -1j], [1j, 0]]),
         np.array([[1, 0], [0, -1]], complex)]
METRIC_NAMES = ["tr", "hs", "inf", "b", "h", "t"]


def bloch(r):
    return 0.5 * (np.eye(2) + sum(ri * p for ri, p in zip(r, PAULI)))


def pure(v):
    v = np.asarray(v, complex)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


states = st.tuples(st.integers(2, 5), st.integers(1, 6), st.integers(0, 2**31))


def draw(n, k, seed):
    return sample_induced_array(n, k, np.random.default_rng(seed))


@pytest.mark.parametrize("r,s", [((0.3, 0.1, -0.2), (-0.1, 0.5, 0.4)),
                                 ((0, 0, 0.9), (0, 0, -0.9)),
                                 ((0.5, 0.5, 0.5), (0.1, 0, 0))])
def test_qubit_oracles(r, s):
    rho, sigma = bloch(r), bloch(s)
    r, s = np.array(r), np.array(s)
    assert D.trace_distance(rho, sigma) == pytest.approx(np.linalg.norm(r - s) / 2, abs=1e-12)
    assert D.hs_norm_distance(rho, sigma) == pytest.approx(np.linalg.norm(r - s) / math.sqrt(2), abs=1e-12)
    det = lambda v: (1 - v @ v) / 4
    f = 0.5 * (1 + r @ s) + 2 * math.sqrt(det(r) * det(s))
    assert D.fidelity(rho, sigma) == pytest.approx(f, abs=1e-10)


def test_commuting_relative_entropy():
    p = np.array([0.5, 0.3, 0.2])
    q = np.array([0.2, 0.2, 0.6])
    kl = float(np.sum(p * np.log(p / q)))
    assert D.relative_entropy(np.diag(p), np.diag(q)).value == pytest.approx(kl, abs=1e-12)
    assert D.chernoff_q(np.diag(p), np.diag(q), 0.3) == pytest.approx(
        float(np.sum(p**0.3 * q**0.7)), abs=1e-12)


def test_orthogonal_pure_states():
    a, b = pure([1, 0]), pure([0, 1])
    assert D.trace_distance(a, b) == pytest.approx(1.0)
    assert D.hs_distance(a, b) == pytest.approx(1.0)
    assert D.qjsd(a, b) == pytest.approx(math.log(2), abs=1e-12)
    assert D.transmission_distance(a, b) == pytest.approx(math.sqrt(math.log(2)), abs=1e-12)
    assert D.entropic_distance(a, b) == pytest.approx(math.sqrt(math.log(2)), abs=1e-12)
    assert D.bures_distance(a, b) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert D.hellinger_distance(a, b) == pytest.approx(math.sqrt(2), abs=1e-12)
    kl = D.relative_entropy(a, b)
    assert kl.infinite and kl.value == math.inf


def test_pure_state_fidelity():
    u, v = np.array([1, 1j, 0]) / math.sqrt(2), np.array([1, 0, 1]) / math.sqrt(2)
    assert D.fidelity(pure(u), pure(v)) == pytest.approx(abs(np.vdot(u, v)) ** 2, abs=1e-12)


def test_identical_states():
    rho = draw(4, 4, 3)
    for name in METRIC_NAMES + ["e"]:
        assert D.measure(name, rho, rho).value == pytest.approx(0.0, abs=1e-6)
    assert D.root_fidelity(rho, rho) == pytest.approx(1.0, abs=1e-10)
    assert D.relative_entropy(rho, rho).value == pytest.approx(0.0, abs=1e-10)


@given(states, states, states)
@settings(max_examples=40, deadline=None)
def test_triangle_inequality(a, b, c):
    n = a[0]
    x, y, z = draw(n, a[1], a[2]), draw(n, b[1], b[2]), draw(n, c[1], c[2])
    for name in METRIC_NAMES:
        f = D.METRICS[name]
        assert f(x, z) <= f(x, y) + f(y, z) + 1e-9, name
        assert f(x, y) == pytest.approx(f(y, x), abs=1e-9)


@given(states, st.integers(1, 6), st.integers(0, 2**31))
@settings(max_examples=30, deadline=None)
def test_unitary_invariance(a, k2, seed):
    n = a[0]
    x, y = draw(n, a[1], a[2]), draw(n, k2, seed)
    u = sample_haar_unitary(n, np.random.default_rng(seed + 1))
    ux, uy = u @ x @ u.conj().T, u @ y @ u.conj().T
    for name in METRIC_NAMES + ["e", "qjsd", "root-fidelity"]:
        # squares avoid the infinite slope of sqrt at coincident states
        got, want = D.METRICS[name](ux, uy), D.METRICS[name](x, y)
        assert got**2 == pytest.approx(want**2, abs=1e-9), name


@given(states, st.integers(1, 6), st.integers(0, 2**31))
@settings(max_examples=40, deadline=None)
def test_fidelity_inequalities(a, k2, seed):
    n = a[0]
    x, y = draw(n, a[1], a[2]), draw(n, k2, seed)
    d = D.trace_distance(x, y)
    f = D.fidelity(x, y)
    assert 1 - math.sqrt(f) <= d + 1e-9
    assert d <= math.sqrt(max(0.0, 1 - f)) + 1e-9
    q = D.affinity(x, y)
    assert f - 1e-9 <= q <= math.sqrt(f) + 1e-9
    assert D.helstrom_success(x, y) == pytest.approx((1 + d) / 2, abs=1e-10)


def test_chernoff_information():
    x, y = draw(5, 5, 1), draw(5, 5, 2)
    s, q = D.chernoff_information(x, y)
    grid = [D.chernoff_q(x, y, t) for t in np.linspace(0, 1, 201)]
    assert q <= min(grid) + 1e-10
    assert 0 <= s <= 1
    assert D.chernoff_q(x, y, 0.0) == pytest.approx(1.0, abs=1e-10)
    assert q <= D.affinity(x, y) + 1e-12
    with pytest.raises(ContractError):
        D.chernoff_q(x, y, -0.1)


def test_classical_metrics():
    p = np.array([0.5, 0.5, 0.0])
    q = np.array([0.0, 0.5, 0.5])
    assert D.l1_halved(p, q) == pytest.approx(0.5)
    assert D.bhattacharyya(p, q) == pytest.approx(0.5)
    assert D.classical_bures(p, q) == pytest.approx(1.0)
    assert D.classical_bures(p, p) == pytest.approx(0.0)
    # diagonal states reduce to the classical quantities
    assert D.trace_distance(np.diag(p), np.diag(q)) == pytest.approx(D.l1_halved(p, q))
    assert D.root_fidelity(np.diag(p), np.diag(q)) == pytest.approx(D.bhattacharyya(p, q))


def test_errors_and_report():
    with pytest.raises(ContractError):
        D.trace_distance(np.eye(2) / 2, np.eye(3) / 3)
    with pytest.raises(ContractError):
        D.measure("nope", np.eye(2) / 2, np.eye(2) / 2)
    with pytest.raises(ContractError):
        D.l1_halved([1, 0], [1, 0, 0])
    rep = D.measure("tr", pure([1, 0]), np.eye(2) / 2)
    assert rep.value == pytest.approx(0.5) and rep.is_metric
    assert not D.measure("kl", np.eye(2) / 2, np.eye(2) / 2).is_metric
