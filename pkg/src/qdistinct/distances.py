"""Distinguishability measures for density matrices and probability vectors.

All entropies use natural logarithms.  Inputs are Hermitian arrays (or
:class:`~qdistinct.linalg.DensityMatrix`); eigenvalues below ``TAU_PSD`` are
treated as zero wherever a square root, power or logarithm is taken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError
from .laws import golden_section_min
from .linalg import (TAU_PSD, MatrixLike, as_array, clip_psd, eig_hermitian, eigvalsh,
                     entropy, power0, xlogx)


def _pair(rho: MatrixLike, sigma: MatrixLike):
    a, b = as_array(rho), as_array(sigma)
    if a.shape != b.shape:
        raise ContractError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a, b


def trace_distance(rho, sigma) -> float:
    a, b = _pair(rho, sigma)
    return 0.5 * float(np.sum(np.abs(eigvalsh(a - b))))


def hs_distance(rho, sigma) -> float:
    """``sqrt(Tr(rho - sigma)^2 / 2)``; orthogonal pure states are at distance 1."""
    a, b = _pair(rho, sigma)
    return float(np.linalg.norm(a - b, "fro") / math.sqrt(2.0))


def hs_norm_distance(rho, sigma) -> float:
    """Plain Frobenius norm ``||rho - sigma||_2`` (no factor 1/2)."""
    a, b = _pair(rho, sigma)
    return float(np.linalg.norm(a - b, "fro"))


def inf_distance(rho, sigma) -> float:
    a, b = _pair(rho, sigma)
    return float(np.max(np.abs(eigvalsh(a - b))))


def _sqrt_psd(a):
    w, v = eig_hermitian(a)
    return (v * np.sqrt(clip_psd(w))) @ v.conj().T


def root_fidelity(rho, sigma) -> float:
    """``Tr |sqrt(rho) sqrt(sigma)|`` from the spectrum of ``sqrt(rho) sigma sqrt(rho)``."""
    a, b = _pair(rho, sigma)
    s = _sqrt_psd(a)
    m = s @ b @ s
    m = (m + m.conj().T) / 2
    val = float(np.sum(np.sqrt(clip_psd(eigvalsh(m)))))
    return min(val, 1.0)


def fidelity(rho, sigma) -> float:
    return root_fidelity(rho, sigma) ** 2


def bures_distance(rho, sigma) -> float:
    return math.sqrt(max(0.0, 2.0 * (1.0 - root_fidelity(rho, sigma))))


def affinity(rho, sigma) -> float:
    """``Tr rho^(1/2) sigma^(1/2)``."""
    return chernoff_q(rho, sigma, 0.5)


def hellinger_distance(rho, sigma) -> float:
    return math.sqrt(max(0.0, 2.0 - 2.0 * affinity(rho, sigma)))


def qjsd(rho, sigma) -> float:
    a, b = _pair(rho, sigma)
    val = entropy((a + b) / 2) - (entropy(a) + entropy(b)) / 2
    return max(val, 0.0)


def transmission_distance(rho, sigma) -> float:
    return math.sqrt(qjsd(rho, sigma))


def binary_entropy(x: float) -> float:
    return float(-np.sum(xlogx(np.array([x, 1.0 - x]))))


def entropic_distance(rho, sigma) -> float:
    f = root_fidelity(rho, sigma)
    return math.sqrt(binary_entropy(0.5 * (1.0 - f)))


@dataclass(frozen=True)
class RelativeEntropy:
    """Value of ``S(rho||sigma)``; ``infinite`` is set when the support of
    ``rho`` is not contained in that of ``sigma`` (``value`` is then ``inf``)."""

    value: float
    infinite: bool = False

    def __float__(self):
        return self.value


def relative_entropy(rho, sigma) -> RelativeEntropy:
    a, b = _pair(rho, sigma)
    wa, va = eig_hermitian(a)
    wb, vb = eig_hermitian(b)
    wa = clip_psd(wa)
    wb = clip_psd(wb)
    # weight of rho on each eigenvector of sigma
    overlap = np.abs(vb.conj().T @ va) ** 2
    weight_on_b = overlap @ wa
    null = wb < TAU_PSD
    if np.any(weight_on_b[null] > TAU_PSD):
        return RelativeEntropy(math.inf, True)
    with np.errstate(divide="ignore"):
        logb = np.where(null, 0.0, np.log(np.where(null, 1.0, wb)))
    val = float(np.sum(xlogx(wa)) - np.dot(weight_on_b, logb))
    return RelativeEntropy(max(val, 0.0))


def chernoff_q(rho, sigma, s: float) -> float:
    """``Tr rho^s sigma^(1-s)``."""
    if not 0 <= s <= 1:
        raise ContractError("s must lie in [0, 1]")
    a, b = _pair(rho, sigma)
    wa, va = eig_hermitian(a)
    wb, vb = eig_hermitian(b)
    overlap = np.abs(va.conj().T @ vb) ** 2
    return float(power0(clip_psd(wa), s) @ overlap @ power0(clip_psd(wb), 1.0 - s))


def chernoff_information(rho, sigma, tol: float = 1e-8):
    """Minimise ``Q_s`` over ``s`` in [0, 1]; returns ``(s*, Q)``.

    A 21-point grid picks the bracket before golden-section refinement.
    """
    a, b = _pair(rho, sigma)
    wa, va = eig_hermitian(a)
    wb, vb = eig_hermitian(b)
    wa, wb = clip_psd(wa), clip_psd(wb)
    overlap = np.abs(va.conj().T @ vb) ** 2

    def q(s):
        return float(power0(wa, s) @ overlap @ power0(wb, 1.0 - s))

    grid = np.linspace(0.0, 1.0, 21)
    vals = [q(s) for s in grid]
    i = int(np.argmin(vals))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, 20)]
    s_star, q_min = golden_section_min(q, lo, hi, tol)
    return s_star, q_min


def helstrom_success(rho, sigma, prior: float = 0.5) -> float:
    """Success probability of the projective measurement on the positive
    part of ``prior * rho - (1 - prior) * sigma``."""
    a, b = _pair(rho, sigma)
    w, v = eig_hermitian(prior * a - (1 - prior) * b)
    pos = v[:, w > 0]
    proj = pos @ pos.conj().T
    p = prior * np.trace(proj @ a).real + (1 - prior) * (1 - np.trace(proj @ b).real)
    return float(p)


# -- classical probability vectors -----------------------------------------

def _probs(p, q):
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise ContractError(f"dimension mismatch: {p.shape} vs {q.shape}")
    return p, q


def l1_halved(p, q) -> float:
    p, q = _probs(p, q)
    return 0.5 * float(np.sum(np.abs(p - q)))


def bhattacharyya(p, q) -> float:
    p, q = _probs(p, q)
    return float(np.sum(np.sqrt(p * q)))


def classical_bures(p, q) -> float:
    return math.sqrt(max(0.0, 2.0 * (1.0 - bhattacharyya(p, q))))


METRICS = {
    "tr": trace_distance,
    "hs": hs_distance,
    "hs-norm": hs_norm_distance,
    "inf": inf_distance,
    "t": transmission_distance,
    "b": bures_distance,
    "e": entropic_distance,
    "h": hellinger_distance,
    "root-fidelity": root_fidelity,
    "fidelity": fidelity,
    "qjsd": qjsd,
    "kl": lambda r, s: relative_entropy(r, s).value,
    "chernoff": lambda r, s: chernoff_information(r, s)[1],
}

NON_METRICS = frozenset({"kl", "chernoff", "qjsd", "root-fidelity", "fidelity"})


@dataclass(frozen=True)
class DistanceReport:
    metric: str
    value: float
    inputs: tuple = ("rho", "sigma")

    @property
    def is_metric(self) -> bool:
        return self.metric not in NON_METRICS


def measure(metric: str, rho, sigma, inputs=("rho", "sigma")) -> DistanceReport:
    try:
        fn = METRICS[metric]
    except KeyError:
        raise ContractError(f"unknown metric {metric!r}; choose from {sorted(METRICS)}") from None
    return DistanceReport(metric, float(fn(rho, sigma)), tuple(inputs))
