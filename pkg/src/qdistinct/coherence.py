"""Coherence and entanglement functionals.

Coherence is measured with respect to the computational basis.  Bipartite
inputs carry their split either as a :class:`~qdistinct.linalg.DensityMatrix`
with ``dims`` or through the explicit ``dims`` argument.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensembles import SeededStream, StreamLike, as_rng, sample_induced_array
from .errors import ContractError
from .linalg import (as_array, clip_psd, eig_hermitian, eigvalsh, entropy, fourier_matrix,
                     partial_transpose, shannon)


@dataclass(frozen=True)
class CoherenceReport:
    rel_ent: float
    l1: float
    basis: str = "computational"


def coarse_grain(rho) -> np.ndarray:
    return np.diag(np.diag(as_array(rho)))


def rel_ent_coherence(rho) -> float:
    a = as_array(rho)
    val = shannon(clip_psd(np.diag(a).real)) - entropy(a)
    return max(val, 0.0)


def rel_ent_coherence_pure(psi) -> float:
    """Same as :func:`rel_ent_coherence` for a pure vector (no eigensolve)."""
    return shannon(np.abs(np.asarray(psi)) ** 2)


def l1_coherence(rho) -> float:
    a = np.abs(as_array(rho))
    return float(a.sum() - np.trace(a))


def l1_coherence_pure(psi) -> float:
    s = np.abs(np.asarray(psi))
    return float(s.sum() ** 2 - np.sum(s * s))


def coherence(rho) -> CoherenceReport:
    return CoherenceReport(rel_ent_coherence(rho), l1_coherence(rho))


def contradiagonal_form(rho) -> np.ndarray:
    """Rotate ``rho`` into a basis where all diagonal entries equal ``1/N``.

    With ``rho = U diag(w) U^dag`` the basis is ``U F`` for the unitary Fourier
    matrix ``F``; every column of ``F`` has entries of modulus ``1/sqrt(N)``.
    """
    a = as_array(rho)
    _, u = eig_hermitian(a)
    u_max = u @ fourier_matrix(a.shape[0])
    out = u_max.conj().T @ a @ u_max
    return (out + out.conj().T) / 2


def negativity(rho, dims=None) -> float:
    """``Tr |rho^{T_A}| - 1``."""
    w = eigvalsh(partial_transpose(rho, dims))
    return float(np.sum(np.abs(w)) - np.sum(w))


def negative_fraction(rho, dims=None, tol: float = 1e-13) -> float:
    w = eigvalsh(partial_transpose(rho, dims))
    return float(np.count_nonzero(w < -tol) / w.size)


def schmidt_coefficients(psi, dims) -> np.ndarray:
    na, nb = (int(d) for d in dims)
    psi = np.asarray(psi)
    if psi.size != na * nb:
        raise ContractError(f"vector of length {psi.size} does not match split {dims}")
    s = np.linalg.svd(psi.reshape(na, nb), compute_uv=False)
    return s * s


def pure_negativity(psi, dims) -> float:
    """``((Tr sqrt(rho_A))^2 - 1) / 2`` for the reduction of a pure state."""
    lam = schmidt_coefficients(psi, dims)
    return float((np.sum(np.sqrt(clip_psd(lam))) ** 2 - 1.0) / 2.0)


def g_concurrence(psi, dims) -> float:
    """``N det(rho_A)^(1/N)`` with ``N`` the smaller local dimension."""
    lam = schmidt_coefficients(psi, dims)
    n = min(int(d) for d in dims)
    lam = lam[:n]
    if np.any(lam <= 0):
        return 0.0
    return float(n * np.exp(np.mean(np.log(lam))))


def maximally_entangled(n: int) -> np.ndarray:
    psi = np.zeros(n * n, dtype=complex)
    psi[:: n + 1] = 1.0 / np.sqrt(n)
    return psi


def offdiag_moduli(rho) -> np.ndarray:
    """Rescaled off-diagonal moduli ``y = sqrt(N) |N rho_ij|`` (i < j).

    ``N rho`` is the Gram matrix normalised to unit mean diagonal; its
    off-diagonal entries are O(1/sqrt(N)), hence the extra ``sqrt(N)``.
    """
    a = as_array(rho)
    n = a.shape[0]
    iu = np.triu_indices(n, 1)
    return np.sqrt(n) * n * np.abs(a[iu])


def offdiag_sample(kind: str, n: int, samples: int, stream: StreamLike) -> np.ndarray:
    """Pooled rescaled off-diagonal moduli of HS-random states."""
    if kind not in ("real", "complex"):
        raise ContractError("kind must be 'real' or 'complex'")
    root = stream if isinstance(stream, SeededStream) else None
    rng = None if root is not None else as_rng(stream)
    out = []
    for i in range(samples):
        src = root.child(i) if root is not None else rng
        out.append(offdiag_moduli(sample_induced_array(n, n, src, field=kind)))
    return np.concatenate(out) if out else np.empty(0)


def offdiag_histogram(kind: str, n: int, samples: int, stream: StreamLike, bins: int = 60):
    """Histogram (density-normalised) of the pooled rescaled moduli.

    Returns ``(counts, edges, values)``.
    """
    y = offdiag_sample(kind, n, samples, stream)
    counts, edges = np.histogram(y, bins=bins, density=True)
    return counts, edges, y


def chi_cdf(kind: str):
    """Reference CDF for :func:`offdiag_moduli`: chi_1 (real) or Rayleigh ``1 - exp(-y^2)``."""
    from scipy import special

    if kind == "real":
        return lambda y: special.erf(np.asarray(y) / np.sqrt(2.0))
    return lambda y: 1.0 - np.exp(-np.asarray(y) ** 2)
