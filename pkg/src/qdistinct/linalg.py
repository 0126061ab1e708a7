"""Dense Hermitian linear algebra used throughout the package.

All routines work on plain ``numpy`` arrays; :class:`DensityMatrix` is a thin
validated wrapper that additionally carries an optional bipartite split.
Logarithms are natural and ``0 log 0 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np

from .errors import ContractError, NumericalError

TAU_HERM = 1e-12
TAU_PSD = 1e-10
TRACE_TOL = 1e-12


def is_hermitian(a: np.ndarray, tol: float = TAU_HERM) -> bool:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    scale = max(np.max(np.abs(a)), 1.0) if a.size else 1.0
    return bool(np.max(np.abs(a - a.conj().T), initial=0.0) <= tol * scale)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Unit-trace positive semidefinite matrix, optionally bipartite.

    ``dims = (N_A, N_B)`` records the tensor split; ``N_A * N_B`` must equal
    the matrix dimension.
    """

    data: np.ndarray
    dims: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        a = np.asarray(self.data, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ContractError(f"density matrix must be square, got {a.shape}")
        if not is_hermitian(a):
            raise ContractError("density matrix is not Hermitian")
        if abs(np.trace(a).real - 1.0) > TRACE_TOL:
            raise ContractError(f"trace {np.trace(a).real!r} differs from 1")
        lmin = np.linalg.eigvalsh(a)[0]
        if lmin < -TAU_PSD:
            raise ContractError(f"negative eigenvalue {lmin:.3e}")
        if self.dims is not None:
            na, nb = self.dims
            if na * nb != a.shape[0]:
                raise ContractError(f"split {self.dims} incompatible with dim {a.shape[0]}")
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues together with the rescaling that was applied."""

    values: np.ndarray
    rescale: str = "none"
    scale: float = 1.0

    def rescaled(self, how: str, factor: float) -> "Spectrum":
        if self.rescale != "none":
            raise ContractError("spectrum already rescaled")
        return Spectrum(self.values * factor, how, float(factor))


MatrixLike = Union[np.ndarray, DensityMatrix]


def as_array(a: MatrixLike) -> np.ndarray:
    if isinstance(a, DensityMatrix):
        return a.data
    return np.asarray(a)


def _dims_of(rho: MatrixLike, dims):
    if dims is None and isinstance(rho, DensityMatrix):
        dims = rho.dims
    if dims is None:
        raise ContractError("bipartite split (N_A, N_B) is required")
    na, nb = (int(d) for d in dims)
    n = as_array(rho).shape[0]
    if na * nb != n:
        raise ContractError(f"split {dims} incompatible with dim {n}")
    return na, nb


def eig_hermitian(a: MatrixLike) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and unitary eigenvectors of a Hermitian matrix."""
    a = as_array(a)
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        cond = np.linalg.norm(a, 1) if np.all(np.isfinite(a)) else float("nan")
        raise NumericalError(
            f"eigensolver failed ({exc}); matrix 1-norm {cond:.3e}", module="linalg"
        ) from exc
    return w, v


def eigvalsh(a: MatrixLike) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(as_array(a))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed ({exc})", module="linalg") from exc


def spectrum(a: MatrixLike) -> Spectrum:
    return Spectrum(eigvalsh(a))


def _apply(f: Callable[[np.ndarray], np.ndarray], a: MatrixLike) -> np.ndarray:
    w, v = eig_hermitian(a)
    return (v * f(w)) @ v.conj().T


def matrix_function(a: MatrixLike, f: str, s: float = 0.5) -> np.ndarray:
    """Apply ``sqrt``, ``log`` or ``power`` (exponent ``s``) spectrally.

    Eigenvalues below ``TAU_PSD`` are clipped to zero first. ``log`` maps
    zero eigenvalues to ``-inf``; callers that form ``x log x`` should use
    :func:`xlogx` on the spectrum instead.
    """
    if f == "sqrt":
        return _apply(lambda w: np.sqrt(clip_psd(w)), a)
    if f == "log":
        with np.errstate(divide="ignore"):
            return _apply(lambda w: np.log(clip_psd(w)), a)
    if f == "power":
        return _apply(lambda w: power0(clip_psd(w), s), a)
    raise ContractError(f"unknown matrix function {f!r}")


def clip_psd(w: np.ndarray, tau: float = TAU_PSD) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    return np.where(w < tau, 0.0, w)


def power0(w: np.ndarray, s: float) -> np.ndarray:
    """``w**s`` with the convention ``0**0 = 1`` and ``0**s = 0`` for s > 0."""
    if s == 0:
        return np.ones_like(w)
    return np.where(w > 0, np.abs(w) ** s, 0.0)


def xlogx(w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    out = np.zeros_like(w)
    pos = w > 0
    out[pos] = w[pos] * np.log(w[pos])
    return out


def entropy(a: MatrixLike) -> float:
    """Von Neumann entropy in nats."""
    return float(-np.sum(xlogx(clip_psd(eigvalsh(a)))))


def shannon(p: np.ndarray) -> float:
    return float(-np.sum(xlogx(np.asarray(p, dtype=float))))


def partial_trace(rho: MatrixLike, subsystem: str = "B", dims=None) -> np.ndarray:
    """Trace out ``subsystem`` ("A" or "B") and return the kept block."""
    na, nb = _dims_of(rho, dims)
    t = as_array(rho).reshape(na, nb, na, nb)
    if subsystem == "B":
        return np.einsum("ijkj->ik", t)
    if subsystem == "A":
        return np.einsum("ijil->jl", t)
    raise ContractError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def partial_transpose(rho: MatrixLike, dims=None, subsystem: str = "A") -> np.ndarray:
    na, nb = _dims_of(rho, dims)
    t = as_array(rho).reshape(na, nb, na, nb)
    if subsystem == "A":
        t = t.transpose(2, 1, 0, 3)
    elif subsystem == "B":
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ContractError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return t.reshape(na * nb, na * nb)


def reduced_from_pure(psi: np.ndarray, dims, subsystem: str = "B") -> np.ndarray:
    """Reduced state of a pure vector without forming the full projector."""
    na, nb = (int(d) for d in dims)
    m = np.asarray(psi).reshape(na, nb)
    if subsystem == "B":
        return m @ m.conj().T
    return m.T @ m.conj()


def trace_norm(a: MatrixLike) -> float:
    return float(np.sum(np.abs(eigvalsh(a))))


def hs_norm(a: MatrixLike) -> float:
    return float(np.linalg.norm(as_array(a), "fro"))


def op_norm(a: MatrixLike) -> float:
    return float(np.max(np.abs(eigvalsh(a)), initial=0.0))


def sqrtm_psd(a: MatrixLike) -> np.ndarray:
    return matrix_function(a, "sqrt")


def expm_hermitian(h: np.ndarray, t: complex = -1j) -> np.ndarray:
    """``exp(t * h)`` for Hermitian ``h``; the default gives ``exp(-i h)``."""
    w, v = eig_hermitian(h)
    return (v * np.exp(t * w)) @ v.conj().T


def is_unitary(u: np.ndarray, tol: float = 1e-10) -> bool:
    u = np.asarray(u)
    return bool(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))) <= tol)


def fourier_matrix(n: int) -> np.ndarray:
    j = np.arange(n)
    return np.exp(2j * np.pi * np.outer(j, j) / n) / np.sqrt(n)
