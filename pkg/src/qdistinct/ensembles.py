"""Seeded samplers for random states, unitaries and probability vectors.

Every sampler takes a :class:`SeededStream` (or an already constructed
``numpy.random.Generator``).  A stream is identified by a master seed and a
path of integer indices, so sample ``i`` of an experiment is drawn from
``SeededStream(seed).child(i)`` independently of which worker draws it or in
what order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from .errors import ContractError
from .linalg import DensityMatrix


@dataclass(frozen=True)
class SeededStream:
    master_seed: int
    stream_index: Tuple[int, ...] = ()

    def __post_init__(self):
        idx = self.stream_index
        if isinstance(idx, (int, np.integer)):
            idx = (int(idx),)
        object.__setattr__(self, "stream_index", tuple(int(i) for i in idx))
        if self.master_seed < 0 or any(i < 0 for i in self.stream_index):
            raise ContractError("seeds and stream indices must be non-negative")

    def child(self, index: int) -> "SeededStream":
        return SeededStream(self.master_seed, self.stream_index + (int(index),))

    def rng(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.master_seed, spawn_key=self.stream_index)
        return np.random.Generator(np.random.PCG64(ss))


StreamLike = Union[SeededStream, np.random.Generator]


def as_rng(stream: StreamLike) -> np.random.Generator:
    if isinstance(stream, np.random.Generator):
        return stream
    if isinstance(stream, SeededStream):
        return stream.rng()
    raise ContractError(f"expected SeededStream or Generator, got {type(stream).__name__}")


def ginibre(n: int, k: int, stream: StreamLike, field: str = "complex") -> np.ndarray:
    """``n x k`` Gaussian matrix; complex entries have i.i.d. N(0,1) parts."""
    rng = as_rng(stream)
    if field == "complex":
        return rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
    if field == "real":
        return rng.standard_normal((n, k))
    raise ContractError(f"field must be 'complex' or 'real', got {field!r}")


def _check_dims(*dims):
    for d in dims:
        if int(d) != d or d < 1:
            raise ContractError(f"dimensions must be positive integers, got {d!r}")


def sample_induced_array(n: int, k: int, stream: StreamLike, field: str = "complex") -> np.ndarray:
    """Induced-measure state ``G G^dag / Tr G G^dag`` as a bare array.

    ``field="real"`` gives the real (orthogonal-invariant) analogue.
    """
    _check_dims(n, k)
    g = ginibre(n, k, stream, field)
    w = g @ g.conj().T
    w = (w + w.conj().T) / 2
    return w / np.trace(w).real


def sample_induced(n: int, k: int, stream: StreamLike) -> DensityMatrix:
    return DensityMatrix(sample_induced_array(n, k, stream))


def sample_hs(n: int, stream: StreamLike) -> DensityMatrix:
    return sample_induced(n, n, stream)


def sample_haar_pure(n: int, stream: StreamLike, field: str = "complex") -> np.ndarray:
    _check_dims(n)
    v = ginibre(n, 1, stream, field)[:, 0]
    return v / np.linalg.norm(v)


def sample_haar_unitary(n: int, stream: StreamLike) -> np.ndarray:
    """Haar unitary from QR of a complex Ginibre matrix.

    The phases of ``diag(R)`` are moved into ``Q``; without that correction the
    result is not Haar distributed.
    """
    _check_dims(n)
    q, r = np.linalg.qr(ginibre(n, n, stream))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def sample_dirichlet(n: int, s: float, stream: StreamLike) -> np.ndarray:
    """Symmetric Dirichlet vector built from normalised Gamma(s) variates."""
    _check_dims(n)
    if not s > 0:
        raise ContractError(f"Dirichlet index must be positive, got {s!r}")
    x = as_rng(stream).standard_gamma(s, size=n)
    return x / x.sum()


def sample_ball(n: int, stream: StreamLike, size: int | None = None) -> np.ndarray:
    """Uniform point(s) in the unit ``n``-ball: Gaussian direction, radius ``U**(1/n)``."""
    _check_dims(n)
    rng = as_rng(stream)
    shape = (n,) if size is None else (size, n)
    x = rng.standard_normal(shape)
    norms = np.linalg.norm(x, axis=-1, keepdims=True)
    u = rng.random(shape[:-1] + (1,))
    return x / norms * u ** (1.0 / n)


@dataclass(frozen=True)
class EnsembleSpec:
    """Named ensemble with its dimensions.

    ``kind`` is one of ``induced``, ``hs``, ``pure-c``, ``pure-r``,
    ``unitary``, ``dirichlet``, ``ball``.
    """

    kind: str
    n: int
    k: int | None = None
    s: float | None = None

    def __post_init__(self):
        if self.kind not in {"induced", "hs", "pure-c", "pure-r", "unitary", "dirichlet", "ball"}:
            raise ContractError(f"unknown ensemble {self.kind!r}")
        _check_dims(self.n)
        if self.kind == "induced":
            if self.k is None:
                raise ContractError("induced ensemble needs K")
            _check_dims(self.k)
        if self.kind == "hs":
            object.__setattr__(self, "k", self.n)
        if self.kind == "dirichlet" and self.s is None:
            raise ContractError("Dirichlet ensemble needs s")

    @property
    def c(self) -> float | None:
        return None if self.k is None else self.k / self.n

    def sample(self, stream: StreamLike) -> np.ndarray:
        if self.kind in ("induced", "hs"):
            return sample_induced_array(self.n, self.k, stream)
        if self.kind == "pure-c":
            return sample_haar_pure(self.n, stream, "complex")
        if self.kind == "pure-r":
            return sample_haar_pure(self.n, stream, "real")
        if self.kind == "unitary":
            return sample_haar_unitary(self.n, stream)
        if self.kind == "dirichlet":
            return sample_dirichlet(self.n, self.s, stream)
        return sample_ball(self.n, stream)
