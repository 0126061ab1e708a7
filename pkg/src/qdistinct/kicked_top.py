"""Coupled quantum kicked tops.

One period is ``U = U12 (U1 x U2)`` with ``U_i = exp(-i k Jz^2 / 2j_i)
exp(-i pi/2 Jy)`` and ``U12 = exp(-i eps Jz1 Jz2 / jbar)``.  A bipartite
state is held as its ``N1 x N2`` coefficient matrix, so the rotation acts
as ``R1 C R2^T`` and the kicks and coupling are one elementwise phase; the
``N1 N2 x N1 N2`` Floquet matrix is never formed.  The rotation matrix
``exp(-i pi/2 Jy)`` is real, so the state is propagated as separate real and
imaginary parts with real GEMMs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from .ensembles import StreamLike, as_rng
from .errors import ContractError
from .linalg import Spectrum


@dataclass(frozen=True)
class SpinOperators:
    j: float
    m: np.ndarray
    jy: np.ndarray
    jz: np.ndarray


def _check_spin(j) -> Fraction:
    f = Fraction(j).limit_denominator(2)
    if f * 2 != int(f * 2) or abs(float(f) - float(j)) > 1e-12 or f < Fraction(1, 2):
        raise ContractError(f"spin must be a positive half-integer, got {j!r}")
    return f


def build_spin_ops(j) -> SpinOperators:
    """``Jy`` and ``Jz`` in the ``|j, m>`` basis with ``m`` ascending."""
    j = float(_check_spin(j))
    m = np.arange(-j, j + 0.5, 1.0)
    n = m.size
    jp = np.zeros((n, n))
    idx = np.arange(n - 1)
    jp[idx + 1, idx] = np.sqrt(j * (j + 1) - m[:-1] * (m[:-1] + 1))
    jy = (jp - jp.T) / 2j
    return SpinOperators(j, m, jy, np.diag(m).astype(complex))


@lru_cache(maxsize=32)
def rotation_y(j: float) -> np.ndarray:
    """``exp(-i pi/2 Jy)`` (a real orthogonal matrix)."""
    ops = build_spin_ops(j)
    w, v = np.linalg.eigh(ops.jy)
    r = (v * np.exp(-0.5j * math.pi * w)) @ v.conj().T
    if np.max(np.abs(r.imag)) > 1e-10:
        raise AssertionError("rotation about y should be real")
    out = np.ascontiguousarray(r.real)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class KickedTopConfig:
    j1: float
    j2: float
    k: float = 6.0
    eps: float = 0.01
    steps: int = 200
    initial_pair: Tuple[int, int] = (0, 1)

    def __post_init__(self):
        _check_spin(self.j1)
        _check_spin(self.j2)
        if self.steps < 0:
            raise ContractError("steps must be non-negative")
        l1, l2 = self.initial_pair
        if l1 == l2:
            raise ContractError("initial basis indices must differ")
        if not (0 <= l1 < self.n_min and 0 <= l2 < self.n_min):
            raise ContractError(f"initial indices must lie in [0, {self.n_min})")

    @property
    def n1(self) -> int:
        return int(round(2 * self.j1 + 1))

    @property
    def n2(self) -> int:
        return int(round(2 * self.j2 + 1))

    @property
    def n_min(self) -> int:
        return min(self.n1, self.n2)

    @property
    def c(self) -> float:
        return self.n2 / self.n1

    @property
    def jbar(self) -> float:
        return (self.j1 + self.j2) / 2


def spin_for_dim(n: int) -> float:
    return (n - 1) / 2


@dataclass
class FloquetMap:
    """Factored one-period propagator for a :class:`KickedTopConfig`."""

    cfg: KickedTopConfig
    r1: np.ndarray = field(init=False)
    r2: np.ndarray = field(init=False)
    cos_phase: np.ndarray = field(init=False)
    sin_phase: np.ndarray = field(init=False)

    def __post_init__(self):
        cfg = self.cfg
        self.r1 = rotation_y(float(cfg.j1))
        self.r2 = rotation_y(float(cfg.j2))
        m1 = np.arange(-cfg.j1, cfg.j1 + 0.5, 1.0)
        m2 = np.arange(-cfg.j2, cfg.j2 + 0.5, 1.0)
        phi = (cfg.k / (2 * cfg.j1) * m1[:, None] ** 2
               + cfg.k / (2 * cfg.j2) * m2[None, :] ** 2
               + cfg.eps / cfg.jbar * np.outer(m1, m2))
        self.cos_phase = np.cos(phi)
        self.sin_phase = np.sin(phi)

    def step_parts(self, re: np.ndarray, im: np.ndarray):
        """Advance a batch held as ``(N1, B, N2)`` real and imaginary parts."""
        n1, b, n2 = re.shape
        out = []
        for part in (re, im):
            x = (self.r1 @ part.reshape(n1, b * n2)).reshape(n1 * b, n2)
            out.append((x @ self.r2.T).reshape(n1, b, n2))
        re, im = out
        c = self.cos_phase[:, None, :]
        s = self.sin_phase[:, None, :]
        # multiply by exp(-i phi)
        return re * c + im * s, im * c - re * s

    def apply(self, psi: np.ndarray) -> np.ndarray:
        """One period applied to a vector of length ``N1 N2``."""
        n1, n2 = self.cfg.n1, self.cfg.n2
        c = np.asarray(psi, dtype=complex).reshape(n1, 1, n2)
        re, im = self.step_parts(np.ascontiguousarray(c.real), np.ascontiguousarray(c.imag))
        return (re + 1j * im).reshape(n1 * n2)


def floquet_apply(cfg: KickedTopConfig, psi: np.ndarray, steps: int = 1) -> np.ndarray:
    fm = FloquetMap(cfg)
    for _ in range(steps):
        psi = fm.apply(psi)
    return psi


def dense_floquet(cfg: KickedTopConfig) -> np.ndarray:
    """Full ``N1 N2`` square Floquet matrix built from matrix exponentials (small j only)."""
    from scipy.linalg import expm

    o1, o2 = build_spin_ops(cfg.j1), build_spin_ops(cfg.j2)
    u1 = expm(-1j * cfg.k / (2 * cfg.j1) * o1.jz @ o1.jz) @ expm(-0.5j * math.pi * o1.jy)
    u2 = expm(-1j * cfg.k / (2 * cfg.j2) * o2.jz @ o2.jz) @ expm(-0.5j * math.pi * o2.jy)
    u12 = expm(-1j * cfg.eps / cfg.jbar * np.kron(o1.jz, o2.jz))
    return u12 @ np.kron(u1, u2)


def product_basis_state(cfg: KickedTopConfig, l: int) -> np.ndarray:
    psi = np.zeros(cfg.n1 * cfg.n2, dtype=complex)
    psi[l * cfg.n2 + l] = 1.0
    return psi


def _initial_batch(cfg: KickedTopConfig, labels):
    re = np.zeros((cfg.n1, len(labels), cfg.n2))
    for b, l in enumerate(labels):
        re[l, b, l] = 1.0
    return re, np.zeros_like(re)


def _reduced(re, im, b):
    c = re[:, b, :] + 1j * im[:, b, :]
    return c @ c.conj().T


def _trace_distance(a, b):
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(a - b))))


@dataclass
class RelaxationSeries:
    t: np.ndarray
    distance: np.ndarray
    sigma1: Optional[list] = None
    sigma2: Optional[list] = None

    def time_to_band(self, target: float, width: float) -> float:
        """First ``t`` after which ``|D(t) - target| < width`` holds for good."""
        inside = np.abs(self.distance - target) < width
        if not inside[-1]:
            return math.inf
        outside = np.nonzero(~inside)[0]
        return float(self.t[outside[-1] + 1]) if outside.size else float(self.t[0])


def evolve_reduced_pair(cfg: KickedTopConfig, keep_states: bool = False) -> RelaxationSeries:
    """Trace distance between the reductions of ``U^t |l l>`` and ``U^t |l' l'>``."""
    fm = FloquetMap(cfg)
    re, im = _initial_batch(cfg, cfg.initial_pair)
    dist = np.empty(cfg.steps + 1)
    s1s, s2s = ([], []) if keep_states else (None, None)
    for t in range(cfg.steps + 1):
        if t:
            re, im = fm.step_parts(re, im)
        a, b = _reduced(re, im, 0), _reduced(re, im, 1)
        dist[t] = _trace_distance(a, b)
        if keep_states:
            s1s.append(a)
            s2s.append(b)
    return RelaxationSeries(np.arange(cfg.steps + 1), dist, s1s, s2s)


def draw_pairs(n: int, count: int, stream: StreamLike):
    """``count`` distinct unordered index pairs from ``range(n)``, seeded."""
    total = n * (n - 1) // 2
    if count > total:
        raise ContractError(f"only {total} distinct pairs available, {count} requested")
    picks = as_rng(stream).choice(total, size=count, replace=False)
    i, j = np.triu_indices(n, 1)
    return [(int(i[p]), int(j[p])) for p in picks]


def helstrom_spectrum(cfg: KickedTopConfig, realizations: int, stream: StreamLike,
                      t: Optional[int] = None, chunk: int = 64) -> Spectrum:
    """Pooled eigenvalues of ``sigma1 - sigma2`` after ``t`` periods.

    Each realization starts from a different pair of product basis states.
    Eigenvalues are rescaled by ``N2``, the dimension of the traced-out top,
    which puts them on the scale of the symmetrised Marchenko-Pastur law with
    ``c = N2 / N1``.
    """
    steps = cfg.steps if t is None else int(t)
    pairs = draw_pairs(cfg.n_min, realizations, stream)
    fm = FloquetMap(cfg)
    labels = [l for p in pairs for l in p]
    vals = []
    per = max(2, chunk - chunk % 2)
    for start in range(0, len(labels), per):
        block = labels[start:start + per]
        re, im = _initial_batch(cfg, block)
        for _ in range(steps):
            re, im = fm.step_parts(re, im)
        for b in range(0, len(block), 2):
            gamma = _reduced(re, im, b) - _reduced(re, im, b + 1)
            vals.append(np.linalg.eigvalsh(gamma))
    pooled = np.sort(np.concatenate(vals))
    return Spectrum(pooled).rescaled("by_K", cfg.n2)
