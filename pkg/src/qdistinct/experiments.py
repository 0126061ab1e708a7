"""Monte Carlo experiment harness.

Sample ``i`` of sweep point ``p`` is drawn from
``SeededStream(seed, (p,)).child(i)``, so every per-sample value is fixed by
the seed alone.  Workers only change who computes a value, never the value
itself, and reductions run in sample order with :func:`math.fsum`.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import constants as K
from . import distances as D
from .coherence import (g_concurrence, l1_coherence, l1_coherence_pure, negative_fraction,
                        negativity, pure_negativity, rel_ent_coherence,
                        rel_ent_coherence_pure)
from .ensembles import (SeededStream, sample_ball, sample_dirichlet, sample_haar_pure,
                        sample_induced_array)
from .errors import ContractError
from .laws import MP
from .linalg import eigvalsh


@dataclass(frozen=True)
class EstimateRow:
    label: str
    mean: float
    stderr: float
    count: int
    reference: Optional[float] = None

    @property
    def diff(self) -> Optional[float]:
        return None if self.reference is None else abs(self.mean - self.reference)

    def as_dict(self) -> dict:
        return {"label": self.label, "mean": self.mean, "stderr": self.stderr,
                "count": self.count, "reference": self.reference, "diff": self.diff}


ROW_FIELDS = ("label", "mean", "stderr", "count", "reference", "diff")


def summarize(label: str, values, reference: Optional[float] = None) -> EstimateRow:
    v = np.asarray(values, dtype=float)
    n = v.size
    mean = math.fsum(v) / n if n else math.nan
    if n >= 2:
        var = math.fsum((v - mean) ** 2) / (n - 1)
        se = math.sqrt(var / n)
    else:
        se = math.nan
    return EstimateRow(label, mean, se, n, reference)


def run_samples(fn: Callable[[SeededStream], object], samples: int, stream: SeededStream,
                threads: int = 1) -> np.ndarray:
    """Evaluate ``fn(stream.child(i))`` for ``i < samples``; rows in index order."""
    subs = [stream.child(i) for i in range(samples)]
    if threads <= 1 or samples < 2:
        out = [fn(s) for s in subs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            out = list(ex.map(fn, subs))
    return np.asarray(out, dtype=float)


# -- state-pair quantities ---------------------------------------------------

def _pair(n, k, s):
    return sample_induced_array(n, k, s.child(0)), sample_induced_array(n, k, s.child(1))


def _center(n, k, s):
    return sample_induced_array(n, k, s.child(0)), np.eye(n) / n


@dataclass(frozen=True)
class Quantity:
    """Scalar estimator on a pair of states; ``ref`` names the registry entry
    valid at ``c = 1`` and ``ref_c`` the large-``c`` asymptote used elsewhere."""

    draw: Callable
    fn: Callable
    ref: Optional[str] = None
    ref_c: Optional[str] = None

    def __call__(self, n: int, k: int, s: SeededStream) -> float:
        a, b = self.draw(n, k, s)
        return float(self.fn(a, b))

    def reference(self, n: int, k: int) -> Optional[float]:
        if self.ref is not None and k == n:
            return K.value(self.ref)
        if self.ref_c is not None:
            return K.value(self.ref_c, k / n)
        return None


def _scaled_hs(a, b):
    return math.sqrt(a.shape[0]) * D.hs_norm_distance(a, b)


QUANTITIES: Dict[str, Quantity] = {
    "tr-pair": Quantity(_pair, D.trace_distance, "trace-generic", "cdep-trace-pair"),
    "tr-center": Quantity(_center, D.trace_distance, "trace-center", "cdep-trace-center"),
    "hs-pair": Quantity(_pair, D.hs_distance),
    "hs-center": Quantity(_center, D.hs_distance),
    "hs-scaled-pair": Quantity(_pair, _scaled_hs, ref_c="cdep-hs-pair"),
    "hs-scaled-center": Quantity(_center, _scaled_hs, ref_c="cdep-hs-center"),
    "inf-pair": Quantity(_pair, D.inf_distance),
    "inf-center": Quantity(_center, D.inf_distance),
    "t-pair": Quantity(_pair, D.transmission_distance, "transmission-generic"),
    "t-center": Quantity(_center, D.transmission_distance, "transmission-center"),
    "qjsd-pair": Quantity(_pair, D.qjsd, "qjsd-generic"),
    "b-pair": Quantity(_pair, D.bures_distance, "bures-generic"),
    "b-center": Quantity(_center, D.bures_distance, "bures-center"),
    "e-pair": Quantity(_pair, D.entropic_distance, "entropic-generic"),
    "e-center": Quantity(_center, D.entropic_distance, "entropic-center"),
    "h-pair": Quantity(_pair, D.hellinger_distance, "hellinger-generic"),
    "h-center": Quantity(_center, D.hellinger_distance, "hellinger-center"),
    "root-fidelity-pair": Quantity(_pair, D.root_fidelity, "root-fidelity-generic"),
    "root-fidelity-center": Quantity(_center, D.root_fidelity, "root-fidelity-center"),
    "kl-pair": Quantity(_pair, lambda a, b: D.relative_entropy(a, b).value, "kl-generic"),
    "kl-center": Quantity(_center, lambda a, b: D.relative_entropy(a, b).value, "kl-center"),
    "kl-center-reversed": Quantity(_center, lambda a, b: D.relative_entropy(b, a).value,
                                   "kl-center-reversed"),
    "chernoff-pair": Quantity(_pair, lambda a, b: D.chernoff_information(a, b)[1], "chernoff"),
}


def get_quantity(name: str) -> Quantity:
    try:
        return QUANTITIES[name]
    except KeyError:
        raise ContractError(f"unknown quantity {name!r}; choose from {sorted(QUANTITIES)}") from None


@dataclass(frozen=True)
class ExperimentPlan:
    """``sweep`` is a list of ``(N, K)`` points; every point gets ``samples``
    independent draws."""

    quantity: str
    sweep: Tuple[Tuple[int, int], ...]
    samples: int
    master_seed: int
    sink: Optional[str] = None

    def __post_init__(self):
        get_quantity(self.quantity)
        if self.samples < 2:
            raise ContractError("samples must be at least 2 for a standard error")
        if not self.sweep:
            raise ContractError("sweep must not be empty")
        pts = tuple((int(n), int(k)) for n, k in self.sweep)
        if any(n < 1 or k < 1 for n, k in pts):
            raise ContractError("sweep dimensions must be positive")
        object.__setattr__(self, "sweep", pts)


def run_plan(plan: ExperimentPlan, threads: int = 1) -> List[EstimateRow]:
    q = get_quantity(plan.quantity)
    root = SeededStream(plan.master_seed)
    rows = []
    for p, (n, k) in enumerate(plan.sweep):
        vals = run_samples(lambda s: q(n, k, s), plan.samples, root.child(p), threads)
        rows.append(summarize(f"{plan.quantity} N={n} K={k}", vals, q.reference(n, k)))
    return rows


def dimension_plan(quantity: str, n_list: Sequence[int], samples: int, seed: int) -> ExperimentPlan:
    return ExperimentPlan(quantity, tuple((n, n) for n in n_list), samples, seed)


def c_plan(quantity: str, n: int, c_list: Sequence[float], samples: int, seed: int) -> ExperimentPlan:
    pts = []
    for c in c_list:
        k = int(round(c * n))
        if k < 1:
            raise ContractError(f"c = {c} gives K < 1 at N = {n}")
        pts.append((n, k))
    return ExperimentPlan(quantity, tuple(pts), samples, seed)


# -- concentration ------------------------------------------------------------

@dataclass(frozen=True)
class TailRow:
    n: int
    eps: float
    exceed: int
    count: int
    sd: float

    @property
    def fraction(self) -> float:
        return self.exceed / self.count

    @property
    def stderr(self) -> float:
        f = self.fraction
        return math.sqrt(f * (1 - f) / self.count)

    def as_dict(self) -> dict:
        return {"n": self.n, "eps": self.eps, "exceed": self.exceed, "count": self.count,
                "fraction": self.fraction, "stderr": self.stderr, "sd": self.sd}


TAIL_FIELDS = ("n", "eps", "exceed", "count", "fraction", "stderr", "sd")


def concentration_tail(n_list: Sequence[int], eps: float, samples: int, seed: int,
                       threads: int = 1) -> List[TailRow]:
    """Empirical ``P(|D_Tr(rho, sigma) - D| > eps)`` for HS pairs at each ``N``."""
    if not eps > 0:
        raise ContractError("eps must be positive")
    target = K.value("trace-generic")
    q = QUANTITIES["tr-pair"]
    root = SeededStream(seed)
    rows = []
    for p, n in enumerate(n_list):
        vals = run_samples(lambda s: q(n, n, s), samples, root.child(p), threads)
        sd = float(np.std(vals, ddof=1)) if samples > 1 else math.nan
        rows.append(TailRow(int(n), float(eps), int(np.sum(np.abs(vals - target) > eps)),
                            int(samples), sd))
    return rows


# -- distance table -------------------------------------------------------------

def table1_pure_column() -> Dict[str, float]:
    """Exact distances between two orthogonal pure states."""
    a = np.diag([1.0, 0.0]).astype(complex)
    b = np.diag([0.0, 1.0]).astype(complex)
    return {m: float(D.METRICS[m](a, b)) for m in K.TABLE1}


def table1(n: int, samples: int, seed: int, threads: int = 1) -> List[EstimateRow]:
    """Mixed columns by Monte Carlo, pure column exact; 7 metrics x 3 columns."""
    metrics = list(K.TABLE1)
    root = SeededStream(seed)
    fns = [D.METRICS[m] for m in metrics]
    center = np.eye(n) / n

    def one(s):
        a, b = _pair(n, n, s)
        return [f(a, center) for f in fns] + [f(a, b) for f in fns]

    vals = run_samples(one, samples, root, threads)
    pure = table1_pure_column()
    rows = []
    for i, m in enumerate(metrics):
        rows.append(summarize(f"{m}/center", vals[:, i], K.table1_reference(m, "center")))
        rows.append(summarize(f"{m}/generic", vals[:, len(metrics) + i],
                              K.table1_reference(m, "generic")))
        rows.append(EstimateRow(f"{m}/pure", pure[m], 0.0, 0, K.table1_reference(m, "pure")))
    return rows


# -- unit ball ----------------------------------------------------------------

_BALL_REFS = {
    1: {"l1": "ball-1", "l2": "ball-1", "linf": "ball-1"},
    2: {"l1": "ball-2-l1", "l2": "ball-2-l2", "linf": "ball-2-linf"},
    3: {"l1": "ball-3-l1", "l2": "ball-3-l2", "linf": "ball-3-linf"},
}


def ball_table(n_list: Sequence[int], samples: int, seed: int) -> List[EstimateRow]:
    """Mean pairwise L1, L2 and Linf distances of uniform points in the unit ball.

    For ``n = 3`` an extra ``l1-tabulated`` row compares the same estimate
    with the tabulated decimal, which disagrees with its closed form.
    """
    root = SeededStream(seed)
    rows = []
    for p, n in enumerate(n_list):
        s = root.child(p)
        x = sample_ball(n, s.child(0), size=samples)
        y = sample_ball(n, s.child(1), size=samples)
        d = x - y
        norms = {"l1": np.abs(d).sum(axis=1), "l2": np.sqrt((d * d).sum(axis=1)),
                 "linf": np.abs(d).max(axis=1)}
        refs = _BALL_REFS.get(n, {})
        for key, v in norms.items():
            ref = K.value(refs[key]) if key in refs else None
            rows.append(summarize(f"n={n} {key}", v, ref))
        if n == 3:
            rows.append(summarize("n=3 l1-tabulated", norms["l1"], K.value("ball-3-l1-printed")))
    return rows


# -- free product -------------------------------------------------------------

@dataclass(frozen=True)
class FreeProductCheck:
    mc: EstimateRow
    factorized: float
    quadrature: float


def _free_product_values(g, h, n, samples, seed, threads):
    def one(s):
        a, b = _pair(n, n, s)
        wa, va = np.linalg.eigh(a)
        wb, vb = np.linalg.eigh(b)
        ga = g(np.clip(n * wa, 1e-300, None))
        hb = h(np.clip(n * wb, 1e-300, None))
        overlap = np.abs(va.conj().T @ vb) ** 2
        return [float(ga @ overlap @ hb) / n, float(ga.mean()), float(hb.mean())]

    return run_samples(one, samples, SeededStream(seed), threads)


def _law_integral(f) -> float:
    return MP(1.0).functional(lambda t: float(f(np.array([t]))[0]))


def free_product_check(g: Callable, h: Callable, n: int, samples: int, seed: int,
                       threads: int = 1) -> FreeProductCheck:
    """``(1/N) Tr g(N rho) h(N sigma)`` for independent HS states.

    Compared with the factorized estimate ``<(1/N) Tr g> <(1/N) Tr h>`` from
    the same samples and with ``int g dMP int h dMP``.
    """
    vals = _free_product_values(g, h, n, samples, seed, threads)
    quad = _law_integral(g) * _law_integral(h)
    fact = (math.fsum(vals[:, 1]) / samples) * (math.fsum(vals[:, 2]) / samples)
    return FreeProductCheck(summarize("free-product", vals[:, 0], quad), fact, quad)


def kl_free_product(n: int, samples: int, seed: int, threads: int = 1) -> FreeProductCheck:
    """``S(rho||sigma) = <(1/N) Tr T ln T> - <(1/N) Tr T ln S>`` with ``T = N rho``,
    ``S = N sigma``; the ``ln N`` terms cancel exactly."""
    xlog = lambda t: t * np.log(t)
    one = lambda t: np.ones_like(t)
    first = _free_product_values(xlog, one, n, samples, seed, threads)
    second = _free_product_values(lambda t: t, np.log, n, samples, seed, threads)
    quad = _law_integral(xlog) - _law_integral(lambda t: t) * _law_integral(np.log)
    fact = (math.fsum(first[:, 1]) - math.fsum(second[:, 1]) * math.fsum(second[:, 2]) / samples) / samples
    row = summarize("kl-free-product", first[:, 0] - second[:, 0], K.value("kl-generic"))
    return FreeProductCheck(row, fact, quad)


# -- classical vectors --------------------------------------------------------

_CLASSICAL = {"flat": (1.0, "flat"), "statistical": (0.5, "stat")}


def classical_table(n: int, samples: int, seed: int, measure: str = "flat",
                    threads: int = 1) -> List[EstimateRow]:
    """Bhattacharyya coefficient, classical Bures and halved L1 distances for
    Dirichlet vectors, between two random vectors and against uniform."""
    if measure not in _CLASSICAL:
        raise ContractError(f"measure must be one of {sorted(_CLASSICAL)}")
    s_idx, tag = _CLASSICAL[measure]
    uni = np.full(n, 1.0 / n)

    def one(s):
        p = sample_dirichlet(n, s_idx, s.child(0))
        q = sample_dirichlet(n, s_idx, s.child(1))
        return [D.bhattacharyya(p, uni), D.bhattacharyya(p, q),
                D.classical_bures(p, uni), D.classical_bures(p, q),
                D.l1_halved(p, uni), D.l1_halved(p, q)]

    vals = run_samples(one, samples, SeededStream(seed), threads)
    names = ["bhatt-center", "bhatt-pair", "bures-center", "bures-pair", "l1-center", "l1-pair"]
    return [summarize(f"{measure} {nm}", vals[:, i], K.value(f"cl-{nm}-{tag}"))
            for i, nm in enumerate(names)]


# -- coherence and entanglement ----------------------------------------------

def coherence_suite(n: int, samples: int, seed: int, field: str = "complex",
                    purity: str = "pure", threads: int = 1) -> List[EstimateRow]:
    """Relative entropy and L1 coherence of random states in the computational basis."""
    if field not in ("complex", "real") or purity not in ("pure", "mixed"):
        raise ContractError("field must be complex|real and purity pure|mixed")

    def one(s):
        if purity == "pure":
            psi = sample_haar_pure(n, s, field)
            return [rel_ent_coherence_pure(psi), l1_coherence_pure(psi)]
        rho = sample_induced_array(n, n, s, field)
        return [rel_ent_coherence(rho), l1_coherence(rho)]

    vals = run_samples(one, samples, SeededStream(seed), threads)
    f = "c" if field == "complex" else "r"
    tag = f"{purity}-{field}"
    if purity == "pure":
        return [
            summarize(f"{tag} relent", vals[:, 0], math.log(n) - K.value(f"coh-relent-pure-{f}")),
            summarize(f"{tag} lnN-relent", math.log(n) - vals[:, 0], K.value(f"coh-relent-pure-{f}")),
            summarize(f"{tag} l1/(N-1)", vals[:, 1] / (n - 1), K.value(f"coh-l1-pure-{f}")),
        ]
    ref_rel = K.value("coh-relent-mixed") if field == "complex" else None
    return [
        summarize(f"{tag} relent", vals[:, 0], ref_rel),
        summarize(f"{tag} l1/sqrt(N)", vals[:, 1] / math.sqrt(n), K.value(f"coh-l1-mixed-{f}")),
    ]


def entanglement_suite(na: int, nb: int, samples: int, seed: int,
                       threads: int = 1) -> List[EstimateRow]:
    """Negativity ``Tr|rho^TA| - 1`` and negative-eigenvalue fraction of HS
    states on ``na x nb``.  ``half-negativity`` is the summed modulus of the
    negative eigenvalues, i.e. half the negativity."""
    dims = (na, nb)

    def one(s):
        rho = sample_induced_array(na * nb, na * nb, s)
        neg = negativity(rho, dims)
        return [neg, neg / 2, negative_fraction(rho, dims)]

    vals = run_samples(one, samples, SeededStream(seed), threads)
    ref_n = K.value("negativity-integral") if na == nb else None
    ref_f = K.value("negative-fraction") if na == nb else None
    return [summarize("negativity", vals[:, 0], ref_n),
            summarize("half-negativity", vals[:, 1], ref_n),
            summarize("negative-fraction", vals[:, 2], ref_f)]


def pure_entanglement_suite(n: int, samples: int, seed: int, threads: int = 1) -> List[EstimateRow]:
    """Pure-state negativity per dimension and G-concurrence for Haar states on ``n x n``."""
    dims = (n, n)

    def one(s):
        psi = sample_haar_pure(n * n, s)
        return [pure_negativity(psi, dims) / n, g_concurrence(psi, dims)]

    vals = run_samples(one, samples, SeededStream(seed), threads)
    return [summarize("pure-negativity/N", vals[:, 0], K.value("pure-negativity")),
            summarize("g-concurrence", vals[:, 1], K.value("g-concurrence"))]


def rescaled_spectrum_sample(n: int, k: int, samples: int, seed: int) -> np.ndarray:
    """Pooled ``K lambda`` eigenvalues of induced states (for MP comparisons)."""
    root = SeededStream(seed)
    return np.sort(np.concatenate([k * eigvalsh(sample_induced_array(n, k, root.child(i)))
                                   for i in range(samples)]))
