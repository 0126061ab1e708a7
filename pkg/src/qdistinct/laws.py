"""Limiting spectral laws and functionals over them.

A :class:`LimitLaw` bundles a closed-form density, its support, a possible
atom at zero and the quadrature needed to integrate test functions against
it.  Integrals are done per support interval after the change of variables
``x = lo + (hi - lo) (1 - cos theta) / 2``, which turns the square-root edges
of all laws here into smooth integrands for the adaptive Gauss-Kronrod rule.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, List, Sequence, Tuple

import numpy as np
from scipy import integrate

from .errors import ContractError, NumericalError

QUAD_TOL = 1e-8
_KINDS = ("mp", "smp", "fc", "semicircle")


@dataclass(frozen=True)
class LimitLaw:
    """An analytic spectral law.

    kind
        ``"mp"`` (Marchenko-Pastur, variable ``x = K lambda``), ``"smp"``
        (its free difference with itself), ``"fc"`` (Fuss-Catalan of order 2)
        or ``"semicircle"``.
    c
        Rectangularity ``K/N`` for ``mp``/``smp``.
    center, radius
        Semicircle geometry.
    """

    kind: str
    c: float = 1.0
    center: float = 0.0
    radius: float = 2.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ContractError(f"unknown law {self.kind!r}")
        if self.kind in ("mp", "smp") and not self.c > 0:
            raise ContractError(f"rectangularity must be positive, got {self.c!r}")
        if self.kind == "semicircle" and not self.radius > 0:
            raise ContractError("semicircle radius must be positive")

    # -- geometry ---------------------------------------------------------

    @property
    def atom0(self) -> float:
        if self.kind == "mp":
            return max(0.0, 1.0 - self.c)
        if self.kind == "smp":
            return max(0.0, 1.0 - 2.0 * self.c)
        return 0.0

    @property
    def support(self) -> Tuple[float, float]:
        if self.kind == "mp":
            return (1 - math.sqrt(self.c)) ** 2, (1 + math.sqrt(self.c)) ** 2
        if self.kind == "smp":
            hi = smp_outer_edge(self.c)
            return -hi, hi
        if self.kind == "fc":
            return 0.0, 27.0 / 4.0
        return self.center - self.radius, self.center + self.radius

    def intervals(self) -> List[Tuple[float, float]]:
        """Disjoint intervals carrying the continuous part."""
        lo, hi = self.support
        if self.kind == "smp":
            inner = smp_inner_edge(self.c)
            return [(-hi, -inner), (inner, hi)]
        return [(lo, hi)]

    def mean(self) -> float:
        return {"mp": self.c, "smp": 0.0, "fc": 1.0, "semicircle": self.center}[self.kind]

    # -- density ----------------------------------------------------------

    def pdf(self, x):
        """Density of the continuous part; the atom is reported by ``atom0``."""
        x = np.asarray(x, dtype=float)
        if self.kind == "mp":
            out = _mp_pdf(x, self.c)
        elif self.kind == "smp":
            out = _smp_pdf(x, self.c)
        elif self.kind == "fc":
            out = _fc_pdf(x)
        else:
            u = x - self.center
            r2 = self.radius**2
            out = np.where(np.abs(u) < self.radius,
                           2.0 / (math.pi * r2) * np.sqrt(np.clip(r2 - u * u, 0, None)), 0.0)
        return out if out.ndim else float(out)

    # -- integration ------------------------------------------------------

    def functional(self, g: Callable[[float], float], points: Iterable[float] = (),
                   tol: float = QUAD_TOL) -> float:
        """``atom0 * g(0) + integral of g against the continuous part``.

        ``points`` lists interior abscissae where ``g`` has kinks; zero is
        always added for laws symmetric about it.
        """
        total = self.atom0 * g(0.0) if self.atom0 > 0 else 0.0
        err = 0.0
        for lo, hi in self.intervals():
            val, e = _integrate_interval(lambda x: g(x) * self.pdf(x), lo, hi,
                                         list(points) + [0.0], tol)
            total += val
            err += e
        if err > tol:
            raise NumericalError(
                f"quadrature for {self.kind} reached only {err:.2e} (target {tol:.0e})",
                module="laws", achieved=err)
        return float(total)

    def mass(self) -> float:
        return self.functional(lambda x: 1.0)

    def moment(self, k: int) -> float:
        return self.functional(lambda x: x**k)

    def cdf_exact(self, x: float) -> float:
        """``mu((-inf, x])`` by direct quadrature (slow, accurate)."""
        total = self.atom0 if (self.atom0 > 0 and x >= 0) else 0.0
        for lo, hi in self.intervals():
            if x <= lo:
                continue
            top = min(x, hi)
            if top >= hi:
                val, _ = _integrate_interval(self.pdf, lo, hi, [0.0], QUAD_TOL)
            else:
                val, _ = integrate.quad(self.pdf, lo, top, epsabs=1e-12, epsrel=1e-12,
                                        limit=500, points=[p for p in (0.0,) if lo < p < top] or None)
            total += val
        return float(total)

    def cdf(self, x, continuous_only: bool = False):
        """Interpolated CDF from a cached fine table (vectorised).

        With ``continuous_only`` the atom is removed and the result is
        renormalised to the continuous part.
        """
        xs, cum = _cdf_table(self)
        y = np.interp(np.asarray(x, dtype=float), xs, cum, left=0.0, right=cum[-1])
        if continuous_only:
            return y / cum[-1]
        atom = self.atom0 * (np.asarray(x) >= 0)
        return y + atom

    def cauchy_transform(self, z: complex) -> complex:
        """``G(z) = int dmu(t) / (z - t)`` for ``Im z > 0``."""
        z = complex(z)
        if not z.imag > 0:
            raise ContractError("Cauchy transform needs Im z > 0")
        re = self.functional(lambda t: (1.0 / (z - t)).real)
        im = self.functional(lambda t: (1.0 / (z - t)).imag)
        return complex(re, im)


def MP(c: float = 1.0) -> LimitLaw:
    return LimitLaw("mp", c=c)


def SMP(c: float = 1.0) -> LimitLaw:
    return LimitLaw("smp", c=c)


def FussCatalan2() -> LimitLaw:
    return LimitLaw("fc")


def Semicircle(center: float = 0.0, radius: float = 2.0) -> LimitLaw:
    return LimitLaw("semicircle", center=center, radius=radius)


def ShiftedSemicircle(c: float) -> LimitLaw:
    """Partial-transpose law: centre ``c``, radius ``2 sqrt(c)``."""
    if not c > 0:
        raise ContractError("c must be positive")
    return LimitLaw("semicircle", center=c, radius=2.0 * math.sqrt(c))


# -- closed forms ---------------------------------------------------------

def _mp_pdf(x, c):
    a = (1 - math.sqrt(c)) ** 2
    b = (1 + math.sqrt(c)) ** 2
    inside = (x > a) & (x < b) & (x > 0)
    xs = np.where(inside, x, 1.0)
    return np.where(inside, np.sqrt(np.clip((xs - a) * (b - xs), 0, None)) / (2 * math.pi * xs), 0.0)


def _smp_disc(y2, c):
    return (2 * c - 1) ** 3 - y2 * y2 + (2 - (c - 10) * c) * y2


def smp_outer_edge(c: float) -> float:
    return math.sqrt((-c * c + 10 * c + (c + 4) ** 1.5 * math.sqrt(c) + 2) / 2)


def smp_inner_edge(c: float) -> float:
    """Inner edge of the continuous part; zero unless ``c < 1/2``."""
    if c >= 0.5:
        return 0.0
    b = 2 + 10 * c - c * c
    return math.sqrt((b - (c + 4) ** 1.5 * math.sqrt(c)) / 2)


def _smp_pdf(y, c):
    # Real cube roots; the density is even so it is evaluated at |y|.
    y = np.abs(y)
    ys = np.where(y > 0, y, 1.0)
    disc = _smp_disc(ys * ys, c)
    ok = (y > 0) & (disc > 0) & (y < smp_outer_edge(c))
    root = np.sqrt(np.where(ok, disc, 0.0))
    big_y = (2 * c - 1) ** 3 + 9 * (c + 1) * ys**2 + 3 * math.sqrt(3) * ys * root
    cr = np.cbrt(big_y)
    cr = np.where(cr == 0, 1.0, cr)
    num = -1 - 4 * (c - 1) * c - 3 * ys**2 + cr**2
    val = num / (2 * math.sqrt(3) * math.pi * ys * cr)
    return np.where(ok, np.clip(val, 0, None), 0.0)


def _fc_pdf(x):
    inside = (x > 0) & (x < 27.0 / 4.0)
    xs = np.where(inside, x, 1.0)
    s = (27 + 3 * np.sqrt(np.clip(81 - 12 * xs, 0, None))) ** (1.0 / 3.0)
    k = 2 ** (1.0 / 3.0)
    val = k * math.sqrt(3) / (12 * math.pi) * (k * s**2 - 6 * np.cbrt(xs)) / (xs ** (2.0 / 3.0) * s)
    return np.where(inside, np.clip(val, 0, None), 0.0)


def smp_stieltjes_root(z: complex, c: float) -> complex:
    """Cauchy transform of SMP_c from the cubic ``z G^3 + (2c-1) G^2 - z G + 1 = 0``.

    Independent of the closed-form density; picks the root with
    ``Im G < 0`` (for ``Im z > 0``) closest to ``1/z``.
    """
    roots = np.roots([z, 2 * c - 1, -z, 1])
    cands = [r for r in roots if r.imag <= 1e-14] or list(roots)
    return complex(min(cands, key=lambda r: abs(r - 1 / z) if abs(z) > 10 else -abs(r.imag)))


# -- quadrature helpers ---------------------------------------------------

def _integrate_interval(f, lo, hi, points, tol):
    half = (hi - lo) / 2.0

    def h(theta):
        return f(lo + half * (1.0 - math.cos(theta))) * half * math.sin(theta)

    brk = sorted({math.acos(1.0 - (p - lo) / half) for p in points if lo < p < hi})
    edges = [0.0] + brk + [math.pi]
    total = 0.0
    err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            val, e = integrate.quad(h, a, b, epsabs=tol / 100, epsrel=1e-12, limit=1000)
        total += val
        err += e
    return total, err


_GL_X, _GL_W = np.polynomial.legendre.leggauss(24)


def _theta_to_x(lo, half, theta):
    return lo + half * (1 - math.cos(theta))


@lru_cache(maxsize=64)
def _cdf_table(law: LimitLaw, cells: int = 800):
    xs_all: List[np.ndarray] = []
    cum_all: List[np.ndarray] = []
    running = 0.0
    for lo, hi in law.intervals():
        half = (hi - lo) / 2.0
        th = np.linspace(0.0, math.pi, cells + 1)
        a, b = th[:-1], th[1:]
        nodes = (a[:, None] + b[:, None]) / 2 + (b - a)[:, None] / 2 * _GL_X[None, :]
        x = lo + half * (1 - np.cos(nodes))
        vals = law.pdf(x) * half * np.sin(nodes)
        cell = (vals * _GL_W[None, :]).sum(axis=1) * (b - a) / 2
        # end cells may hold an integrable singularity (fc at 0)
        for i in (0, cells - 1):
            cell[i] = _integrate_interval(law.pdf, _theta_to_x(lo, half, a[i]), _theta_to_x(lo, half, b[i]),
                                          [], QUAD_TOL)[0]
        xs = lo + half * (1 - np.cos(th))
        cum = running + np.concatenate([[0.0], np.cumsum(cell)])
        running = cum[-1]
        xs_all.append(xs)
        cum_all.append(cum)
    xs = np.concatenate(xs_all)
    cum = np.concatenate(cum_all)
    xs.setflags(write=False)
    cum.setflags(write=False)
    return xs, cum


# -- derived quantities ---------------------------------------------------

def mp_median_and_diameter(tol: float = 1e-12) -> Tuple[float, float]:
    """Median ``M`` of MP_1 and the orbit diameter ``int x sign(x - M) dMP``."""
    law = MP(1.0)
    lo, hi = 0.0, 4.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if law.cdf_exact(mid) < 0.5:
            lo = mid
        else:
            hi = mid
    m = (lo + hi) / 2
    d = law.functional(lambda x: x * np.sign(x - m), points=[m])
    return m, d


def chernoff_limit(s: float) -> float:
    """Limit of ``Tr rho^s sigma^(1-s)`` for two independent HS-random states."""
    if not 0 <= s <= 1:
        raise ContractError("s must lie in [0, 1]")
    lg = math.lgamma
    return 4.0 * math.exp(lg(1.5 - s) + lg(s + 0.5) - lg(3 - s) - lg(s + 2)) / math.pi


def golden_section_min(f, a: float, b: float, tol: float = 1e-10):
    invphi = (math.sqrt(5) - 1) / 2
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = (a + b) / 2
    return x, f(x)


def chernoff_min() -> Tuple[float, float]:
    return golden_section_min(chernoff_limit, 0.0, 1.0, 1e-10)


def qjsd_center_limit() -> float:
    """``T1^2`` by quadrature: 1/4 - int u log u dMP with ``u = (t + 1)/2``."""
    law = MP(1.0)
    return 0.25 - law.functional(lambda t: (t + 1) / 2 * math.log((t + 1) / 2))


def closed_form_constants() -> dict:
    """Closed forms of ``T1`` and ``E1``."""
    s5 = math.sqrt(5)
    # log(4870847 - 2178309 sqrt(5)) / 16 = log(2)/16 - 2 log(phi) (Lucas and
    # Fibonacci numbers L32, F32); the sqrt(5) coefficient is 1/8, which is
    # what the quadrature cross-check in qjsd_center_limit reproduces.
    phi = (1 + s5) / 2
    t1_sq = 1 / 8 + s5 / 8 + math.log(2) - 2 * math.log(phi)
    p = 3 * math.pi
    e1_sq = (p * math.log(36 * math.pi**2 / (9 * math.pi**2 - 64))
             - 16 * math.atanh(8 / p)) / (6 * math.pi)
    return {"T1": math.sqrt(t1_sq), "E1": math.sqrt(e1_sq), "T1_sq": t1_sq}


def aubrun_negativity(c: float) -> dict:
    """Fraction of negative eigenvalues and negativity integral of the
    shifted semicircle of centre ``c`` and radius ``2 sqrt(c)``."""
    if not c > 0:
        raise ContractError("c must be positive")
    if c >= 4:
        return {"f_N": 0.0, "N": 0.0}
    ac = math.acos(math.sqrt(c) / 2)
    f = (4 * ac - math.sqrt(4 * c - c * c)) / (4 * math.pi)
    n = (8 * math.sqrt(4 * c - c * c) + math.sqrt(4 * c**3 - c**4) - 12 * c * ac) / (12 * math.pi)
    return {"f_N": f, "N": n}


def trace_center_c(c: float) -> float:
    """Limit of ``D_Tr(rho, 1/N)`` for induced states with ratio ``c``."""
    return MP(c).functional(lambda x: abs(x - c), points=[c]) / (2 * c)


def trace_pair_c(c: float) -> float:
    """Limit of ``D_Tr(rho, sigma)`` for two induced states with ratio ``c``."""
    return SMP(c).functional(abs) / (2 * c)


def hs_center_scaled_c(c: float) -> float:
    """Limit of ``sqrt(N) ||rho - 1/N||_2``."""
    return math.sqrt(MP(c).functional(lambda x: (x - c) ** 2)) / c


def hs_pair_scaled_c(c: float) -> float:
    """Limit of ``sqrt(N) ||rho - sigma||_2``."""
    return math.sqrt(SMP(c).functional(lambda y: y * y)) / c


def ks_distance_to_law(sample: Sequence[float], law: LimitLaw, continuous_only=False) -> float:
    from scipy import stats

    res = stats.kstest(np.asarray(sample, dtype=float),
                       lambda x: law.cdf(x, continuous_only=continuous_only))
    return float(res.statistic)
