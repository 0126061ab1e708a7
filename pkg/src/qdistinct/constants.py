"""Named asymptotic constants with exact expressions and decimal values.

Each entry carries a human-readable ``display`` form, a Python expression
``expr`` evaluated over :mod:`math` (free variable ``c`` where the constant
depends on the rectangularity) and a stored ``decimal``.  Entries whose
value is defined only through a numerical procedure have ``expr=None`` and
name the procedure in ``display``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Optional

from .errors import ContractError

_NS = {k: getattr(math, k) for k in dir(math) if not k.startswith("_")}
_NS["euler_gamma"] = 0.57721566490153286061
_NS["phi"] = (1 + math.sqrt(5)) / 2


@dataclass(frozen=True)
class Constant:
    name: str
    display: str
    expr: Optional[str]
    decimal: float
    note: str = ""

    def value(self, c: float = 1.0) -> float:
        """Evaluate ``expr``; numerical-only entries return ``decimal``."""
        if self.expr is None:
            return self.decimal
        return float(eval(self.expr, {"__builtins__": {}}, dict(_NS, c=c)))

    def formatted(self) -> str:
        s = f"{self.decimal:.12f}"
        return f"{self.display} = {s[:s.index('.') + 7]}..."


_ROWS = [
    # trace distance
    ("trace-center", "3*sqrt(3)/(4*pi)", "3*sqrt(3)/(4*pi)", 0.41349667156634407,
     "D_Tr(rho, 1/N), flat measure"),
    ("trace-generic", "1/4 + 1/pi", "1/4 + 1/pi", 0.5683098861837907,
     "D_Tr(rho, sigma), flat measure"),
    ("helstrom-p2", "1/2 + (1/4 + 1/pi)/2", "1/2 + (1/4 + 1/pi)/2", 0.7841549430918954,
     "bound on the success probability for two random states"),
    ("helstrom-p1", "1/2 + 3*sqrt(3)/(8*pi)", "1/2 + 3*sqrt(3)/(8*pi)", 0.7067483357831721,
     "bound on the success probability against the maximally mixed state"),
    ("mp-median", "M with int_0^M dMP_1 = 1/2 (bisection)", None, 0.6527759416335357,
     "median of MP_1"),
    ("orbit-diameter", "int x sign(x - M) dMP_1 (quadrature)", None, 0.7874615877561242,
     "diameter of a unitary orbit of a typical state"),
    # relative entropy, Chernoff
    ("kl-generic", "3/2", "3/2", 1.5, "S(rho||sigma)"),
    ("kl-center", "1/2", "1/2", 0.5, "S(rho||1/N)"),
    ("kl-center-reversed", "1", "1.0", 1.0, "S(1/N||rho)"),
    ("chernoff", "(8/(3 pi))^2", "(8/(3*pi))**2", 0.7205061947899576,
     "quantum Chernoff Q at s* = 1/2"),
    # QJSD, fidelities
    ("qjsd-generic", "1/4", "1/4", 0.25, "QJSD(rho, sigma)"),
    ("transmission-generic", "1/2", "1/2", 0.5, "D_T(rho, sigma)"),
    ("transmission-center", "T1 = sqrt(1/8 + sqrt(5)/8 + ln 2 - 2 ln phi)",
     "sqrt(1/8 + sqrt(5)/8 + log(2) - 2*log(phi))", 0.36773907547092705,
     "D_T(rho, 1/N)"),
    ("transmission-pure", "sqrt(ln 2)", "sqrt(log(2))", 0.8325546111576977,
     "D_T of orthogonal pure states"),
    ("root-fidelity-generic", "3/4", "3/4", 0.75, "sqrt F(rho, sigma)"),
    ("root-fidelity-center", "8/(3 pi)", "8/(3*pi)", 0.8488263631567752,
     "sqrt F(rho, 1/N)"),
    ("fidelity-generic", "9/16", "9/16", 0.5625, "F(rho, sigma)"),
    ("bures-generic", "sqrt(2)/2", "sqrt(2)/2", 0.7071067811865476, "D_B(rho, sigma)"),
    ("bures-center", "sqrt(2 - 16/(3 pi))", "sqrt(2 - 16/(3*pi))", 0.5498611403676837,
     "D_B(rho, 1/N)"),
    ("hellinger-generic", "sqrt(2 - 2 (8/(3 pi))^2)", "sqrt(2 - 2*(8/(3*pi))**2)",
     0.7476547401174454, "D_H(rho, sigma)"),
    ("hellinger-center", "sqrt(2 - 16/(3 pi))", "sqrt(2 - 16/(3*pi))", 0.5498611403676837,
     "D_H(rho, 1/N)"),
    ("entropic-generic", "sqrt(ln(8^8/7^7))/(2 sqrt 2)",
     "sqrt(8*log(8) - 7*log(7))/(2*sqrt(2))", 0.6138160646777149, "D_E(rho, sigma)"),
    ("entropic-center", "E1 = sqrt((3 pi ln(36 pi^2/(9 pi^2 - 64)) - 16 arccoth(3 pi/8))/(6 pi))",
     "sqrt((3*pi*log(36*pi**2/(9*pi**2 - 64)) - 16*atanh(8/(3*pi)))/(6*pi))",
     0.5175483113386173, "D_E(rho, 1/N)"),
    ("hs-pair-scaled", "sqrt(2)", "sqrt(2)", 1.4142135623730951,
     "sqrt(N) ||rho - sigma||_2"),
    ("hs-center-scaled", "1", "1.0", 1.0, "sqrt(N) ||rho - 1/N||_2"),
    # entanglement
    ("pure-negativity", "(8/(3 pi))^2 / 2", "(8/(3*pi))**2/2", 0.3602530973949788,
     "pure_negativity / N for Haar pure states on N x N"),
    ("g-concurrence", "1/e", "exp(-1)", 0.36787944117144233, "mean G-concurrence"),
    ("negative-fraction", "1/3 - sqrt(3)/(4 pi)", "1/3 - sqrt(3)/(4*pi)", 0.1955011094778853,
     "fraction of negative eigenvalues of rho^TA, c = 1"),
    ("negativity-integral", "3 sqrt(3)/(4 pi) - 1/3", "3*sqrt(3)/(4*pi) - 1/3",
     0.08016333823301075, "integral of the negative part of the shifted semicircle, c = 1"),
    # coherence
    ("coh-relent-pure-c", "ln N - (1 - gamma)", "1 - euler_gamma", 0.42278433509846713,
     "ln N minus mean relative entropy of coherence, complex pure"),
    ("coh-relent-pure-r", "ln N - (2 - gamma - ln 2)", "2 - euler_gamma - log(2)",
     0.729637154538522, "ln N minus mean relative entropy of coherence, real pure"),
    ("coh-relent-mixed", "1/2", "1/2", 0.5, "mean relative entropy of coherence, HS mixed"),
    ("coh-l1-pure-c", "pi/4", "pi/4", 0.7853981633974483, "C_L1/(N - 1), complex pure"),
    ("coh-l1-pure-r", "2/pi", "2/pi", 0.6366197723675814, "C_L1/(N - 1), real pure"),
    ("coh-l1-mixed-c", "sqrt(pi)/2", "sqrt(pi)/2", 0.8862269254527579, "C_L1/sqrt(N), complex mixed"),
    ("coh-l1-mixed-r", "sqrt(2/pi)", "sqrt(2/pi)", 0.7978845608028654, "C_L1/sqrt(N), real mixed"),
    # classical vectors
    ("cl-bhatt-center-stat", "sqrt(2/pi)", "sqrt(2/pi)", 0.7978845608028654,
     "sqrt F(p, p*), statistical measure"),
    ("cl-bhatt-center-flat", "sqrt(pi)/2", "sqrt(pi)/2", 0.8862269254527579,
     "sqrt F(p, p*), flat measure"),
    ("cl-bhatt-pair-stat", "2/pi", "2/pi", 0.6366197723675814, "sqrt F(p, q), statistical measure"),
    ("cl-bhatt-pair-flat", "pi/4", "pi/4", 0.7853981633974483, "sqrt F(p, q), flat measure"),
    ("cl-bures-center-stat", "sqrt(2 - 2 sqrt(2/pi))", "sqrt(2 - 2*sqrt(2/pi))",
     0.6357915369004759, "D_B(p, p*), statistical measure"),
    ("cl-bures-center-flat", "sqrt(2 - sqrt(pi))", "sqrt(2 - sqrt(pi))", 0.4770179756513208,
     "D_B(p, p*), flat measure"),
    ("cl-bures-pair-stat", "sqrt(2 - 4/pi)", "sqrt(2 - 4/pi)", 0.8525024664274217,
     "D_B(p, q), statistical measure"),
    ("cl-bures-pair-flat", "sqrt(2 - pi/2)", "sqrt(2 - pi/2)", 0.6551363775620336,
     "D_B(p, q), flat measure"),
    ("cl-l1-center-stat", "sqrt(2/(pi e))", "sqrt(2/(pi*e))", 0.48394144903828673,
     "L1/2 (p, p*), statistical measure"),
    ("cl-l1-center-flat", "1/e", "exp(-1)", 0.36787944117144233, "L1/2 (p, p*), flat measure"),
    ("cl-l1-pair-stat", "2/pi", "2/pi", 0.6366197723675814, "L1/2 (p, q), statistical measure"),
    ("cl-l1-pair-flat", "1/2", "1/2", 0.5, "L1/2 (p, q), flat measure"),
    # dependence on c (value at c = 1 stored)
    ("cdep-trace-pair", "4 sqrt(2)/(3 pi sqrt(c))", "4*sqrt(2)/(3*pi*sqrt(c))",
     0.6002108774380709, "large-c asymptote of D_Tr(rho, sigma)"),
    ("cdep-trace-center", "4/(3 pi sqrt(c))", "4/(3*pi*sqrt(c))", 0.4244131815783876,
     "large-c asymptote of D_Tr(rho, 1/N)"),
    ("cdep-hs-pair", "sqrt(2)/sqrt(c)", "sqrt(2/c)", 1.4142135623730951,
     "sqrt(N) ||rho - sigma||_2 at ratio c"),
    ("cdep-hs-center", "1/sqrt(c)", "1/sqrt(c)", 1.0, "sqrt(N) ||rho - 1/N||_2 at ratio c"),
    # unit ball
    ("ball-1", "2/3", "2/3", 0.6666666666666666, "n = 1, all three norms"),
    ("ball-2-l1", "(647 + 120 pi)/(90 pi^2)", "(647 + 120*pi)/(90*pi**2)", 1.1527999128738602,
     "n = 2, L1"),
    ("ball-2-l2", "128/(45 pi)", "128/(45*pi)", 0.9054147873672268, "n = 2, L2"),
    ("ball-2-linf", "0.8151 (tabulated)", None, 0.8151, "n = 2, Linf"),
    ("ball-3-l1", "55 pi/112", "55*pi/112", 1.5427463923878448,
     "n = 3, L1; the tabulated decimal 1.15428 disagrees with this expression"),
    ("ball-3-l1-printed", "1.15428 (tabulated decimal)", None, 1.15428,
     "n = 3, L1 decimal as tabulated"),
    ("ball-3-l2", "36/35", "36/35", 1.0285714285714285, "n = 3, L2"),
    ("ball-3-linf", "0.8549 (tabulated)", None, 0.8549, "n = 3, Linf"),
]

REGISTRY: Dict[str, Constant] = {r[0]: Constant(*r) for r in _ROWS}


def get(name: str) -> Constant:
    try:
        return REGISTRY[name]
    except KeyError:
        raise ContractError(f"unknown constant {name!r}") from None


def value(name: str, c: float = 1.0) -> float:
    return get(name).value(c)


# Distance table: rows (metric) x columns (vs 1/N, generic pair, orthogonal pure pair).
# Numbers are registry names or exact literals.
TABLE1 = {
    "tr": ("trace-center", "trace-generic", 1.0),
    "hs": (0.0, 0.0, 1.0),
    "inf": (0.0, 0.0, 1.0),
    "t": ("transmission-center", "transmission-generic", "transmission-pure"),
    "b": ("bures-center", "bures-generic", math.sqrt(2.0)),
    "e": ("entropic-center", "entropic-generic", "transmission-pure"),
    "h": ("hellinger-center", "hellinger-generic", math.sqrt(2.0)),
}
TABLE1_COLUMNS = ("center", "generic", "pure")


def table1_reference(metric: str, column: str) -> float:
    entry = TABLE1[metric][TABLE1_COLUMNS.index(column)]
    return value(entry) if isinstance(entry, str) else float(entry)
