"""Command-line front end: ``qdistinct <subcommand> ...``.

Every stochastic subcommand requires ``--seed``.  Output goes to ``--out``
(or stdout) as CSV or JSON; figure-producing subcommands also write a
``<out>.plot.py`` script that plots the emitted data file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
import time
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import constants as K
from . import distances as D
from . import experiments as X
from . import kicked_top as KT
from . import laws as L
from .coherence import chi_cdf, offdiag_histogram
from .ensembles import EnsembleSpec, SeededStream
from .errors import ContractError, NumericalError
from .linalg import eigvalsh


STOCHASTIC = {"sample", "distance", "table1", "converge", "cdep", "tail", "kicked-top",
              "coherence", "entangle", "ball", "classical"}


class Output:
    def __init__(self, columns: Sequence[str], rows: List[dict], references: Optional[dict] = None,
                 plot: Optional[dict] = None, text: Optional[str] = None):
        self.columns = list(columns)
        self.rows = rows
        self.references = references or {}
        self.plot = plot
        self.text = text


# -- formatting -------------------------------------------------------------

def fmt_number(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, str):
        return v
    v = float(v)
    if math.isnan(v) or math.isinf(v):
        return str(v)
    if v != 0 and abs(v) < 1e-4:
        return f"{v:.6e}"
    return f"{v:.10g}"


def to_csv(out: Output) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(out.columns)
    for r in out.rows:
        w.writerow([fmt_number(r.get(c)) for c in out.columns])
    return buf.getvalue()


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return None if (math.isnan(v) or math.isinf(v)) else v
    return v


def to_json(command: str, seed, params: dict, out: Output, wall: float) -> str:
    doc = {"command": command, "seed": seed, "params": params,
           "rows": [{c: r.get(c) for c in out.columns} for r in out.rows],
           "references": out.references, "wall_time_s": wall}
    return json.dumps(_jsonable(doc), indent=2) + "\n"


def schema_path() -> str:
    return os.path.join(os.path.dirname(__file__), "data", "output.schema.json")


_PLOT_TEMPLATE = '''"""Plot {title} from {data_name}."""
import csv
import json
import os

import matplotlib.pyplot as plt

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), {data_name!r})


def load():
    if DATA.endswith(".json"):
        with open(DATA) as f:
            return json.load(f)["rows"]
    with open(DATA, newline="") as f:
        return list(csv.DictReader(f))


def num(v):
    return float(v) if v not in (None, "") else float("nan")


rows = load()
fig, ax = plt.subplots()
{body}
ax.set_xlabel({xlabel!r})
ax.set_ylabel({ylabel!r})
ax.set_title({title!r})
fig.savefig(os.path.splitext(DATA)[0] + ".png", dpi=150)
'''

_PLOT_BODIES = {
    "line": '''xs = [num(r[{x!r}]) for r in rows]
ys = [num(r[{y!r}]) for r in rows]
ax.plot(xs, ys, "o-", label={y!r})
refs = [num(r.get({ref!r})) for r in rows]
if any(v == v for v in refs):
    ax.plot(xs, refs, "k--", label="reference")
ax.legend()''',
    "errorbar": '''xs = [num(r[{x!r}]) for r in rows]
ys = [num(r[{y!r}]) for r in rows]
es = [num(r.get("stderr")) for r in rows]
ax.errorbar(xs, ys, yerr=es, fmt="o", label="Monte Carlo")
refs = [num(r.get({ref!r})) for r in rows]
if any(v == v for v in refs):
    ax.plot(xs, refs, "k--", label="reference")
ax.legend()''',
    "hist": '''vals = [num(r[{y!r}]) for r in rows if r["series"] == "sample"]
ax.hist(vals, bins=80, density=True, alpha=0.6, label="sample")
curve = [(num(r[{x!r}]), num(r["density"])) for r in rows if r["series"] == "law"]
if curve:
    ax.plot([c[0] for c in curve], [c[1] for c in curve], "r-", label="limit law")
ax.legend()''',
    "bars": '''lo = [num(r["bin_lo"]) for r in rows]
hi = [num(r["bin_hi"]) for r in rows]
ax.bar(lo, [num(r["density"]) for r in rows], width=[b - a for a, b in zip(lo, hi)],
       align="edge", alpha=0.6, label="sample")
ax.plot([(a + b) / 2 for a, b in zip(lo, hi)], [num(r["reference"]) for r in rows], "r-",
        label="reference")
ax.legend()''',
}


def write_plot_script(path: str, plot: dict):
    body = _PLOT_BODIES[plot["kind"]].format(x=plot.get("x", "x"), y=plot.get("y", "y"),
                                             ref=plot.get("ref", "reference"))
    script = _PLOT_TEMPLATE.format(title=plot["title"], data_name=os.path.basename(path),
                                   body=body, xlabel=plot.get("xlabel", plot.get("x", "")),
                                   ylabel=plot.get("ylabel", plot.get("y", "")))
    with open(path + ".plot.py", "w", encoding="utf-8") as f:
        f.write(script)


# -- argument helpers ---------------------------------------------------------

def int_list(s: str) -> List[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def float_list(s: str) -> List[float]:
    try:
        return [float(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {s!r}")


def grid(s: str) -> np.ndarray:
    try:
        lo, hi, step = (float(x) for x in s.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be LO:HI:STEP, got {s!r}")
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError("grid needs STEP > 0 and HI >= LO")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return np.round(lo + step * np.arange(count), 12)


_DIAG = re.compile(r"^diag\(([^)]*)\)$")
_BASIS = re.compile(r"^basis\((\d+)\s*,\s*(\d+)\)$")


def parse_state(spec: str, n: Optional[int]) -> np.ndarray:
    """``diag(a,b,...)``, ``maximally-mixed``, ``bell`` or ``basis(i,N)``."""
    spec = spec.strip()
    m = _DIAG.match(spec)
    if m:
        vals = [float(x) for x in m.group(1).split(",")]
        return np.diag(vals).astype(complex)
    m = _BASIS.match(spec)
    if m:
        i, dim = int(m.group(1)), int(m.group(2))
        a = np.zeros((dim, dim), dtype=complex)
        a[i, i] = 1.0
        return a
    if spec == "bell":
        psi = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
        return np.outer(psi, psi.conj())
    if spec == "maximally-mixed":
        if n is None:
            raise ContractError("maximally-mixed needs a dimension from the other state or --n")
        return np.eye(n, dtype=complex) / n
    raise ContractError(f"cannot parse state {spec!r}")


def parse_fixed(spec: str, n: Optional[int]):
    parts = spec.split("|")
    if len(parts) != 2:
        raise ContractError("--fixed takes 'STATE|STATE'")
    first = [p for p in parts if p.strip() != "maximally-mixed"]
    dim = parse_state(first[0], n).shape[0] if first else n
    return parse_state(parts[0], dim), parse_state(parts[1], dim)


# -- subcommands ----------------------------------------------------------------

def cmd_pdf(a) -> Output:
    if a.law in ("mp", "smp", "aubrun") and a.c is None:
        raise ContractError(f"--c is required for law {a.law}")
    law = {"mp": lambda: L.MP(a.c), "smp": lambda: L.SMP(a.c), "fc": L.FussCatalan2,
           "semicircle": lambda: L.Semicircle(a.center, a.radius),
           "aubrun": lambda: L.ShiftedSemicircle(a.c)}[a.law]()
    xs = a.grid
    dens = law.pdf(xs)
    rows = [{"x": float(x), "density": float(d)} for x, d in zip(xs, dens)]
    lo, hi = law.support
    refs = {"atom0": law.atom0, "support_lo": lo, "support_hi": hi}
    return Output(["x", "density"], rows, refs,
                  {"kind": "line", "x": "x", "y": "density", "ref": "none",
                   "title": f"{a.law} density"})


def cmd_constants(a) -> Output:
    names = [a.name] if a.name else list(K.REGISTRY)
    items = [K.get(n) for n in names]
    rows = [{"name": c.name, "expression": c.display, "decimal": c.decimal, "note": c.note}
            for c in items]
    text = "\n".join(c.formatted() if a.name else f"{c.name}: {c.formatted()}" for c in items)
    return Output(["name", "expression", "decimal", "note"], rows, {}, None, text + "\n")


def cmd_sample(a) -> Output:
    kind = a.ensemble
    k = a.k if kind == "induced" else None
    if kind == "dirichlet" and a.s is None:
        raise ContractError("--s is required for the dirichlet ensemble")
    spec = EnsembleSpec(kind, a.n, k, a.s)
    root = SeededStream(a.seed)
    rows = []
    for i in range(a.samples):
        x = spec.sample(root.child(i))
        if kind in ("hs", "induced"):
            vals = a.n * eigvalsh(x)
        elif kind in ("pure-c", "pure-r"):
            vals = a.n * np.abs(x) ** 2
        elif kind == "dirichlet":
            vals = a.n * x
        else:
            vals = x
        rows.extend({"sample": i, "index": j, "value": float(v)} for j, v in enumerate(vals))
    return Output(["sample", "index", "value"], rows, {"rescaling": "N" if kind != "ball" else "none"})


def cmd_distance(a) -> Output:
    if a.metric not in D.METRICS:
        raise ContractError(f"unknown metric {a.metric!r}; choose from {sorted(D.METRICS)}")
    if a.fixed:
        rho, sigma = parse_fixed(a.fixed, a.n)
        rep = D.measure(a.metric, rho, sigma, tuple(a.fixed.split("|")))
        row = {"label": f"{a.metric} fixed", "mean": rep.value, "stderr": 0.0, "count": 0,
               "reference": None, "diff": None}
        return Output(X.ROW_FIELDS, [row], {"is_metric": int(rep.is_metric)})
    if a.seed is None:
        raise ContractError("--seed is required unless --fixed is given")
    if a.samples < 2:
        raise ContractError("--samples must be at least 2 for Monte Carlo estimates")
    k = a.k or a.n
    name = f"{a.metric}-{a.against}"
    q = X.QUANTITIES.get(name) or X.Quantity(X._pair if a.against == "pair" else X._center,
                                              D.METRICS[a.metric])
    vals = X.run_samples(lambda s: q(a.n, k, s), a.samples, SeededStream(a.seed), a.threads)
    row = X.summarize(f"{name} N={a.n} K={k}", vals, q.reference(a.n, k))
    return Output(X.ROW_FIELDS, [row.as_dict()])


def _rows(rows) -> List[dict]:
    return [r.as_dict() for r in rows]


def cmd_table1(a) -> Output:
    rows = X.table1(a.n, a.samples, a.seed, a.threads)
    return Output(X.ROW_FIELDS, _rows(rows))


def cmd_converge(a) -> Output:
    q = {"tr": "tr-pair", "bures": "b-pair"}[a.metric]
    rows = X.run_plan(X.dimension_plan(q, a.n_list, a.samples, a.seed), a.threads)
    out = _rows(rows)
    for r, n in zip(out, a.n_list):
        r["n"] = n
    return Output(["n"] + list(X.ROW_FIELDS), out, {},
                  {"kind": "errorbar", "x": "n", "y": "mean", "title": f"{a.metric} vs dimension"})


def cmd_cdep(a) -> Output:
    q = {("tr", "pair"): "tr-pair", ("tr", "center"): "tr-center",
         ("hs", "pair"): "hs-scaled-pair", ("hs", "center"): "hs-scaled-center"}[(a.metric, a.against)]
    limit = {"tr-pair": L.trace_pair_c, "tr-center": L.trace_center_c,
             "hs-scaled-pair": L.hs_pair_scaled_c, "hs-scaled-center": L.hs_center_scaled_c}[q]
    asym = {"tr-pair": "cdep-trace-pair", "tr-center": "cdep-trace-center",
            "hs-scaled-pair": "cdep-hs-pair", "hs-scaled-center": "cdep-hs-center"}[q]
    plan = X.c_plan(q, a.n, a.c_list, a.samples, a.seed)
    rows = X.run_plan(plan, a.threads)
    out = []
    for r, (n, k) in zip(rows, plan.sweep):
        d = r.as_dict()
        c = k / n
        d.update({"c": c, "limit": limit(c), "asymptote": K.value(asym, c)})
        out.append(d)
    return Output(["c"] + list(X.ROW_FIELDS) + ["limit", "asymptote"], out, {},
                  {"kind": "errorbar", "x": "c", "y": "mean", "ref": "limit",
                   "title": f"{q} vs c"})


def cmd_tail(a) -> Output:
    rows = X.concentration_tail(a.n_list, a.eps_tail, a.samples, a.seed, a.threads)
    return Output(X.TAIL_FIELDS, [r.as_dict() for r in rows],
                  {"target": K.value("trace-generic")},
                  {"kind": "errorbar", "x": "n", "y": "fraction", "ref": "none",
                   "title": "exceedance fraction"})


def cmd_kicked_top(a) -> Output:
    cfg = KT.KickedTopConfig(a.j1, a.j2, a.kick, a.eps, a.steps, (a.l1, a.l2))
    if a.mode == "relax":
        series = KT.evolve_reduced_pair(cfg)
        target = K.value("trace-generic")
        rows = [{"t": int(t), "distance": float(d), "reference": target}
                for t, d in zip(series.t, series.distance)]
        refs = {"time_to_band_0.05": series.time_to_band(target, 0.05)}
        return Output(["t", "distance", "reference"], rows, refs,
                      {"kind": "line", "x": "t", "y": "distance", "title": "trace distance relaxation"})
    sp = KT.helstrom_spectrum(cfg, a.realizations, SeededStream(a.seed))
    law = L.SMP(cfg.c)
    vals = sp.values
    cont = law.atom0 > 0
    if cont:
        vals = vals[np.abs(vals) > 1e-8]
    ks = L.ks_distance_to_law(vals, law, continuous_only=cont)
    rows = [{"series": "sample", "x": float(v), "density": None} for v in sp.values]
    lo, hi = law.support
    for x in np.linspace(lo, hi, 401):
        rows.append({"series": "law", "x": float(x), "density": float(law.pdf(x))})
    refs = {"c": cfg.c, "ks_distance": ks, "atom0": law.atom0, "rescaled_by": cfg.n2}
    return Output(["series", "x", "density"], rows, refs,
                  {"kind": "hist", "x": "x", "y": "x", "title": f"Helstrom spectrum, c = {cfg.c:g}"})


def cmd_coherence(a) -> Output:
    field = {"r": "real", "c": "complex"}[a.field]
    if a.kind == "offdiag":
        counts, edges, y = offdiag_histogram(field, a.n, a.samples, SeededStream(a.seed), a.bins)
        from scipy import stats

        cdf = chi_cdf(field)
        ks = float(stats.kstest(y, cdf).statistic)
        mids = (edges[:-1] + edges[1:]) / 2
        ref = (np.sqrt(2 / np.pi) * np.exp(-mids**2 / 2) if field == "real"
               else 2 * mids * np.exp(-mids**2))
        rows = [{"bin_lo": float(l), "bin_hi": float(h), "density": float(c), "reference": float(r)}
                for l, h, c, r in zip(edges[:-1], edges[1:], counts, ref)]
        return Output(["bin_lo", "bin_hi", "density", "reference"], rows,
                      {"ks_distance": ks, "mean_y": float(np.mean(y))},
                      {"kind": "bars", "x": "bin_lo", "y": "density", "title": "off-diagonal moduli"})
    rows = X.coherence_suite(a.n, a.samples, a.seed, field, a.purity, a.threads)
    key = "relent" if a.kind == "rel-ent" else "l1"
    rows = [r for r in rows if key in r.label.split()[-1]]
    return Output(X.ROW_FIELDS, _rows(rows))


def cmd_entangle(a) -> Output:
    if a.kind in ("negativity", "fraction"):
        rows = X.entanglement_suite(a.na, a.nb, a.samples, a.seed, a.threads)
        keep = {"negativity": ("negativity", "half-negativity"), "fraction": ("negative-fraction",)}
        rows = [r for r in rows if r.label in keep[a.kind]]
    else:
        if a.na != a.nb:
            raise ContractError("pure-state suites use a symmetric split; set --na = --nb")
        rows = X.pure_entanglement_suite(a.na, a.samples, a.seed, a.threads)
        want = "g-concurrence" if a.kind == "gconc" else "pure-negativity/N"
        rows = [r for r in rows if r.label == want]
    return Output(X.ROW_FIELDS, _rows(rows))


def cmd_ball(a) -> Output:
    return Output(X.ROW_FIELDS, _rows(X.ball_table(a.n_list, a.samples, a.seed)))


def cmd_classical(a) -> Output:
    rows = X.classical_table(a.n, a.samples, a.seed, a.measure, a.threads)
    if a.quantity != "all":
        rows = [r for r in rows if r.label.split()[-1].startswith(a.quantity)]
    return Output(X.ROW_FIELDS, _rows(rows))


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="master seed (required for stochastic commands)")
    common.add_argument("--samples", type=int, default=200, help="samples per point (default 200)")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads; output does not depend on it")

    p = argparse.ArgumentParser(prog="qdistinct", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pdf", parents=[common], help="limit-law density on a grid")
    s.add_argument("--law", required=True, choices=("mp", "smp", "fc", "semicircle", "aubrun"))
    s.add_argument("--c", type=float)
    s.add_argument("--center", type=float, default=0.0)
    s.add_argument("--radius", type=float, default=2.0)
    s.add_argument("--grid", type=grid, required=True, help="LO:HI:STEP")
    s.set_defaults(func=cmd_pdf)

    s = sub.add_parser("constants", parents=[common], help="asymptotic constants")
    s.add_argument("--name")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("sample", parents=[common], help="draw spectra or vectors")
    s.add_argument("--ensemble", required=True,
                   choices=("hs", "induced", "pure-c", "pure-r", "dirichlet", "ball"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--s", type=float)
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("distance", parents=[common], help="Monte Carlo distance estimate")
    s.add_argument("--metric", required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--against", choices=("pair", "center"), default="pair")
    s.add_argument("--fixed", help="two deterministic states, e.g. 'diag(1,0)|maximally-mixed'")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("table1", parents=[common], help="typical distances table")
    s.add_argument("--n", type=int, default=100)
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("converge", parents=[common], help="mean distance vs dimension")
    s.add_argument("--metric", choices=("tr", "bures"), default="tr")
    s.add_argument("--n-list", type=int_list, default=[2, 4, 8, 16, 32, 64, 128])
    s.set_defaults(func=cmd_converge)

    s = sub.add_parser("cdep", parents=[common], help="mean distance vs rectangularity c")
    s.add_argument("--metric", choices=("tr", "hs"), default="tr")
    s.add_argument("--against", choices=("pair", "center"), default="pair")
    s.add_argument("--n", type=int, default=64)
    s.add_argument("--c-list", type=float_list, default=[1, 2, 4, 8, 16])
    s.set_defaults(func=cmd_cdep)

    s = sub.add_parser("tail", parents=[common], help="concentration exceedance table")
    s.add_argument("--eps-tail", "--eps", dest="eps_tail", type=float, default=0.05)
    s.add_argument("--n-list", type=int_list, default=[8, 16, 32, 64])
    s.set_defaults(func=cmd_tail)

    s = sub.add_parser("kicked-top", parents=[common], help="coupled kicked tops")
    s.add_argument("mode", choices=("spectrum", "relax"))
    s.add_argument("--j1", type=float, default=49.5)
    s.add_argument("--j2", type=float, default=49.5)
    s.add_argument("--kick", type=float, default=6.0)
    s.add_argument("--eps", type=float, default=0.01)
    s.add_argument("--steps", type=int, default=200)
    s.add_argument("--realizations", type=int, default=100)
    s.add_argument("--l1", type=int, default=0)
    s.add_argument("--l2", type=int, default=1)
    s.set_defaults(func=cmd_kicked_top)

    s = sub.add_parser("coherence", parents=[common], help="coherence of random states")
    s.add_argument("--kind", choices=("rel-ent", "l1", "offdiag"), required=True)
    s.add_argument("--n", type=int, default=128)
    s.add_argument("--field", choices=("r", "c"), default="c")
    s.add_argument("--purity", choices=("pure", "mixed"), default="pure")
    s.add_argument("--bins", type=int, default=60)
    s.set_defaults(func=cmd_coherence)

    s = sub.add_parser("entangle", parents=[common], help="entanglement of random states")
    s.add_argument("--kind", choices=("negativity", "fraction", "gconc", "pure-neg"), required=True)
    s.add_argument("--na", type=int, default=10)
    s.add_argument("--nb", type=int, default=10)
    s.set_defaults(func=cmd_entangle)

    s = sub.add_parser("ball", parents=[common], help="distances in the unit ball")
    s.add_argument("--n-list", type=int_list, default=[1, 2, 3])
    s.set_defaults(func=cmd_ball)

    s = sub.add_parser("classical", parents=[common], help="Dirichlet probability vectors")
    s.add_argument("--measure", choices=("flat", "statistical"), default="flat")
    s.add_argument("--quantity", choices=("l1", "bhatt", "bures", "all"), default="all")
    s.add_argument("--n", type=int, default=256)
    s.set_defaults(func=cmd_classical)
    return p


def _params(a) -> dict:
    skip = {"func", "command", "seed", "out", "format", "threads"}
    out = {}
    for k, v in vars(a).items():
        if k in skip:
            continue
        if isinstance(v, np.ndarray):
            v = [float(x) for x in v]
        out[k] = v
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    needs_seed = a.command in STOCHASTIC and not (a.command == "distance" and a.fixed) \
        and not (a.command == "kicked-top" and a.mode == "relax")
    if needs_seed and a.seed is None:
        parser.error(f"{a.command} is stochastic and requires --seed")
    if a.seed is not None and a.seed < 0:
        parser.error("--seed must be non-negative")
    if a.samples < 0 or a.threads < 1:
        parser.error("--samples must be >= 0 and --threads >= 1")
    t0 = time.perf_counter()
    try:
        out = a.func(a)
    except ContractError as e:
        print(f"qdistinct {a.command}: error: {e}", file=sys.stderr)
        return 2
    except NumericalError as e:
        where = f" in {e.module}" if getattr(e, "module", "") else ""
        print(f"qdistinct {a.command}: numerical failure{where}: {e}", file=sys.stderr)
        return 3
    wall = time.perf_counter() - t0

    if a.format is None and out.text is not None:
        payload = out.text
    elif a.format == "json":
        payload = to_json(a.command, a.seed, _params(a), out, wall)
    else:
        payload = to_csv(out)
    if a.out:
        with open(a.out, "w", encoding="utf-8", newline="") as f:
            f.write(payload)
        if out.plot:
            write_plot_script(a.out, out.plot)
    else:
        sys.stdout.write(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
