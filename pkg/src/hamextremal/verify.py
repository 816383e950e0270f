"""Exhaustive checks of extremal numbers, extremal graph sets and degree bounds.

Every public check returns an ExtremalReport.  Reports serialize to JSON with
sorted keys and sorted canonical graph6 lists, so the same inputs give the
same bytes regardless of how many worker processes ran.
"""
from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import partial
from math import comb

from .conditions import degree_hypothesis
from .constructions import (
    EXCEPTIONAL_PARTS,
    colex_graph,
    colex_turan_graph,
    complete_bipartite,
    exceptional_graph,
    g_family,
    g_star_via_colex,
    h_family,
    j_family,
)
from .enumeration import EnumConstraints, map_units
from .formulas import (
    HAM,
    HAMCONN,
    TRACE,
    Property,
    PropertyKind,
    bipartite_extremal_parts,
    count_cliques,
    edge_bound,
    kham,
    kpath,
    multipartite_edges,
    turan_edges,
)
from .graph_core import Graph, canonical_form, clique_number_at_most, complete_multipartite, degree_sequence
from .properties import has_property

SCHEMA = 1
BUDGET_N = 10


class Verdict(str, Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    OUT_OF_HYPOTHESIS = "out_of_hypothesis"
    WITNESS_ONLY = "witness_only"


class BudgetRefusal(ValueError):
    """The request needs more exhaustive search than the budget allows."""


@dataclass(frozen=True)
class Metric:
    kind: str = "edges"
    t: int = 2

    def __post_init__(self):
        if self.kind not in ("edges", "cliques"):
            raise ValueError(f"unknown metric {self.kind!r}")
        if self.kind == "cliques" and self.t < 2:
            raise ValueError("clique size t must be at least 2")

    @classmethod
    def parse(cls, text: str) -> "Metric":
        m = re.fullmatch(r"\s*(edges|cliques)\s*(?:[(:]\s*(\d+)\s*\)?)?\s*", text)
        if not m:
            raise ValueError(f"bad metric {text!r}")
        if m.group(1) == "edges":
            return cls()
        if m.group(2) is None:
            raise ValueError("cliques metric needs t, e.g. cliques(3)")
        return cls("cliques", int(m.group(2)))

    @property
    def label(self) -> str:
        return "edges" if self.kind == "edges" else f"cliques({self.t})"

    def value(self, g: Graph) -> int:
        return g.num_edges if self.kind == "edges" else count_cliques(g, self.t)


EDGES = Metric()


def _keys(graphs) -> list[str]:
    return sorted({canonical_form(g).graph6 for g in graphs})


@dataclass
class ExtremalReport:
    theorem: str
    params: dict
    verdict: Verdict
    computed_max: int | None = None
    predicted_max: int | None = None
    extremal_graph6: list[str] = field(default_factory=list)
    predicted_graph6: list[str] = field(default_factory=list)
    set_relation: str | None = None
    checks: list[dict] = field(default_factory=list)
    note: str = ""
    runtime_ms: int | None = None

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.MISMATCH

    @property
    def missing(self) -> list[str]:
        return sorted(set(self.predicted_graph6) - set(self.extremal_graph6))

    @property
    def unexpected(self) -> list[str]:
        if self.set_relation != "equal":
            return []
        return sorted(set(self.extremal_graph6) - set(self.predicted_graph6))

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "schema": SCHEMA,
            "theorem": self.theorem,
            "params": dict(self.params),
            "verdict": self.verdict.value,
            "computed_max": self.computed_max,
            "predicted_max": self.predicted_max,
            "extremal_graph6": list(self.extremal_graph6),
            "predicted_graph6": list(self.predicted_graph6),
            "set_relation": self.set_relation,
            "missing": self.missing,
            "unexpected": self.unexpected,
            "checks": list(self.checks),
            "note": self.note,
            # wall time differs run to run; it is only filled in on request
            "runtime_ms": self.runtime_ms if timing else None,
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"


CSV_FIELDS = ("theorem", "n", "r", "t", "k", "computed_max", "predicted_max", "verdict", "extremal_count")


def csv_row(rep: ExtremalReport) -> dict:
    p = rep.params
    return {
        "theorem": rep.theorem, "n": p.get("n"), "r": p.get("r"), "t": p.get("t"), "k": p.get("k"),
        "computed_max": rep.computed_max, "predicted_max": rep.predicted_max,
        "verdict": rep.verdict.value, "extremal_count": len(rep.extremal_graph6),
    }


def _timed(fn):
    def wrapper(*args, **kw):
        t0 = time.perf_counter()
        rep = fn(*args, **kw)
        rep.runtime_ms = int((time.perf_counter() - t0) * 1000)
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# ---------------------------------------------------------------- registry

def _exceptions(prop: Property, n: int, r: int) -> list[str]:
    kind = prop.kind
    out = []
    if kind is PropertyKind.TRACE:
        if r >= 5 and n == 4:
            out.append("K31")
        if (r, n) == (4, 6):
            out.append("K411")
    elif kind is PropertyKind.HAM:
        if r >= 5 and n == 5:
            out.append("K311")
        if (r, n) == (4, 11):
            out.append("K6221")
        if (r, n) == (5, 7):
            out.append("K4111")
        if (r, n) == (5, 9):
            out.append("K51111")
    elif kind in (PropertyKind.KPATH, PropertyKind.KHAM):
        if prop.k == 0 and (r, n) == (4, 11):
            out.append("K6221")
    return out


def _base_family(prop: Property, n: int, r: int) -> list[Graph]:
    if prop.kind is PropertyKind.KPATH:
        return j_family(n, r, prop.k)
    return g_family(n, r, prop.ell)


def _clique_threshold(prop: Property, r: int) -> int:
    k = prop.k
    kind = prop.kind
    if kind is PropertyKind.TRACE:
        return 20 if r == 3 else 1
    if kind in (PropertyKind.HAM, PropertyKind.CHORDED):
        return {3: 26, 4: 11}.get(r, 1)
    if kind is PropertyKind.HAMCONN:
        return {3: 32, 4: 16}.get(r, 11)
    if r == 3:
        return 6 * k + 26
    return 6 * k + 11 if r <= 7 else 2 * k + 9


@dataclass(frozen=True)
class Prediction:
    theorem: str
    value: int | None
    family: tuple[Graph, ...] = ()
    relation: str | None = None
    reason: str = ""


def theorem_id(prop: Property, metric: Metric = EDGES) -> str:
    if metric.kind == "edges":
        return prop.label
    return f"clique_extremal({prop.label},{metric.t})"


def predict(prop: Property, n: int, r: int, metric: Metric = EDGES) -> Prediction:
    """The registry's claim at (n, r): extremal value, family, and how the family is claimed."""
    tid = theorem_id(prop, metric)
    if metric.kind == "cliques":
        if r < 3:
            return Prediction(tid, None, reason="clique bounds are stated for r >= 3 only")
        need = max(_clique_threshold(prop, r), prop.ell + 3)
        if n < need:
            return Prediction(tid, None, reason=f"requires n >= {need}")
        star = g_star_via_colex(n, r, prop.ell)
        if star.n != n:
            return Prediction(tid, None, reason="colex Turán graph does not fit on n vertices")
        return Prediction(tid, count_cliques(star, metric.t), (star,), "contains")
    b = edge_bound(prop, n, r)
    if not b.ok:
        return Prediction(tid, None, reason=b.reason)
    if r == 2:
        fam = (complete_bipartite(*bipartite_extremal_parts(prop, n)),)
    else:
        fam = tuple(_base_family(prop, n, r)) + tuple(exceptional_graph(x) for x in _exceptions(prop, n, r))
    relation = "equal" if b.characterized and b.exact_family else "contains"
    return Prediction(tid, b.value, fam, relation)


def _check_domain(prop: Property, n: int) -> None:
    if prop.kind is PropertyKind.KPATH and not 0 <= prop.k <= n - 2:
        raise ValueError(f"kpath needs 0 <= k <= n-2, got k={prop.k}, n={n}")
    if prop.kind is PropertyKind.KHAM and not 0 <= prop.k <= n - 3:
        raise ValueError(f"kham needs 0 <= k <= n-3, got k={prop.k}, n={n}")
    if prop.kind is PropertyKind.CHORDED and n < 4:
        raise ValueError("chorded pancyclicity needs n >= 4")


# ---------------------------------------------------------------- search

def _top_level(prop: Property, metric: Metric, graphs: list[Graph]):
    """Highest metric level in this batch holding a graph without ``prop``, with its graphs."""
    levels: dict[int, list[Graph]] = {}
    for g in graphs:
        levels.setdefault(metric.value(g), []).append(g)
    for value in sorted(levels, reverse=True):
        lacking = [g for g in levels[value] if not has_property(g, prop)]
        if lacking:
            return value, _keys(lacking)
    return None


def _merge(parts) -> tuple[int | None, list[str]]:
    best = None
    keys: set[str] = set()
    for part in parts:
        if part is None:
            continue
        value, ks = part
        if best is None or value > best:
            best, keys = value, set(ks)
        elif value == best:
            keys.update(ks)
    return best, sorted(keys)


def _max_clique(n: int, r: int) -> int | None:
    return r if r < n else None


def _edge_guess(prop: Property, n: int, r: int) -> int:
    if r >= 3:
        return min(comb(n, 2), turan_edges(max(n - 1, 0), r) + prop.ell + 1)
    if r == 2 and prop.kind is not PropertyKind.CHORDED and n >= 2:
        a, b = bipartite_extremal_parts(prop, n)
        return max(0, a * b)
    return comb(n, 2)


def search_extremal(prop: Property, n: int, r: int, metric: Metric = EDGES,
                    start: int | None = None, jobs: int = 1) -> tuple[int | None, list[str]]:
    """Maximum of ``metric`` over n-vertex K_{r+1}-free graphs lacking ``prop``, and the argmax.

    For edges the search runs over descending edge windows: first every graph
    with at least ``start`` edges, then lower windows until some graph lacking
    the property turns up.  Only the first non-empty window matters, since all
    later windows hold fewer edges.  Clique counts are not monotone in the edge
    window, so that metric scans everything.
    """
    fn = partial(_top_level, prop, metric)
    mc = _max_clique(n, r)
    if metric.kind != "edges":
        return _merge(map_units(EnumConstraints(n, max_clique=mc), fn, jobs))
    lo = _edge_guess(prop, n, r) if start is None else start
    lo = max(0, min(lo, comb(n, 2)))
    hi = None
    step = 1
    while True:
        c = EnumConstraints(n, max_clique=mc, min_edges=lo, max_edges=hi)
        best, keys = _merge(map_units(c, fn, jobs))
        if best is not None or lo == 0:
            return best, keys
        hi = lo - 1
        lo = max(0, lo - step)
        step *= 2


def _params(prop: Property, n: int, r: int, metric: Metric) -> dict:
    p = {"property": prop.kind.value, "n": n, "r": r, "metric": metric.label}
    if prop.kind in (PropertyKind.KPATH, PropertyKind.KHAM):
        p["k"] = prop.k
    if metric.kind == "cliques":
        p["t"] = metric.t
    return p


def _witness_entries(graphs, prop: Property, r: int, metric: Metric, target: int | None) -> list[dict]:
    out = []
    for g in sorted(graphs, key=lambda h: canonical_form(h)):
        value = metric.value(g)
        out.append({
            "graph6": canonical_form(g).graph6,
            "value": value,
            "clique_free": clique_number_at_most(g, r),
            "lacks_property": not has_property(g, prop),
            "attains": target is not None and value == target,
        })
    return out


@_timed
def extremal_number(prop: Property, n: int, r: int, metric: Metric = EDGES, jobs: int = 1,
                    witness_only: bool = False) -> ExtremalReport:
    """Exhaustive extremal value and argmax set, compared with the registry."""
    if r < 2:
        raise ValueError("r must be at least 2")
    _check_domain(prop, n)
    pred = predict(prop, n, r, metric)
    params = _params(prop, n, r, metric)
    predicted = _keys(pred.family)
    if witness_only or n > BUDGET_N:
        if not witness_only:
            raise BudgetRefusal(
                f"n={n} exceeds the exhaustive budget n <= {BUDGET_N}; rerun with witness-only "
                "mode to check the predicted extremal graphs, or pipe an external catalog")
        if pred.value is None:
            return ExtremalReport(pred.theorem, params, Verdict.OUT_OF_HYPOTHESIS,
                                  note=pred.reason)
        checks = _witness_entries(pred.family, prop, r, metric, pred.value)
        good = all(c["clique_free"] and c["lacks_property"] and c["attains"] for c in checks)
        return ExtremalReport(
            pred.theorem, params, Verdict.WITNESS_ONLY if good else Verdict.MISMATCH,
            predicted_max=pred.value, predicted_graph6=predicted, set_relation=pred.relation,
            checks=checks, note="predicted graphs checked individually; no exhaustive search")
    best, keys = search_extremal(prop, n, r, metric, start=pred.value, jobs=jobs)
    if pred.value is None:
        return ExtremalReport(pred.theorem, params, Verdict.OUT_OF_HYPOTHESIS, computed_max=best,
                              extremal_graph6=keys, note=pred.reason)
    if pred.relation == "equal":
        same_set = set(keys) == set(predicted)
    else:
        same_set = set(predicted) <= set(keys)
    verdict = Verdict.MATCH if best == pred.value and same_set else Verdict.MISMATCH
    return ExtremalReport(pred.theorem, params, verdict, computed_max=best, predicted_max=pred.value,
                          extremal_graph6=keys, predicted_graph6=predicted, set_relation=pred.relation)


# ---------------------------------------------------------------- witnesses

@dataclass(frozen=True)
class WitnessClaim:
    r: int
    lacks: tuple[Property, ...]
    stated_edges: int
    ell: int
    compare: str = "=="  # stated_edges vs e(T_r(n-1)) + ell + 1


WITNESS_CLAIMS: dict[str, WitnessClaim] = {
    "K31": WitnessClaim(5, (TRACE,), 3, -1),
    "K411": WitnessClaim(4, (TRACE,), 9, -1),
    "K311": WitnessClaim(5, (HAM,), 7, 0),
    "K6221": WitnessClaim(4, (HAM, kham(0), kpath(0)), 38, 0),
    "K4111": WitnessClaim(5, (HAM,), 15, 0),
    "K51111": WitnessClaim(5, (HAM,), 26, 0),
    # bound taken one vertex lower: this graph has 2*4+9 = 17 vertices against T_8(16)
    "K72221111": WitnessClaim(8, (kpath(4), kham(4)), 112, 4, "<"),
}


def normalize_witness_name(name: str) -> str:
    digits = "".join(re.findall(r"\d", name))
    key = "K" + digits
    if key not in WITNESS_CLAIMS:
        raise KeyError(f"unknown exceptional graph {name!r}; known: {', '.join(WITNESS_CLAIMS)}")
    return key


@_timed
def witness_check(name: str) -> ExtremalReport:
    """Edge count, clique-freeness and property failures of a named exceptional graph."""
    key = normalize_witness_name(name)
    claim = WITNESS_CLAIMS[key]
    parts = EXCEPTIONAL_PARTS[key]
    g = exceptional_graph(key)
    n = g.n
    host_n = 16 if key == "K72221111" else n - 1
    bound = turan_edges(host_n, claim.r) + claim.ell + 1
    e = g.num_edges
    checks = [
        {"check": "edge_count", "value": e, "expected": claim.stated_edges,
         "ok": e == claim.stated_edges == multipartite_edges(parts)},
        {"check": f"edges {claim.compare} bound", "value": e, "expected": bound,
         "ok": e == bound if claim.compare == "==" else e < bound},
        {"check": f"K{claim.r + 1}-free", "ok": clique_number_at_most(g, claim.r)},
    ]
    for prop in claim.lacks:
        checks.append({"check": f"lacks {prop.label}", "ok": not has_property(g, prop)})
    good = all(c["ok"] for c in checks)
    params = {"graph": key, "parts": list(parts), "n": n, "r": claim.r}
    return ExtremalReport(f"witness({key})", params, Verdict.WITNESS_ONLY if good else Verdict.MISMATCH,
                          computed_max=e, predicted_max=bound,
                          extremal_graph6=[canonical_form(g).graph6], checks=checks,
                          note="single-graph check")


# ---------------------------------------------------------------- degree bounds

def degree_theorem_min_n(r: int, ell: int) -> int | None:
    """Least n covered by the degree-hypothesis edge bound, or None when r < 3."""
    if r >= 8:
        return 2 * ell + 9
    if 4 <= r <= 7:
        a = 3 + ell + Fraction(4 * (ell + 2), r - 3)
        b = 5 + ell + Fraction(r + 2 * ell + 7, 2 * r - 2)
        m = max(a, b)
        return -(-m.numerator // m.denominator)
    if r == 3:
        return 6 * ell + 26
    return None


def _h_allowed(r: int, ell: int, n: int) -> bool:
    if 4 <= r <= 7:
        return True
    return r == 8 and ell % 4 == 0 and n == 2 * ell + 9


def _degree_batch(r: int, ell: int, bound: int, graphs: list[Graph]):
    above, equal = [], []
    for g in graphs:
        e = g.num_edges
        if e < bound or degree_hypothesis(degree_sequence(g), ell) is None:
            continue
        (above if e > bound else equal).append(g)
    return _keys(above), _keys(equal)


@_timed
def verify_degree_theorem(r: int, ell: int, n: int, jobs: int = 1) -> ExtremalReport:
    """Graphs meeting the low-degree hypothesis obey e <= e(T_r(n-1)) + ell + 1; equality set as predicted."""
    params = {"r": r, "ell": ell, "n": n}
    tid = f"degree({r},{ell})"
    if ell < -1:
        raise ValueError("ell must be at least -1")
    need = degree_theorem_min_n(r, ell)
    if need is None or n < need or n < ell + 3:
        floor_n = None if need is None else max(need, ell + 3)
        return ExtremalReport(tid, params, Verdict.OUT_OF_HYPOTHESIS,
                              note=f"requires n >= {floor_n}" if floor_n else "requires r >= 3")
    if n > BUDGET_N:
        raise BudgetRefusal(f"n={n} exceeds the exhaustive budget n <= {BUDGET_N}")
    bound = turan_edges(n - 1, r) + ell + 1
    fam = g_family(n, r, ell)
    if _h_allowed(r, ell, n):
        for h in h_family(n, r, ell):
            if h.num_edges == bound and degree_hypothesis(degree_sequence(h), ell) is not None:
                fam.append(h)
    predicted = _keys(fam)
    c = EnumConstraints(n, max_clique=_max_clique(n, r), min_edges=bound)
    results = map_units(c, partial(_degree_batch, r, ell, bound), jobs)
    above = sorted({k for a, _ in results for k in a})
    equal = sorted({k for _, q in results for k in q})
    computed = bound + 1 if above else (bound if equal else None)
    ok = not above and set(equal) == set(predicted)
    checks = [{"check": "no graph above bound", "ok": not above, "offenders": above}]
    return ExtremalReport(tid, params, Verdict.MATCH if ok else Verdict.MISMATCH,
                          computed_max=computed, predicted_max=bound, extremal_graph6=equal,
                          predicted_graph6=predicted, set_relation="equal", checks=checks,
                          note="computed_max is bound+1 when some graph exceeds the bound")


# ---------------------------------------------------------------- clique counts

CLIQUE_M_MAX = 15


def _clique_batch(t: int, graphs: list[Graph]) -> dict[int, tuple[int, str]]:
    best: dict[int, tuple[int, str]] = {}
    for g in graphs:
        e = g.num_edges
        v = count_cliques(g, t)
        cur = best.get(e)
        if cur is None or v > cur[0]:
            best[e] = (v, canonical_form(g).graph6)
    return best


@_timed
def verify_clique_bounds(t: int, m_max: int, r: int | None = None, n_max: int = 8,
                         jobs: int = 1) -> ExtremalReport:
    """k_t(G) against the colex graph (or r-partite colex Turán graph) with the same edge budget.

    Covers every graph with at most ``m_max`` edges on at most ``n_max``
    vertices; larger sparse graphs are not reached.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    if not 0 <= m_max <= CLIQUE_M_MAX:
        raise BudgetRefusal(f"m_max must lie in 0..{CLIQUE_M_MAX}")
    if n_max > 9:
        raise BudgetRefusal("n_max above 9 is out of budget")
    if r is not None and r < 2:
        raise ValueError("r must be at least 2")

    def extremal(m: int) -> Graph:
        return colex_graph(m) if r is None else colex_turan_graph(m, r)

    best: dict[int, tuple[int, str]] = {}
    for n in range(1, n_max + 1):
        c = EnumConstraints(n, max_clique=None if r is None else _max_clique(n, r), max_edges=m_max)
        for part in map_units(c, partial(_clique_batch, t), jobs):
            for e, (v, key) in part.items():
                cur = best.get(e)
                if cur is None or v > cur[0] or (v == cur[0] and key < cur[1]):
                    best[e] = (v, key)
    rows = []
    running = 0
    offenders = []
    for m in range(m_max + 1):
        if m in best:
            running = max(running, best[m][0])
        bound_graph = extremal(m)
        bound = count_cliques(bound_graph, t) if bound_graph.n >= t else 0
        ok = running <= bound
        if best.get(m) and best[m][0] > bound:
            offenders.append(best[m][1])
        rows.append({"m": m, "computed": running, "bound": bound, "ok": ok,
                     "bound_graph6": canonical_form(bound_graph).graph6})
    top = rows[-1]
    covered = extremal(m_max).n <= n_max
    ok = all(row["ok"] for row in rows) and (not covered or top["computed"] == top["bound"])
    tid = f"kk_clique({t})" if r is None else f"frohmader({t},{r})"
    params = {"t": t, "m_max": m_max, "n_max": n_max}
    if r is not None:
        params["r"] = r
    return ExtremalReport(tid, params, Verdict.MATCH if ok else Verdict.MISMATCH,
                          computed_max=top["computed"], predicted_max=top["bound"],
                          extremal_graph6=sorted(set(offenders)), checks=rows,
                          note=f"graphs on at most {n_max} vertices; extremal_graph6 lists any offenders")


# ---------------------------------------------------------------- family checks

def kpath_family_min_n(r: int, k: int) -> Fraction:
    """n above which every non-k-path-Hamiltonian member of the k-family has a traceable attachment neighborhood."""
    return max(8 + k + Fraction(2 * k + 12, r - 2), k + 2 * r + Fraction(k, r - 1))


def _shape_keys(n: int, r: int, ell: int) -> set[str]:
    """Complete multipartite graphs with one part of size (n+1-ell)/2, the rest of size <= 2, K_{r+1}-free."""
    if (n + 1 - ell) % 2:
        return set()
    big = (n + 1 - ell) // 2
    rest = n - big
    out = set()
    for twos in range(rest // 2 + 1):
        ones = rest - 2 * twos
        parts = [big] + [2] * twos + [1] * ones
        if len(parts) <= r and big >= 1:
            out.add(canonical_form(complete_multipartite(sorted(parts, reverse=True))).graph6)
    return out


def _family_props(ell: int) -> list[Property]:
    props = []
    if ell == -1:
        props.append(TRACE)
    if ell == 0:
        props.append(HAM)
    if ell == 1:
        props.append(HAMCONN)
    if ell >= 0:
        props += [kpath(ell), kham(ell)]
    return props


def _check(label: str, ok: bool, offenders=(), applicable: bool = True) -> dict:
    return {"check": label, "ok": ok, "applicable": applicable, "offenders": sorted(offenders)}


@_timed
def family_characterization_check(n: int, r: int, k: int) -> ExtremalReport:
    """Which members of the G, J and H families lack the property tied to ``k``.

    ``k`` plays the role of ell: -1 for traceability, 0 for Hamiltonicity,
    1 for Hamiltonian-connectedness, and every k >= 0 also for k-path and
    k-Hamiltonicity.
    """
    params = {"n": n, "r": r, "k": k}
    tid = f"family({k})"
    if not (2 <= r <= n - 1 and -1 <= k <= n - 3):
        return ExtremalReport(tid, params, Verdict.OUT_OF_HYPOTHESIS,
                              note="needs 2 <= r <= n-1 and -1 <= k <= n-3")
    ell = k
    gs = g_family(n, r, ell)
    checks = []
    for prop in _family_props(ell):
        if prop.kind is PropertyKind.KPATH:
            members = j_family(n, r, ell)
            name = "J"
        else:
            members = gs
            name = "G"
        bad = [canonical_form(g).graph6 for g in members if has_property(g, prop)]
        checks.append(_check(f"{name} members lack {prop.label}", not bad, bad))
    if ell >= 0:
        failing = {canonical_form(g).graph6 for g in gs if has_property(g, kpath(ell)) is False}
        js = set(_keys(j_family(n, r, ell)))
        applies = r >= 3 and n >= kpath_family_min_n(r, ell)
        ok = failing == js if applies else js <= failing
        checks.append(_check(f"G members lacking {kpath(ell).label} are exactly J", ok,
                             failing ^ js if applies else js - failing, applies))
    if n >= ell + 5:
        hs = h_family(n, r, ell)
        shapes = _shape_keys(n, r, ell)
        hkeys = set(_keys(hs))
        for prop in _family_props(ell):
            failing = {canonical_form(h).graph6 for h in hs if not has_property(h, prop)}
            want = shapes & hkeys
            checks.append(_check(f"H members lacking {prop.label} are the one-big-part shapes",
                                 failing == want, failing ^ want))
    good = all(c["ok"] for c in checks)
    return ExtremalReport(tid, params, Verdict.MATCH if good else Verdict.MISMATCH, checks=checks,
                          note="family sizes: G=%d" % len(gs))
