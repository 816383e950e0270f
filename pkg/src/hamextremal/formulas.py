"""Exact edge and clique quantities: Turán counts, extremal edge bounds, k_t."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb

from .graph_core import Graph


class PropertyKind(str, Enum):
    TRACE = "trace"
    HAM = "ham"
    HAMCONN = "hamconn"
    KPATH = "kpath"
    KHAM = "kham"
    CHORDED = "chorded"


@dataclass(frozen=True)
class Property:
    """A Hamiltonicity-type property; ``k`` is used by kpath and kham only."""

    kind: PropertyKind
    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", PropertyKind(self.kind))
        if self.kind in (PropertyKind.KPATH, PropertyKind.KHAM):
            if self.k < 0:
                raise ValueError("k must be non-negative")
        else:
            object.__setattr__(self, "k", 0)

    @property
    def ell(self) -> int:
        """Offset in the bound e(T_r(n-1)) + ell + 1."""
        return {
            PropertyKind.TRACE: -1,
            PropertyKind.HAM: 0,
            PropertyKind.CHORDED: 0,
            PropertyKind.HAMCONN: 1,
            PropertyKind.KPATH: self.k,
            PropertyKind.KHAM: self.k,
        }[self.kind]

    @property
    def label(self) -> str:
        if self.kind in (PropertyKind.KPATH, PropertyKind.KHAM):
            return f"{self.kind.value}({self.k})"
        return self.kind.value

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Property":
        """Accepts 'ham', 'kpath', 'kpath(2)', 'kham:1' and similar."""
        text = text.strip().lower()
        for sep in ("(", ":"):
            if sep in text:
                name, _, rest = text.partition(sep)
                return cls(PropertyKind(name), int(rest.rstrip(")")))
        kind = PropertyKind(text)
        return cls(kind, k or 0)


TRACE = Property(PropertyKind.TRACE)
HAM = Property(PropertyKind.HAM)
HAMCONN = Property(PropertyKind.HAMCONN)
CHORDED = Property(PropertyKind.CHORDED)


def kpath(k: int) -> Property:
    return Property(PropertyKind.KPATH, k)


def kham(k: int) -> Property:
    return Property(PropertyKind.KHAM, k)


@dataclass(frozen=True)
class TuranParams:
    n: int
    r: int

    @property
    def s(self) -> int:
        return self.n % self.r


def turan_part_sizes(n: int, r: int) -> tuple[int, ...]:
    """Balanced part sizes of T_r(n), largest first, empty parts dropped."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    q, s = divmod(n, r)
    sizes = [q + 1] * s + [q] * (r - s)
    return tuple(x for x in sizes if x)


def turan_edges(n: int, r: int) -> int:
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    q, s = divmod(n, r)
    return comb(n, 2) - ((r - s) * comb(q, 2) + s * comb(q + 1, 2))


def turan_edges_rational(n: int, r: int) -> Fraction:
    """(r-1)n^2/(2r) - s(r-s)/(2r), evaluated exactly."""
    s = n % r
    return Fraction((r - 1) * n * n, 2 * r) - Fraction(s * (r - s), 2 * r)


def multipartite_edges(sizes) -> int:
    n = sum(sizes)
    return comb(n, 2) - sum(comb(s, 2) for s in sizes)


@dataclass(frozen=True)
class BoundResult:
    """Outcome of an edge-bound query.

    ``value`` is set only when the bound is proven at (n, r).  ``required_n``
    is the least n for which the bound holds, ``characterized_n`` the least n
    for which the extremal graphs are characterized (None when no
    characterization exists), and ``exact_family`` tells whether that
    characterization is an "if and only if".
    """

    prop: Property
    n: int
    r: int
    value: int | None
    required_n: int | None
    characterized_n: int | None
    exact_family: bool
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.value is not None

    @property
    def characterized(self) -> bool:
        return self.ok and self.characterized_n is not None and self.n >= self.characterized_n


class HypothesisError(ValueError):
    def __init__(self, message: str, required_n: int | None = None):
        self.required_n = required_n
        super().__init__(message)


def _r_band(r: int, r3, r4, r5):
    if r == 3:
        return r3
    if r == 4:
        return r4
    return r5


def _thresholds(prop: Property, r: int) -> tuple[int, int | None, bool]:
    """(bound n, characterization n, iff?) for r >= 3."""
    k = prop.k
    kind = prop.kind
    if kind is PropertyKind.TRACE:
        t = 20 if r == 3 else 1
        return t, t, True
    if kind is PropertyKind.HAM:
        t = _r_band(r, 26, 11, 1)
        return t, t, True
    if kind is PropertyKind.HAMCONN:
        t = _r_band(r, 32, 16, 11)
        return t, t, True
    if kind is PropertyKind.CHORDED:
        t = _r_band(r, 26, 11, 4)
        return t, t, False
    if kind is PropertyKind.KPATH:
        if r == 3:
            return 6 * k + 26, 6 * k + 26, True
        if r <= 7:
            return 5 * k + 11, 6 * k + 2 * r + 3, True
        return 2 * k + 9, 2 * k + 2 * r, True
    if kind is PropertyKind.KHAM:
        if r == 3:
            t = 6 * k + 26
        elif r <= 7:
            t = 6 * k + 11
        else:
            t = 2 * k + 9
        return t, t, True
    raise AssertionError(kind)


def bipartite_extremal_parts(prop: Property, n: int) -> tuple[int, int]:
    """Part sizes (a, b) of the complete bipartite graph attaining the r=2 bound."""
    h, H = n // 2, (n + 1) // 2
    kind = prop.kind
    if kind is PropertyKind.TRACE:
        return h - 1, H + 1
    if kind in (PropertyKind.HAM, PropertyKind.KPATH):
        return H - 1, h + 1
    if kind is PropertyKind.HAMCONN:
        return h, H
    if kind is PropertyKind.KHAM:
        if n % 2:
            return (n - 1) // 2, (n + 1) // 2
        if prop.k >= 1:
            return n // 2, n // 2
        return n // 2 - 1, n // 2 + 1
    raise ValueError(f"no triangle-free bound for {prop.label}")


def _bipartite_bound(prop: Property, n: int) -> BoundResult:
    kind = prop.kind
    if kind is PropertyKind.CHORDED:
        return BoundResult(prop, n, 2, None, None, None, False, "no triangle-free bound for chorded pancyclicity")
    need = 6 if kind is PropertyKind.TRACE else 3
    if kind in (PropertyKind.KPATH, PropertyKind.KHAM):
        need = max(3, prop.k + 3)
    # only the non-traceable bound comes with a uniqueness statement (n >= 8)
    char_n = 8 if kind is PropertyKind.TRACE else None
    if n < need:
        return BoundResult(prop, n, 2, None, need, char_n, char_n is not None,
                           f"requires n >= {need}")
    a, b = bipartite_extremal_parts(prop, n)
    return BoundResult(prop, n, 2, a * b, need, char_n, char_n is not None)


def edge_bound(prop: Property, n: int, r: int) -> BoundResult:
    """Maximum edge count of an n-vertex K_{r+1}-free graph lacking ``prop``.

    Only returns a value inside the proven range; otherwise ``value`` is None
    and ``required_n`` says how large n has to be.
    """
    if r < 2:
        return BoundResult(prop, n, r, None, None, None, False, "requires r >= 2")
    if r == 2:
        return _bipartite_bound(prop, n)
    need, char_n, iff = _thresholds(prop, r)
    # the families need a vertex of degree ell+1 <= n-2 next to T_r(n-1)
    floor_n = max(prop.ell + 3, 1)
    need_eff = max(need, floor_n)
    if n < need_eff:
        return BoundResult(prop, n, r, None, need_eff, char_n, iff, f"requires n >= {need_eff}")
    return BoundResult(prop, n, r, turan_edges(n - 1, r) + prop.ell + 1, need_eff, char_n, iff)


def edge_bound_value(prop: Property, n: int, r: int) -> int:
    res = edge_bound(prop, n, r)
    if not res.ok:
        raise HypothesisError(f"{prop.label} bound not proven at n={n}, r={r}: {res.reason}",
                              res.required_n)
    return res.value


def count_cliques(g: Graph, t: int) -> int:
    """Number of t-vertex cliques, by depth-first search over higher neighbors."""
    if t < 1:
        raise ValueError("t must be at least 1")
    adj = g.adj
    n = g.n
    if t == 1:
        return n
    up = [adj[v] >> (v + 1) << (v + 1) for v in range(n)]

    def extend(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            total += extend(cand & up[v], need - 1)
        return total

    return sum(extend(up[v], t - 1) for v in range(n))


def count_cliques_naive(g: Graph, t: int) -> int:
    return sum(
        1 for sub in combinations(range(g.n), t)
        if all(g.has_edge(u, v) for u, v in combinations(sub, 2))
    )


def multipartite_clique_count(sizes, t: int) -> int:
    """k_t of a complete multipartite graph: sum over t-sets of parts of size products."""
    total = 0
    for chosen in combinations(sizes, t):
        prod = 1
        for s in chosen:
            prod *= s
        total += prod
    return total
