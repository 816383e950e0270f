"""Named graphs and the T_r(n-1)-plus-low-degree-vertex families."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from .formulas import turan_edges, turan_part_sizes
from .graph_core import (
    MAX_VERTICES,
    CapacityError,
    Graph,
    PartSizes,
    canonical_form,
    clique_number_at_most,
    complete_multipartite,
)


def turan_graph(n: int, r: int) -> Graph:
    return complete_multipartite(turan_part_sizes(n, r))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(PartSizes.of((a, b)))


def colex_graph(m: int) -> Graph:
    """First m pairs in colex order: K_p plus a vertex joined to m - C(p,2) vertices."""
    if m < 0:
        raise ValueError("m must be non-negative")
    p = 0
    while (p + 1) * p // 2 <= m:
        p += 1
    # now C(p,2) <= m < C(p+1,2); p = 1 only when m = 0
    rem = m - p * (p - 1) // 2
    if m == 0:
        return Graph(0)
    g = Graph.complete(p)
    if rem:
        g = g.add_vertex(range(rem))
    return g


def colex_turan_pairs(m: int, r: int) -> list[tuple[int, int]]:
    """First m pairs {i<j} with i != j mod r, ordered by j then i."""
    if r < 2:
        raise ValueError("r must be at least 2")
    out: list[tuple[int, int]] = []
    j = 1
    while len(out) < m:
        for i in range(j):
            if (j - i) % r:
                out.append((i, j))
                if len(out) == m:
                    break
        j += 1
    return out


def colex_turan_graph(m: int, r: int) -> Graph:
    """r-partite colex Turán graph on m edges; vertex v lies in part v mod r."""
    if m < 0:
        raise ValueError("m must be non-negative")
    pairs = colex_turan_pairs(m, r)
    n = max((j for _, j in pairs), default=-1) + 1
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
    return Graph.from_edges(n, pairs)


def _balanced(total: int, slots: int) -> list[int]:
    q, s = divmod(total, slots)
    return [q + 1] * s + [q] * (slots - s)


def g_star(n: int, r: int, ell: int) -> Graph:
    """T_r(n-1) plus a vertex whose neighborhood is T_{r-1}(ell+1) avoiding a smallest part."""
    if r < 2 or n < 1 or ell < -1:
        raise ValueError("need r >= 2, n >= 1, ell >= -1")
    sizes = list(turan_part_sizes(n - 1, r))
    if len(sizes) < r:
        raise ValueError("T_r(n-1) has fewer than r parts; no part to avoid")
    counts = _balanced(ell + 1, r - 1) + [0]
    if any(c > s for c, s in zip(counts, sizes)):
        raise ValueError(f"cannot place T_{r - 1}({ell + 1}) inside T_{r}({n - 1})")
    return _attach(sizes, counts)


def _attach(sizes, counts) -> Graph:
    host = complete_multipartite(sizes)
    nbrs = []
    start = 0
    for s, c in zip(sizes, counts):
        nbrs.extend(range(start, start + c))
        start += s
    return host.add_vertex(nbrs)


class Family(str, Enum):
    G_ELL = "G"
    H_ELL = "H"
    J_K = "J"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    r: int
    ell: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.ell < -1:
            raise ValueError("ell must be at least -1")
        if self.r < 1 or self.n < 0:
            raise ValueError("need r >= 1 and n >= 0")
        if self.n > MAX_VERTICES:
            raise CapacityError(f"{self.n} vertices exceeds capacity {MAX_VERTICES}")


@dataclass(frozen=True)
class AttachmentVector:
    """Neighbors of the added vertex per part of T_r(n-1)."""

    sizes: tuple[int, ...]
    counts: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.counts)

    @property
    def touches_all_parts(self) -> bool:
        return all(self.counts)

    def graph(self) -> Graph:
        return _attach(self.sizes, self.counts)


def attachment_vectors(n: int, r: int, ell: int) -> list[AttachmentVector]:
    """All count vectors with sum ell+1, sorted within runs of equal part sizes.

    Vectors touching every part are included; K_{r+1}-freeness is applied by
    the caller so that the exclusion is checked rather than assumed.
    """
    sizes = turan_part_sizes(n - 1, r) if n >= 1 else ()
    need = ell + 1
    if need < 0 or need > sum(sizes):
        return []
    out = []
    for counts in product(*(range(s + 1) for s in sizes)):
        if sum(counts) != need:
            continue
        ok = True
        for i in range(1, len(sizes)):
            if sizes[i] == sizes[i - 1] and counts[i] > counts[i - 1]:
                ok = False
                break
        if ok:
            out.append(AttachmentVector(sizes, counts))
    return out


def _dedupe_sorted(graphs: list[Graph]) -> list[Graph]:
    keyed = {}
    for g in graphs:
        keyed.setdefault(canonical_form(g), g)
    return [keyed[k] for k in sorted(keyed)]


def g_family(n: int, r: int, ell: int) -> list[Graph]:
    vecs = attachment_vectors(n, r, ell)
    return _dedupe_sorted([v.graph() for v in vecs if clique_number_at_most(v.graph(), r)])


def j_family(n: int, r: int, k: int) -> list[Graph]:
    cap = (k + 2) // 2
    vecs = [v for v in attachment_vectors(n, r, k) if max(v.counts, default=0) <= cap]
    return _dedupe_sorted([v.graph() for v in vecs if clique_number_at_most(v.graph(), r)])


def h_family_host(n: int, ell: int) -> tuple[int, int] | None:
    """(host size, added count) for the H family, or None when parity fails."""
    if (n - 1 - ell) % 2 or n - 1 - ell < 0:
        return None
    return (n + 1 + ell) // 2, (n - 1 - ell) // 2


def _partitions(total: int, slots: int, cap: int | None = None):
    # nonincreasing vectors of length `slots` summing to `total`
    if cap is None:
        cap = total
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        if first * slots < total:
            break
        for rest in _partitions(total - first, slots - 1, first):
            yield (first,) + rest


def h_family(n: int, r: int, ell: int) -> list[Graph]:
    """T_r(h) plus an independent set whose members each miss one singleton-part vertex."""
    shape = h_family_host(n, ell)
    if shape is None or n > 4 * r - ell - 3:
        return []
    h, jcount = shape
    sizes = turan_part_sizes(h, r)
    if jcount == 0:
        return [complete_multipartite(sizes)]
    if any(s > 2 for s in sizes):
        return []
    singles = [i for i, s in enumerate(sizes) if s == 1]
    if not singles:
        return []
    starts = []
    acc = 0
    for s in sizes:
        starts.append(acc)
        acc += s
    single_vertices = [starts[i] for i in singles]
    host = complete_multipartite(sizes)
    out = []
    for spread in _partitions(jcount, len(single_vertices)):
        g = host
        for vertex, times in zip(single_vertices, spread):
            for _ in range(times):
                g = g.add_vertex([u for u in range(h) if u != vertex])
        if clique_number_at_most(g, r):
            out.append(g)
    return _dedupe_sorted(out)


def family_members(spec: FamilySpec) -> list[Graph]:
    if spec.family is Family.G_ELL:
        return g_family(spec.n, spec.r, spec.ell)
    if spec.family is Family.J_K:
        return j_family(spec.n, spec.r, spec.ell)
    return h_family(spec.n, spec.r, spec.ell)


def g_star_via_colex(n: int, r: int, ell: int) -> Graph:
    """Colex Turán graph on e(T_r(n-1)) + ell + 1 edges, padded with isolated vertices to n."""
    g = colex_turan_graph(turan_edges(n - 1, r) + ell + 1, r)
    while g.n < n:
        g = g.add_vertex()
    return g


# graphs named in the exceptional-case statements, keyed by part sizes
EXCEPTIONAL_PARTS: dict[str, tuple[int, ...]] = {
    "K31": (3, 1),
    "K411": (4, 1, 1),
    "K311": (3, 1, 1),
    "K6221": (6, 2, 2, 1),
    "K4111": (4, 1, 1, 1),
    "K51111": (5, 1, 1, 1, 1),
    "K72221111": (7, 2, 2, 2, 1, 1, 1, 1),
}


def exceptional_graph(name: str) -> Graph:
    return complete_multipartite(EXCEPTIONAL_PARTS[name])


def cartesian_k3_k2() -> Graph:
    """The triangular prism."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
