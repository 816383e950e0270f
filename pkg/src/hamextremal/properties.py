"""Exact deciders for Hamiltonicity-type properties, with certificates."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .formulas import Property, PropertyKind
from .graph_core import Graph, PartSizes, bits_of, is_connected


@dataclass(frozen=True)
class Witness:
    """Certificate for a decision; kind is cycle, path, path_between or none."""

    kind: str
    vertices: tuple[int, ...] = ()

    def is_valid_for(self, g: Graph) -> bool:
        vs = self.vertices
        if self.kind == "none":
            return True
        if len(vs) != g.n or len(set(vs)) != g.n:
            return False
        if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        if self.kind == "cycle":
            return g.n >= 3 and g.has_edge(vs[-1], vs[0])
        return True


@dataclass(frozen=True)
class Decision:
    """Boolean verdict plus whatever explains it (witness or counterexample)."""

    holds: bool
    witness: Witness | None = None
    counterexample: tuple[int, ...] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


class _Search:
    """Depth-first Hamiltonian path search over neighborhood bitmasks.

    Covers every vertex of ``allowed`` starting at ``start``.  With ``end`` the
    walk must finish there; with ``close`` the last vertex must be adjacent
    to ``start``.  Failed (visited, current) states are memoized.
    """

    def __init__(self, adj: Sequence[int], allowed: int, start: int,
                 end: int | None = None, close: bool = False):
        self.adj = adj
        self.allowed = allowed
        self.start = start
        self.end = end
        self.close = close
        self.failed: set[int] = set()
        self.path = [start]

    def run(self) -> list[int] | None:
        if not self.allowed >> self.start & 1:
            return None
        if self.end is not None and (self.end == self.start or not self.allowed >> self.end & 1):
            return None
        if self._rec(self.start, 1 << self.start):
            return list(self.path)
        return None

    def _rec(self, cur: int, visited: int) -> bool:
        adj = self.adj
        rem = self.allowed & ~visited
        if not rem:
            if self.close:
                return bool(adj[cur] >> self.start & 1)
            if self.end is not None:
                return cur == self.end
            return True
        key = visited << 7 | cur
        if key in self.failed:
            return False
        curbit = 1 << cur
        pool = rem | curbit
        end = self.end
        close = self.close
        if close:
            pool |= 1 << self.start
            if cur != self.start and not adj[self.start] & rem:
                self.failed.add(key)
                return False
        forced = 0
        loose = 0
        m = rem
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            a = (adj[w] & pool).bit_count()
            if close or (end is not None and w != end):
                if a < 2:
                    self.failed.add(key)
                    return False
                if a == 2 and adj[w] & curbit and cur != self.start:
                    forced |= low
            elif end is not None:
                if a < 1:
                    self.failed.add(key)
                    return False
            else:
                if a == 0:
                    self.failed.add(key)
                    return False
                if a == 1:
                    loose += 1
                    if loose > 1:
                        self.failed.add(key)
                        return False
        if forced & (forced - 1):
            self.failed.add(key)
            return False
        if not is_connected(adj, pool & ~(1 << self.start) | curbit if close else pool):
            self.failed.add(key)
            return False
        moves = forced if forced else adj[cur] & rem
        if end is not None and rem != 1 << end:
            moves &= ~(1 << end)
        order = sorted(bits_of(moves), key=lambda w: (adj[w] & pool).bit_count())
        for w in order:
            self.path.append(w)
            if self._rec(w, visited | 1 << w):
                return True
            self.path.pop()
        self.failed.add(key)
        return False


def _cycle_in(adj: Sequence[int], allowed: int) -> list[int] | None:
    verts = bits_of(allowed)
    if len(verts) < 3:
        return None
    start = min(verts, key=lambda v: ((adj[v] & allowed).bit_count(), v))
    return _Search(adj, allowed, start, close=True).run()


def find_hamiltonian_cycle(g: Graph) -> Witness | None:
    """A Hamiltonian cycle, or None.  Graphs on fewer than 3 vertices have none."""
    if g.n < 3:
        return None
    cyc = _cycle_in(g.adj, (1 << g.n) - 1)
    return Witness("cycle", tuple(cyc)) if cyc else None


def find_hamiltonian_path(g: Graph) -> Witness | None:
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return Witness("path", (0,))
    # a universal helper vertex turns the path question into a cycle question
    hub = n
    adj = [row | 1 << hub for row in g.adj] + [(1 << n) - 1]
    cyc = _Search(adj, (1 << (n + 1)) - 1, hub, close=True).run()
    if cyc is None:
        return None
    return Witness("path", tuple(cyc[1:]))


def find_hamiltonian_path_between(g: Graph, u: int, v: int) -> Witness | None:
    if u == v:
        raise ValueError("endpoints must differ")
    path = _Search(g.adj, (1 << g.n) - 1, u, end=v).run()
    return Witness("path_between", tuple(path)) if path else None


def is_hamiltonian(g: Graph) -> bool:
    return find_hamiltonian_cycle(g) is not None


def is_traceable(g: Graph) -> bool:
    return find_hamiltonian_path(g) is not None


def _pairs_low_degree_first(g: Graph) -> list[tuple[int, int]]:
    degs = g.degrees()
    order = sorted(range(g.n), key=lambda v: (degs[v], v))
    front = []
    for w in order:
        nb = g.neighbors(w)
        if len(nb) > 3:
            break
        front.extend(combinations(sorted(nb), 2))
    seen = set()
    out = []
    for p in front + list(combinations(range(g.n), 2)):
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def hamiltonian_connected(g: Graph) -> Decision:
    """Every pair of distinct vertices is joined by a Hamiltonian path (n >= 2)."""
    if g.n < 2:
        return Decision(False, detail="fewer than 2 vertices")
    for u, v in _pairs_low_degree_first(g):
        if find_hamiltonian_path_between(g, u, v) is None:
            return Decision(False, counterexample=(u, v))
    return Decision(True)


def is_hamiltonian_connected(g: Graph) -> bool:
    return hamiltonian_connected(g).holds


def _segments(cycle: Sequence[int], k: int) -> set[tuple[int, ...]]:
    n = len(cycle)
    out = set()
    doubled = list(cycle) * 2
    for length in range(0, k + 1):
        for i in range(n):
            seg = tuple(doubled[i:i + length + 1])
            out.add(seg)
            out.add(seg[::-1])
    return out


def _simple_paths(g: Graph, k: int):
    """Each simple path with 1..k edges once, as a tuple with first < last.

    High-degree vertices come first: a path that swallows them is the one
    most likely to block a Hamiltonian cycle, so counterexamples surface early.
    """
    adj = g.adj
    degs = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-degs[v], v))

    def grow(path, visited):
        if len(path) > 1 and path[0] < path[-1]:
            yield tuple(path)
        if len(path) == k + 1:
            return
        nb = adj[path[-1]] & ~visited
        for w in order:
            if nb >> w & 1:
                path.append(w)
                yield from grow(path, visited | 1 << w)
                path.pop()

    for s in order:
        yield from grow([s], 1 << s)


def _neighborhood_paths(g: Graph, k: int):
    # Hamiltonian paths of small neighborhoods: the usual obstructions
    degs = g.degrees()
    for w in sorted(range(g.n), key=lambda v: (degs[v], v)):
        if degs[w] > k + 1:
            break
        nb = g.adj[w]
        sub = [v for v in bits_of(nb)]
        for perm in permutations(sub):
            if perm[0] < perm[-1] and all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
                yield perm


def _cycle_through(g: Graph, path: Sequence[int]) -> list[int] | None:
    n = g.n
    full = (1 << n) - 1
    if len(path) == 1:
        return _cycle_in(g.adj, full)
    inner = 0
    for v in path[1:-1]:
        inner |= 1 << v
    back = _Search(g.adj, full & ~inner, path[-1], end=path[0]).run()
    if back is None:
        return None
    return list(path) + back[1:-1]


def k_path_hamiltonian(g: Graph, k: int) -> Decision:
    """Every path with at most k edges is a segment of some Hamiltonian cycle."""
    n = g.n
    if not 0 <= k <= n - 2:
        raise ValueError(f"k={k} outside 0..n-2 for n={n}")
    first = find_hamiltonian_cycle(g)
    if first is None:
        return Decision(False, counterexample=(0,), detail="not Hamiltonian")
    covered = _segments(first.vertices, k)
    if k == 0:
        return Decision(True, witness=first)

    def check(path):
        if path in covered:
            return True
        cyc = _cycle_through(g, path)
        if cyc is None:
            return False
        covered.update(_segments(cyc, k))
        return True

    for path in _neighborhood_paths(g, k):
        if not check(tuple(path)):
            return Decision(False, counterexample=tuple(path))
    for path in _simple_paths(g, k):
        if not check(path):
            return Decision(False, counterexample=path)
    return Decision(True, witness=first)


def is_k_path_hamiltonian(g: Graph, k: int) -> bool:
    return k_path_hamiltonian(g, k).holds


def _deletion_sets(g: Graph, k: int):
    degs = g.degrees()
    for w in sorted(range(g.n), key=lambda v: (degs[v], v)):
        if degs[w] > k + 1:
            break
        nb = g.neighbors(w)
        for size in range(1, min(k, len(nb)) + 1):
            yield from combinations(nb, size)
    # removing high-degree vertices hurts most, so try those first
    order = sorted(range(g.n), key=lambda v: (-degs[v], v))
    for size in range(0, k + 1):
        yield from combinations(order, size)


def k_hamiltonian(g: Graph, k: int) -> Decision:
    """G - S is Hamiltonian for every vertex set S with |S| <= k."""
    n = g.n
    if not 0 <= k <= n - 3:
        raise ValueError(f"k={k} outside 0..n-3 for n={n}")
    full = (1 << n) - 1
    seen = set()
    for sub in _deletion_sets(g, k):
        key = tuple(sorted(sub))
        if key in seen:
            continue
        seen.add(key)
        gone = 0
        for v in key:
            gone |= 1 << v
        if _cycle_in(g.adj, full & ~gone) is None:
            return Decision(False, counterexample=key)
    return Decision(True)


def is_k_hamiltonian(g: Graph, k: int) -> bool:
    return k_hamiltonian(g, k).holds


def _chorded_cycle_of_length(g: Graph, length: int) -> list[int] | None:
    adj = g.adj
    n = g.n
    for s in range(n):
        higher = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        path = [s]

        def grow(cur, visited):
            if len(path) == length:
                if not adj[cur] >> s & 1:
                    return False
                inside = sum((adj[v] & visited).bit_count() for v in path) // 2
                return inside > length
            for w in bits_of(adj[cur] & higher & ~visited):
                # keep the orientation with path[1] < path[-1]
                if len(path) == length - 1 and w < path[1]:
                    continue
                path.append(w)
                if grow(w, visited | 1 << w):
                    return True
                path.pop()
            return False

        if grow(s, 1 << s):
            return list(path)
    return None


def chorded_pancyclic(g: Graph) -> Decision:
    """For each length 4..n there is a cycle of that length with a chord."""
    if g.n < 4:
        raise ValueError("chorded pancyclicity needs n >= 4")
    ham = find_hamiltonian_cycle(g)
    if ham is None or g.num_edges <= g.n:
        return Decision(False, counterexample=(g.n,))
    for length in range(4, g.n):
        if _chorded_cycle_of_length(g, length) is None:
            return Decision(False, counterexample=(length,))
    return Decision(True, witness=ham)


def is_chorded_pancyclic(g: Graph) -> bool:
    return chorded_pancyclic(g).holds


def multipartite_shortcuts(parts: PartSizes | Sequence[int]) -> dict[str, bool]:
    """Closed forms for complete multipartite graphs with largest part m."""
    sizes = parts.sizes if isinstance(parts, PartSizes) else tuple(parts)
    n = sum(sizes)
    m = max(sizes, default=0)
    return {
        "hamiltonian": n >= 3 and 2 * m <= n,
        "traceable": n >= 1 and 2 * m <= n + 1,
    }


def decide(g: Graph, prop: Property) -> Decision:
    kind = prop.kind
    if kind is PropertyKind.TRACE:
        w = find_hamiltonian_path(g)
        return Decision(w is not None, witness=w)
    if kind is PropertyKind.HAM:
        w = find_hamiltonian_cycle(g)
        return Decision(w is not None, witness=w)
    if kind is PropertyKind.HAMCONN:
        return hamiltonian_connected(g)
    if kind is PropertyKind.KPATH:
        return k_path_hamiltonian(g, prop.k)
    if kind is PropertyKind.KHAM:
        return k_hamiltonian(g, prop.k)
    return chorded_pancyclic(g)


def has_property(g: Graph, prop: Property) -> bool:
    return decide(g, prop).holds


# Reference deciders: plain permutation scans, no pruning.  Meant for n <= 7.

def _all_ham_cycles(g: Graph, allowed: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    verts = list(range(g.n)) if allowed is None else list(allowed)
    if len(verts) < 3:
        return []
    first, rest = verts[0], verts[1:]
    out = []
    for perm in permutations(rest):
        cyc = (first,) + perm
        if all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])):
            out.append(cyc)
    return out


def reference_hamiltonian(g: Graph) -> bool:
    return bool(_all_ham_cycles(g))


def reference_traceable(g: Graph) -> bool:
    if g.n == 0:
        return False
    return any(all(g.has_edge(a, b) for a, b in zip(p, p[1:])) for p in permutations(range(g.n)))


def reference_path_between(g: Graph, u: int, v: int) -> bool:
    mid = [w for w in range(g.n) if w not in (u, v)]
    for perm in permutations(mid):
        p = (u,) + perm + (v,)
        if all(g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return True
    return False


def reference_hamiltonian_connected(g: Graph) -> bool:
    if g.n < 2:
        return False
    return all(reference_path_between(g, u, v) for u, v in combinations(range(g.n), 2))


def reference_k_path_hamiltonian(g: Graph, k: int) -> bool:
    if not 0 <= k <= g.n - 2:
        raise ValueError("k out of range")
    segs = set()
    for cyc in _all_ham_cycles(g):
        segs |= _segments(cyc, k)
    if not segs:
        return False
    for length in range(0, k + 1):
        for p in permutations(range(g.n), length + 1):
            if all(g.has_edge(a, b) for a, b in zip(p, p[1:])) and p not in segs:
                return False
    return True


def reference_k_hamiltonian(g: Graph, k: int) -> bool:
    if not 0 <= k <= g.n - 3:
        raise ValueError("k out of range")
    for size in range(k + 1):
        for sub in combinations(range(g.n), size):
            keep = [v for v in range(g.n) if v not in sub]
            if not _all_ham_cycles(g, keep):
                return False
    return True


def reference_chorded_pancyclic(g: Graph) -> bool:
    if g.n < 4:
        raise ValueError("needs n >= 4")
    for length in range(4, g.n + 1):
        found = False
        for sub in combinations(range(g.n), length):
            inside = sum(1 for a, b in combinations(sub, 2) if g.has_edge(a, b))
            if inside <= length:
                continue
            if _all_ham_cycles(g, sub):
                found = True
                break
        if not found:
            return False
    return True
