"""Dense simple graphs on at most 64 vertices.

Adjacency is stored as one integer bitmask per vertex.  Graphs are immutable;
every "mutator" returns a new Graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class CapacityError(ValueError):
    """Raised when a graph would exceed MAX_VERTICES."""


class Graph6Error(ValueError):
    """Malformed graph6 text.  ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int, line: int | None = None):
        self.offset = offset
        self.line = line
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{message} ({where})")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> list[int]:
    return list(_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for w in _bits(row):
                if not adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def _trusted(cls, adj: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee a symmetric loop-free tuple
        g = object.__new__(cls)
        g.n = len(adj)
        g.adj = adj
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n > MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls._trusted(tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    # queries

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, row in enumerate(self.adj):
            for w in _bits(row >> (v + 1)):
                yield v, v + 1 + w

    # builders

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loops are not allowed")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(tuple(rows))

    def add_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        """New graph with one extra vertex (index n) joined to ``neighbors``."""
        if self.n + 1 > MAX_VERTICES:
            raise CapacityError(f"{self.n + 1} vertices exceeds capacity {MAX_VERTICES}")
        nb = mask_of(neighbors)
        if nb >> self.n:
            raise ValueError("neighbor out of range")
        rows = [row | ((nb >> v & 1) << self.n) for v, row in enumerate(self.adj)]
        rows.append(nb)
        return Graph._trusted(tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex vertices[i] becomes i."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in _bits(self.adj[v]):
                if w in pos:
                    row |= 1 << pos[w]
            rows.append(row)
        return Graph._trusted(tuple(rows))

    def delete_vertices(self, removed: Iterable[int]) -> "Graph":
        gone = mask_of(removed)
        return self.induced([v for v in range(self.n) if not gone >> v & 1])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex v of self becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            m = 0
            for w in _bits(row):
                m |= 1 << perm[w]
            rows[perm[v]] = m
        return Graph._trusted(tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._trusted(tuple(full ^ row ^ (1 << v) for v, row in enumerate(self.adj)))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        if shift + other.n > MAX_VERTICES:
            raise CapacityError("union exceeds capacity")
        rows = list(self.adj) + [row << shift for row in other.adj]
        return Graph._trusted(tuple(rows))

    # dunder

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges}, graph6={to_graph6(self)!r})"


@dataclass(frozen=True)
class PartSizes:
    """Part sizes of a complete multipartite graph, stored nonincreasing."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.sizes)
        if any(s < 1 for s in sizes):
            raise ValueError("part sizes must be positive")
        if any(a < b for a, b in zip(sizes, sizes[1:])):
            raise ValueError("part sizes must be nonincreasing")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def of(cls, sizes: Iterable[int]) -> "PartSizes":
        """Sort arbitrary positive sizes into canonical order (zeros dropped)."""
        return cls(tuple(sorted((s for s in sizes if s), reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def largest(self) -> int:
        return self.sizes[0] if self.sizes else 0

    def blocks(self) -> list[range]:
        out, start = [], 0
        for s in self.sizes:
            out.append(range(start, start + s))
            start += s
        return out


def complete_multipartite(parts: PartSizes | Sequence[int]) -> Graph:
    """Complete multipartite graph with contiguous blocks in the given order."""
    sizes = parts.sizes if isinstance(parts, PartSizes) else tuple(parts)
    n = sum(sizes)
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        block = ((1 << s) - 1) << start
        rows.extend([full & ~block] * s)
        start += s
    return Graph._trusted(tuple(rows))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees()))


def has_clique(adj: Sequence[int], cand: int, size: int) -> bool:
    """True if the vertex set ``cand`` contains a clique on ``size`` vertices."""
    if size <= 0:
        return True
    if cand.bit_count() < size:
        return False
    if size == 1:
        return True
    if size == 2:
        for v in _bits(cand):
            if adj[v] & cand:
                return True
        return False
    while cand.bit_count() >= size:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if has_clique(adj, adj[v] & cand, size - 1):
            return True
    return False


def clique_number_at_most(g: Graph, r: int) -> bool:
    """True iff g has no clique on r+1 vertices."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return not has_clique(g.adj, (1 << g.n) - 1, r + 1)


def is_bipartite(adj: Sequence[int]) -> bool:
    n = len(adj)
    side = [-1] * n
    for s in range(n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in _bits(adj[v]):
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def is_connected(adj: Sequence[int], within: int | None = None) -> bool:
    if within is None:
        within = (1 << len(adj)) - 1
    if not within:
        return True
    seen = within & -within
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen == within


# graph6

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes, line: int | None = None) -> Graph:
    """Parse one graph6 record; an optional ``>>graph6<<`` header is skipped."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte", exc.start, line) from None
    s = text.rstrip("\r\n")
    pos = 0
    if s.startswith(">>graph6<<"):
        pos = 10
    for i in range(pos, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"invalid graph6 character {s[i]!r}", i, line)
    if pos >= len(s):
        raise Graph6Error("missing vertex-count header", pos, line)
    if s[pos] != "~":
        n = ord(s[pos]) - 63
        pos += 1
    else:
        if pos + 1 < len(s) and s[pos + 1] == "~":
            raise Graph6Error("8-byte header exceeds capacity", pos, line)
        if pos + 4 > len(s):
            raise Graph6Error("truncated 4-byte header", len(s), line)
        n = 0
        for c in s[pos + 1:pos + 4]:
            n = (n << 6) | (ord(c) - 63)
        if n <= 62:
            raise Graph6Error("non-minimal vertex-count header", pos, line)
        pos += 4
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes, found {len(body)}", len(s), line)
    if len(body) > need:
        raise Graph6Error("trailing data after adjacency bits", pos + need, line)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if total % 6:
        last = ord(body[-1]) - 63
        if last & ((1 << (6 - total % 6)) - 1):
            raise Graph6Error("nonzero padding bits", pos + need - 1, line)
    return Graph._trusted(tuple(rows))


# canonical forms

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key: graph6 bytes of the canonically relabeled graph."""

    key: bytes

    @property
    def graph6(self) -> str:
        return self.key.decode("ascii")

    def graph(self) -> Graph:
        return from_graph6(self.key)


def _refine(adj: Sequence[int], cells: list[list[int]], stack: list[int], n: int) -> list[list[int]]:
    # Split cells by neighbor counts into splitter masks until stable.
    # Every split part is pushed as a new splitter, which keeps the
    # procedure label-independent and yields an equitable partition.
    while stack and len(cells) < n:
        sm = stack.pop()
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            c0 = (adj[cell[0]] & sm).bit_count()
            for v in cell:
                if (adj[v] & sm).bit_count() != c0:
                    break
            else:
                new_cells.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & sm).bit_count(), []).append(v)
            for c in sorted(groups):
                part = groups[c]
                new_cells.append(part)
                m = 0
                for v in part:
                    m |= 1 << v
                stack.append(m)
        cells = new_cells
    return cells


def _leaf_key(adj: Sequence[int], lab: list[int], n: int) -> int:
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = n - 1 - i
    key = 0
    for v in lab:
        row = 0
        a = adj[v]
        while a:
            low = a & -a
            row |= 1 << pos[low.bit_length() - 1]
            a ^= low
        key = (key << n) | row
    return key


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def orbits_from_generators(n: int, gens: Iterable[Sequence[int]]) -> list[int]:
    """Orbit representative (least vertex) of each vertex under the generated group."""
    parent = list(range(n))
    for g in gens:
        for v in range(n):
            a, b = _find(parent, v), _find(parent, g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [_find(parent, v) for v in range(n)]


def degree_cells(adj: Sequence[int]) -> list[list[int]]:
    by_deg: dict[int, list[int]] = {}
    for v, row in enumerate(adj):
        by_deg.setdefault(row.bit_count(), []).append(v)
    return [by_deg[d] for d in sorted(by_deg)]


def refine_partition(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    n = len(adj)
    stack = []
    for cell in cells:
        stack.append(mask_of(cell))
    return _refine(adj, [list(c) for c in cells], stack, n)


def canonical_labeling(adj: Sequence[int], cells: list[list[int]] | None = None,
                       refined: bool = False) -> tuple[list[int], list[list[int]]]:
    """Canonical labeling by refinement and individualization.

    Returns ``(lab, gens)``: ``lab[i]`` is the vertex placed at canonical
    position i and ``gens`` generates the automorphism group preserving the
    ordered initial partition (default: vertices grouped by degree).
    """
    n = len(adj)
    if n == 0:
        return [], []
    if cells is None:
        cells = degree_cells(adj)
    root = cells if refined else refine_partition(adj, cells)

    gens: list[list[int]] = []
    first_path: list[int] = []
    first_lab: list[int] = []
    best = [None, [], []]  # key, lab, path
    first_key = [None]

    def record_aut(src: list[int], dst: list[int]) -> None:
        perm = [0] * n
        for a, b in zip(src, dst):
            perm[a] = b
        if any(perm[v] != v for v in range(n)):
            gens.append(perm)

    def divergence(p: list[int], q: list[int]) -> int:
        i = 0
        while i < len(p) and i < len(q) and p[i] == q[i]:
            i += 1
        return i

    def search(part: list[list[int]], path: list[int]) -> int | None:
        depth = len(path)
        if len(part) == n:
            lab = [c[0] for c in part]
            key = _leaf_key(adj, lab, n)
            if first_key[0] is None:
                first_key[0] = key
                first_lab.extend(lab)
                first_path.extend(path)
                best[0], best[1], best[2] = key, lab, list(path)
                return None
            if key == first_key[0]:
                record_aut(first_lab, lab)
                return divergence(first_path, path)
            if key == best[0]:
                record_aut(best[1], lab)
                return divergence(best[2], path)
            if key > best[0]:
                best[0], best[1], best[2] = key, lab, list(path)
            return None
        # target: first smallest non-singleton cell
        ti, tsize = -1, n + 1
        for i, c in enumerate(part):
            if 1 < len(c) < tsize:
                ti, tsize = i, len(c)
        target = part[ti]
        done: list[int] = []
        for v in sorted(target):
            if done:
                fixing = [g for g in gens if all(g[u] == u for u in path)]
                if fixing:
                    orb = orbits_from_generators(n, fixing)
                    if any(orb[v] == orb[u] for u in done):
                        continue
            rest = [u for u in target if u != v]
            child = part[:ti] + [[v], rest] + part[ti + 1:]
            child = _refine(adj, child, [1 << v], n)
            path.append(v)
            jump = search(child, path)
            path.pop()
            if jump is not None and jump < depth:
                return jump
            done.append(v)
        return None

    search(root, [])
    return best[1], gens


def canonical_form(g: Graph) -> CanonicalForm:
    lab, _ = canonical_labeling(g.adj)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return CanonicalForm(to_graph6(g.relabel(perm)).encode("ascii"))


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def automorphism_orbits(g: Graph) -> list[int]:
    _, gens = canonical_labeling(g.adj)
    return orbits_from_generators(g.n, gens)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    if degree_sequence(a) != degree_sequence(b):
        return False
    return canonical_form(a) == canonical_form(b)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if code >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph._trusted(tuple(rows))
