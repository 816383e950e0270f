"""Isomorph-free graph generation by canonical vertex augmentation.

A graph on k+1 vertices is accepted from its parent on k vertices only when
the new vertex lies in the automorphism orbit of the canonically first vertex.
The canonical labeling starts from the partition by degree (lowest first),
so the removed vertex always has minimum degree.  That makes edge-count
windows prunable level by level.
"""
from __future__ import annotations

import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Iterator, TextIO, TypeVar

from .graph_core import (
    Graph,
    Graph6Error,
    canonical_labeling,
    degree_cells,
    from_graph6,
    has_clique,
    is_bipartite,
    orbits_from_generators,
    refine_partition,
)

MAX_ENUM_N = 12
JOBS_ENV = "HAMEXTREMAL_JOBS"

T = TypeVar("T")


class EnumerationBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class EnumConstraints:
    n: int
    max_clique: int | None = None
    min_edges: int | None = None
    max_edges: int | None = None
    bipartite_only: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.max_clique is not None and self.max_clique < 1:
            raise ValueError("max_clique must be at least 1")

    @property
    def lo(self) -> int:
        return max(0, self.min_edges or 0)

    @property
    def hi(self) -> int:
        top = comb(self.n, 2)
        return top if self.max_edges is None else min(top, self.max_edges)

    def feasible(self) -> bool:
        return self.lo <= self.hi

    def admits(self, g: Graph) -> bool:
        if g.n != self.n or not self.lo <= g.num_edges <= self.hi:
            return False
        if self.max_clique is not None and has_clique(g.adj, (1 << g.n) - 1, self.max_clique + 1):
            return False
        if self.bipartite_only and not is_bipartite(g.adj):
            return False
        return True


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _edge_ceiling(e: int, k: int, n: int) -> int:
    # Most edges reachable from k vertices / e edges when every added vertex
    # has minimum degree in the graph it joins: d(j-2) <= 2 e_{j-1}.
    for j in range(k + 1, n + 1):
        d = j - 1 if j <= 2 else min(j - 1, 2 * e // (j - 2))
        e += d
    return e


def _min_edges_table(c: EnumConstraints) -> list[int]:
    """Least edge count a k-vertex node needs to still reach c.lo edges."""
    table = [0] * (c.n + 1)
    if not c.lo:
        return table
    for k in range(1, c.n + 1):
        top = comb(k, 2)
        need = top + 1
        for e in range(top + 1):
            if _edge_ceiling(e, k, c.n) >= c.lo:
                need = e
                break
        table[k] = need
    return table


class _Generator:
    def __init__(self, c: EnumConstraints):
        self.c = c
        self.need = _min_edges_table(c)
        self.hi = c.hi

    def children(self, adj: tuple[int, ...]) -> list[tuple[int, ...]]:
        c = self.c
        k = len(adj)
        degs = [row.bit_count() for row in adj]
        e = sum(degs) // 2
        mind = min(degs) if k else 0
        _, gens = canonical_labeling(adj) if k else ([], [])
        out = []
        top_d = k if not k else min(k, mind + 1)
        for d in range(0, top_d + 1):
            e2 = e + d
            if e2 > self.hi:
                break
            if e2 < self.need[k + 1]:
                continue
            req = 0
            if d >= 1:
                for u in range(k):
                    if degs[u] == d - 1:
                        req |= 1 << u
            rb = req.bit_count()
            if rb > d:
                continue
            free = [u for u in range(k) if not req >> u & 1]
            seen: set[int] = set()
            for extra in combinations(free, d - rb):
                s = req
                for u in extra:
                    s |= 1 << u
                if gens:
                    if s in seen:
                        continue
                    self._orbit_into(s, gens, seen)
                if c.max_clique is not None and has_clique(adj, s, c.max_clique):
                    continue
                child = self._extend(adj, s)
                if c.bipartite_only and not is_bipartite(child):
                    continue
                if self._accept(child, d):
                    out.append(child)
        return out

    @staticmethod
    def _orbit_into(s: int, gens, seen: set[int]) -> None:
        todo = [s]
        seen.add(s)
        while todo:
            x = todo.pop()
            for g in gens:
                y = 0
                m = x
                while m:
                    low = m & -m
                    y |= 1 << g[low.bit_length() - 1]
                    m ^= low
                if y not in seen:
                    seen.add(y)
                    todo.append(y)

    @staticmethod
    def _extend(adj: tuple[int, ...], s: int) -> tuple[int, ...]:
        k = len(adj)
        bit = 1 << k
        return tuple(row | bit if s >> u & 1 else row for u, row in enumerate(adj)) + (s,)

    @staticmethod
    def _accept(child: tuple[int, ...], d: int) -> bool:
        new = len(child) - 1
        low = [v for v, row in enumerate(child) if row.bit_count() == d]
        if len(low) == 1:
            return True
        cells = refine_partition(child, degree_cells(child))
        first = cells[0]
        if new not in first:
            return False
        if len(first) == 1:
            return True
        lab, gens = canonical_labeling(child, cells, refined=True)
        orb = orbits_from_generators(len(child), gens)
        return orb[new] == orb[lab[0]]

    def admissible_node(self, adj: tuple[int, ...]) -> bool:
        k = len(adj)
        e = sum(row.bit_count() for row in adj) // 2
        return e <= self.hi and e >= self.need[k]

    def grow(self, adj: tuple[int, ...], target: int) -> Iterator[tuple[int, ...]]:
        if len(adj) == target:
            yield adj
            return
        for child in self.children(adj):
            yield from self.grow(child, target)


def _roots(c: EnumConstraints) -> list[tuple[int, ...]]:
    if c.n == 0:
        return [()]
    return [(0,)]


def split_depth(n: int) -> int:
    """Level at which the generation tree is cut into work units."""
    return max(1, min(n, n - 3, 6))


def work_units(c: EnumConstraints, depth: int | None = None) -> list[tuple[int, ...]]:
    """Nodes at the split level, in generation order."""
    _check_budget(c)
    if not c.feasible():
        return []
    gen = _Generator(c)
    if depth is None:
        depth = split_depth(c.n)
    depth = max(0, min(depth, c.n))
    if c.n == 0:
        return [()]
    out = []
    for root in _roots(c):
        if depth <= 1:
            out.append(root)
        else:
            out.extend(gen.grow(root, depth))
    return out


def expand_unit(c: EnumConstraints, unit: tuple[int, ...]) -> list[Graph]:
    gen = _Generator(c)
    return [Graph._trusted(adj) for adj in gen.grow(unit, c.n)]


def _check_budget(c: EnumConstraints) -> None:
    if c.n > MAX_ENUM_N:
        raise EnumerationBudgetError(
            f"n={c.n} exceeds the native enumeration limit {MAX_ENUM_N}; "
            "pipe an external graph6 catalog through read_stream instead")


def _unit_task(args):
    fn, c, unit = args
    return fn(expand_unit(c, unit))


def map_units(c: EnumConstraints, fn: Callable[[list[Graph]], T], jobs: int = 1,
              depth: int | None = None) -> list[T]:
    """Apply ``fn`` to the graphs of each work unit; results come back in unit order."""
    units = work_units(c, depth)
    tasks = [(fn, c, u) for u in units]
    if jobs <= 1 or len(units) <= 1:
        return [_unit_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_unit_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def _identity(graphs: list[Graph]) -> list[Graph]:
    return graphs


def enumerate_graphs(c: EnumConstraints, jobs: int = 1) -> Iterator[Graph]:
    """One graph per isomorphism class satisfying the constraints, in a fixed order."""
    _check_budget(c)
    if not c.feasible():
        return iter(())
    if jobs <= 1:
        return _serial(c)
    return (g for batch in map_units(c, _identity, jobs) for g in batch)


def _serial(c: EnumConstraints) -> Iterator[Graph]:
    gen = _Generator(c)
    for root in _roots(c):
        for adj in gen.grow(root, c.n):
            yield Graph._trusted(adj)


def enumerate_list(n: int, **kw) -> list[Graph]:
    return list(enumerate_graphs(EnumConstraints(n, **kw)))


def read_stream(source: str | Path | TextIO | Iterable[str]) -> Iterator[Graph]:
    """graph6 records in file order; blank lines are skipped.

    ``source`` may be a path, "-" for standard input, an open text file, or
    any iterable of lines.  Errors carry the 1-based line number.
    """
    if isinstance(source, (str, Path)):
        if str(source) == "-":
            yield from _parse_lines(sys.stdin)
            return
        with open(source, "r", encoding="ascii", errors="surrogateescape") as fh:
            yield from _parse_lines(fh)
        return
    yield from _parse_lines(source)


def _parse_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for lineno, raw in enumerate(lines, start=1):
        text = raw.rstrip("\r\n")
        if not text.strip():
            continue
        try:
            yield from_graph6(text, line=lineno)
        except UnicodeEncodeError:
            raise Graph6Error("non-ASCII byte", 0, lineno) from None
