import io
from collections import Counter

import pytest

from hamextremal.enumeration import (
    MAX_ENUM_N,
    EnumConstraints,
    EnumerationBudgetError,
    enumerate_graphs,
    enumerate_list,
    expand_unit,
    map_units,
    read_stream,
    work_units,
)
from hamextremal.graph_core import (
    Graph,
    Graph6Error,
    all_labeled_graphs,
    canonical_form,
    to_graph6,
)


def keys(graphs):
    return [canonical_form(g).key for g in graphs]


def labeled_oracle(c):
    return {canonical_form(g).key for g in all_labeled_graphs(c.n) if c.admits(g)}


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_unconstrained_counts(n, count):
    got = keys(enumerate_list(n))
    assert len(got) == count
    assert len(set(got)) == count


CONSTRAINTS = [
    dict(max_clique=2),
    dict(max_clique=3),
    dict(min_edges=6),
    dict(max_edges=5),
    dict(min_edges=4, max_edges=8, max_clique=3),
    dict(bipartite_only=True),
    dict(max_clique=1),
]


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("kw", CONSTRAINTS)
def test_constrained_runs_match_labeled_oracle(n, kw):
    c = EnumConstraints(n, **kw)
    got = keys(enumerate_graphs(c))
    assert len(got) == len(set(got))
    assert set(got) == labeled_oracle(c)
    for g in enumerate_graphs(c):
        assert c.admits(g)


@pytest.mark.parametrize("kw", [dict(max_clique=3), dict(min_edges=12), dict(max_edges=9, max_clique=4)])
def test_pruned_runs_equal_filtered_full_runs(kw):
    for n in range(1, 8):
        c = EnumConstraints(n, **kw)
        full = {canonical_form(g).key for g in enumerate_graphs(EnumConstraints(n)) if c.admits(g)}
        assert set(keys(enumerate_graphs(c))) == full


def test_infeasible_window_is_empty():
    assert list(enumerate_graphs(EnumConstraints(5, min_edges=8, max_edges=3))) == []
    assert list(enumerate_graphs(EnumConstraints(4, min_edges=7))) == []


def test_budget_refusal():
    with pytest.raises(EnumerationBudgetError):
        enumerate_graphs(EnumConstraints(MAX_ENUM_N + 1))
    with pytest.raises(ValueError):
        EnumConstraints(-1)


@pytest.mark.parametrize("depth", [1, 2, 3, 4, None])
def test_unit_split_reproduces_serial_run(depth):
    c = EnumConstraints(7, max_clique=4)
    serial = keys(enumerate_graphs(c))
    units = work_units(c, depth)
    split = [k for u in units for k in keys(expand_unit(c, u))]
    assert Counter(split) == Counter(serial)


def _count(graphs):
    return len(graphs)


def test_parallel_map_is_ordered_and_complete():
    c = EnumConstraints(7)
    assert map_units(c, _count, jobs=1) == map_units(c, _count, jobs=3)
    assert sum(map_units(c, _count, jobs=2)) == 1044
    assert keys(enumerate_graphs(c, jobs=2)) == keys(enumerate_graphs(c, jobs=1))


def test_read_stream_basics():
    assert list(read_stream(["Bw\n"])) == [Graph.complete(3)]
    assert list(read_stream(io.StringIO(""))) == []
    assert len(list(read_stream(["\n", "A_\n", "   \n", "@\n"]))) == 2


def test_read_stream_reports_first_bad_line():
    lines = ["Bw\n", "A_\n", "Bw!\n", "zzz\n"]
    it = read_stream(lines)
    assert next(it) == Graph.complete(3)
    next(it)
    with pytest.raises(Graph6Error) as info:
        next(it)
    assert info.value.line == 3


def test_read_stream_from_file(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("".join(to_graph6(g) + "\n" for g in enumerate_list(4)))
    got = keys(read_stream(path))
    assert got == keys(enumerate_list(4))
