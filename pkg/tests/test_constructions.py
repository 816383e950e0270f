from itertools import combinations, combinations_with_replacement

import pytest

from hamextremal.constructions import (
    EXCEPTIONAL_PARTS,
    Family,
    FamilySpec,
    attachment_vectors,
    cartesian_k3_k2,
    colex_graph,
    colex_turan_graph,
    colex_turan_pairs,
    exceptional_graph,
    family_members,
    g_family,
    g_star,
    g_star_via_colex,
    h_family,
    h_family_host,
    j_family,
    petersen,
    turan_graph,
)
from hamextremal.formulas import multipartite_edges, turan_edges, turan_part_sizes
from hamextremal.graph_core import (
    Graph,
    canonical_form,
    clique_number_at_most,
    complete_multipartite,
    is_isomorphic,
)


def test_turan_graph_examples():
    assert turan_graph(6, 5).num_edges == 14
    assert turan_part_sizes(6, 5) == (2, 1, 1, 1, 1)
    assert turan_graph(8, 5).num_edges == 25
    assert turan_part_sizes(8, 5) == (2, 2, 2, 1, 1)
    assert turan_graph(4, 4) == Graph.complete(4)


def test_colex_graph_examples():
    assert colex_graph(3) == Graph.complete(3)
    four = colex_graph(4)
    assert four.n == 4 and four.num_edges == 4 and four.degrees() == [3, 2, 2, 1]
    for n in range(3, 9):
        m = (n - 1) * (n - 2) // 2 + 1
        pend = Graph.complete(n - 1).add_vertex([0])
        assert is_isomorphic(colex_graph(m), pend)
    assert colex_graph(0).n == 0


def test_colex_graph_is_first_colex_pairs():
    pairs = sorted(combinations(range(10), 2), key=lambda p: (p[1], p[0]))
    for m in range(0, 40):
        g = colex_graph(m)
        assert sorted(g.edges()) == sorted(pairs[:m])


def test_colex_turan_small_cases():
    assert colex_turan_graph(1, 2) == Graph.complete(2)
    for r in range(2, 6):
        for n in range(1, 11):
            g = colex_turan_graph(turan_edges(n, r), r)
            if turan_edges(n, r):
                assert is_isomorphic(g, turan_graph(g.n, r))


def test_colex_turan_edges_and_clique_free():
    for r in range(2, 9):
        for m in range(0, 301):
            g = colex_turan_graph(m, r)
            assert g.num_edges == m
            assert clique_number_at_most(g, r)
    assert colex_turan_pairs(3, 2) == [(0, 1), (1, 2), (0, 3)]


def test_colex_turan_38_is_a_g0_member():
    g = colex_turan_graph(38, 4)
    assert g.n == 11
    assert canonical_form(g) in {canonical_form(h) for h in g_family(11, 4, 0)}


@pytest.mark.parametrize("r", range(2, 7))
def test_g_star_builders_agree(r):
    for n in range(3, 15):
        for ell in range(-1, 4):
            try:
                direct = g_star(n, r, ell)
            except ValueError:
                continue
            assert is_isomorphic(direct, g_star_via_colex(n, r, ell)), (n, r, ell)


def test_g_star_rejects_impossible_parameters():
    with pytest.raises(ValueError):
        g_star(4, 5, 0)  # T_5(3) has no empty part to avoid
    with pytest.raises(ValueError):
        g_star(5, 2, 3)


def test_g_family_examples():
    assert len(g_family(7, 5, 0)) == 2
    for n, r in [(5, 3), (7, 4), (9, 5)]:
        fam = g_family(n, r, -1)
        assert len(fam) == 1
        assert is_isomorphic(fam[0], turan_graph(n - 1, r).add_vertex())


def _brute_g_family(n, r, ell):
    host = turan_graph(n - 1, r)
    out = set()
    for s in combinations(range(n - 1), ell + 1):
        g = host.add_vertex(s)
        if clique_number_at_most(g, r):
            out.add(canonical_form(g))
    return sorted(out)


@pytest.mark.parametrize("n", range(3, 10))
def test_g_family_matches_subset_brute_force(n):
    for r in range(2, 6):
        for ell in range(-1, min(4, n - 2)):
            got = [canonical_form(g) for g in g_family(n, r, ell)]
            assert got == _brute_g_family(n, r, ell), (n, r, ell)


def test_transversal_attachments_are_excluded_by_clique_freeness():
    # vectors touching every part exist, and every one of them creates K_{r+1}
    vecs = [v for v in attachment_vectors(9, 3, 3) if v.touches_all_parts]
    assert vecs
    assert all(not clique_number_at_most(v.graph(), 3) for v in vecs)
    for v in attachment_vectors(9, 3, 3):
        assert v.degree == 4


def test_g_family_members_have_one_low_vertex():
    for n, r, ell in [(9, 4, 1), (10, 3, 2), (12, 5, 3)]:
        for g in g_family(n, r, ell):
            assert g.num_edges == turan_edges(n - 1, r) + ell + 1
            assert sorted(g.degrees()).count(ell + 1) == 1


def test_j_family_is_subfamily_with_small_parts():
    for n, r, k in [(10, 3, 2), (12, 4, 3), (9, 5, 1)]:
        g_keys = {canonical_form(g) for g in g_family(n, r, k)}
        j = j_family(n, r, k)
        assert j and {canonical_form(g) for g in j} <= g_keys


def test_h_family_examples():
    h = h_family(9, 5, 0)
    assert canonical_form(exceptional_graph("K51111")) in {canonical_form(g) for g in h}
    assert h_family(10, 5, 0) == []  # parity
    assert h_family_host(9, 0) == (5, 4)
    assert h_family(20, 4, 0) == []  # n > 4r - ell - 3


def test_h_family_structure():
    for n, r, ell in [(9, 5, 0), (11, 4, 0), (8, 4, 1), (8, 4, -1), (13, 6, 2)]:
        host_n, added = h_family_host(n, ell)
        members = h_family(n, r, ell)
        assert members
        for g in members:
            assert g.n == n and clique_number_at_most(g, r)
            extra = list(range(host_n, n))
            assert len(extra) == added
            assert all(not g.has_edge(a, b) for a, b in combinations(extra, 2))
            assert all(g.degree(v) == (n - 1 + ell) // 2 for v in extra)
            assert is_isomorphic(g.induced(range(host_n)), turan_graph(host_n, r))


def test_family_members_dispatch_and_order():
    spec = FamilySpec(Family.G_ELL, 9, 4, 1)
    members = family_members(spec)
    keys = [canonical_form(g) for g in members]
    assert keys == sorted(set(keys))
    assert family_members(FamilySpec("J", 9, 4, 1)) == j_family(9, 4, 1)
    assert family_members(FamilySpec("H", 9, 5, 0)) == h_family(9, 5, 0)
    with pytest.raises(ValueError):
        FamilySpec("G", 9, 4, -2)


def test_exceptional_graphs():
    for name, parts in EXCEPTIONAL_PARTS.items():
        g = exceptional_graph(name)
        assert g.num_edges == multipartite_edges(parts)
        assert g == complete_multipartite(parts)


def test_named_graphs():
    p = petersen()
    assert p.n == 10 and p.num_edges == 15 and set(p.degrees()) == {3}
    prism = cartesian_k3_k2()
    assert prism.num_edges == 9 and set(prism.degrees()) == {3}


def _brute_h_family(n, r, ell):
    # raw definition: T_r(h) plus an independent set whose vertices each miss exactly one host vertex
    shape = h_family_host(n, ell)
    if shape is None:
        return []
    h, added = shape
    host = turan_graph(h, r)
    out = set()
    for missed in combinations_with_replacement(range(h), added):
        g = host
        for m in missed:
            g = g.add_vertex([u for u in range(h) if u != m])
        if clique_number_at_most(g, r):
            out.add(canonical_form(g))
    return sorted(out)


@pytest.mark.parametrize("r", range(2, 6))
def test_h_family_matches_definition_brute_force(r):
    for n in range(3, 12):
        for ell in range(-1, 3):
            got = [canonical_form(g) for g in h_family(n, r, ell)]
            assert got == _brute_h_family(n, r, ell), (n, r, ell)
