import json

import pytest

from hamextremal.constructions import exceptional_graph, g_family, turan_graph
from hamextremal.formulas import HAM, HAMCONN, TRACE, kham, kpath, multipartite_clique_count
from hamextremal.graph_core import canonical_form, complete_multipartite
from hamextremal.verify import (
    EDGES,
    WITNESS_CLAIMS,
    BudgetRefusal,
    Metric,
    Verdict,
    csv_row,
    degree_theorem_min_n,
    extremal_number,
    family_characterization_check,
    normalize_witness_name,
    predict,
    theorem_id,
    verify_clique_bounds,
    verify_degree_theorem,
    witness_check,
)


def g6(g):
    return canonical_form(g).graph6


def test_metric_parsing():
    assert Metric.parse("edges") == EDGES
    assert Metric.parse("cliques(3)") == Metric("cliques", 3)
    assert Metric.parse("cliques:4").label == "cliques(4)"
    for bad in ("cliques", "triangles", "cliques(1)"):
        with pytest.raises(ValueError):
            Metric.parse(bad)


def test_theorem_ids():
    assert theorem_id(HAM) == "ham"
    assert theorem_id(kpath(2)) == "kpath(2)"
    assert theorem_id(HAM, Metric("cliques", 3)) == "clique_extremal(ham,3)"


def test_prediction_lists_exceptional_graphs():
    pred = predict(HAM, 7, 5)
    assert pred.value == 15 and pred.relation == "equal"
    keys = {g6(g) for g in pred.family}
    assert g6(exceptional_graph("K4111")) in keys
    assert {g6(g) for g in g_family(7, 5, 0)} <= keys and len(keys) == 3
    assert predict(HAM, 10, 4).value is None


def test_hamiltonian_seven_five():
    rep = extremal_number(HAM, 7, 5)
    assert rep.verdict is Verdict.MATCH
    assert rep.computed_max == 15
    assert len(rep.extremal_graph6) == 3
    assert g6(exceptional_graph("K4111")) in rep.extremal_graph6


def test_hamiltonian_five_includes_small_exception():
    for r in (5, 6):
        rep = extremal_number(HAM, 5, r)
        assert rep.verdict is Verdict.MATCH
        assert g6(exceptional_graph("K311")) in rep.extremal_graph6


def test_traceable_six_four():
    rep = extremal_number(TRACE, 6, 4)
    assert rep.verdict is Verdict.MATCH and rep.computed_max == 9
    assert set(rep.extremal_graph6) == {g6(turan_graph(5, 4).add_vertex()), g6(exceptional_graph("K411"))}


def test_traceable_four_five_includes_star():
    rep = extremal_number(TRACE, 4, 5)
    assert rep.verdict is Verdict.MATCH
    assert g6(exceptional_graph("K31")) in rep.extremal_graph6


def test_traceable_four_four_has_an_unlisted_extremal_graph():
    # the star K_{3,1} also reaches the bound at r=4; the registry does not list it there
    rep = extremal_number(TRACE, 4, 4)
    assert rep.computed_max == rep.predicted_max
    assert rep.verdict is Verdict.MISMATCH
    assert rep.unexpected == [g6(exceptional_graph("K31"))]


@pytest.mark.parametrize("prop", [TRACE, HAM, HAMCONN])
def test_triangle_free_runs(prop):
    for n in (6, 7):
        rep = extremal_number(prop, n, 2)
        assert rep.verdict is Verdict.MATCH, (prop, n)


def test_triangle_free_hamiltonian_extremal_graph():
    rep = extremal_number(HAM, 8, 2)
    assert rep.computed_max == 15
    assert rep.extremal_graph6 == [g6(complete_multipartite([5, 3]))]


def test_budget_refusal_and_witness_mode():
    with pytest.raises(BudgetRefusal):
        extremal_number(HAM, 11, 4)
    rep = extremal_number(HAM, 11, 4, witness_only=True)
    assert rep.verdict is Verdict.WITNESS_ONLY
    assert len(rep.checks) == 3
    assert all(c["value"] == 38 and c["lacks_property"] and c["clique_free"] for c in rep.checks)
    assert g6(exceptional_graph("K6221")) in rep.predicted_graph6


def test_out_of_hypothesis_still_reports_search():
    rep = extremal_number(HAM, 8, 4)
    assert rep.verdict is Verdict.OUT_OF_HYPOTHESIS
    assert rep.computed_max is not None and rep.predicted_max is None


def test_json_is_deterministic_across_jobs():
    a = extremal_number(HAM, 8, 5, jobs=1)
    b = extremal_number(HAM, 8, 5, jobs=3)
    assert a.to_json() == b.to_json()
    data = json.loads(a.to_json())
    assert data["runtime_ms"] is None and data["schema"] == 1
    assert json.loads(a.to_json(timing=True))["runtime_ms"] is not None


def test_csv_row():
    rep = extremal_number(TRACE, 6, 4)
    row = csv_row(rep)
    assert row["theorem"] == "trace" and row["extremal_count"] == 2 and row["verdict"] == "match"


def test_clique_metric_instance():
    rep = extremal_number(HAM, 7, 5, metric=Metric("cliques", 3))
    assert rep.verdict is Verdict.MATCH
    assert rep.computed_max == 16
    assert multipartite_clique_count([4, 1, 1, 1], 3) == 13 < rep.computed_max


@pytest.mark.parametrize("name", sorted(WITNESS_CLAIMS))
def test_witness_checks(name):
    rep = witness_check(name)
    assert rep.verdict is Verdict.WITNESS_ONLY, rep.checks


def test_witness_names():
    assert normalize_witness_name("K_{6,2,2,1}") == "K6221"
    with pytest.raises(KeyError):
        normalize_witness_name("K99")
    rep = witness_check("K72221111")
    assert rep.computed_max == 112 and rep.predicted_max == 112 + 5


def test_degree_theorem_ranges():
    assert degree_theorem_min_n(8, -1) == 7
    assert degree_theorem_min_n(9, 0) == 9
    assert degree_theorem_min_n(3, -1) == 20
    assert degree_theorem_min_n(2, 0) is None


@pytest.mark.parametrize("r, ell, n", [(8, -1, 7), (8, -1, 8), (8, 0, 9), (5, -1, 7), (4, -1, 6)])
def test_degree_theorem_instances(r, ell, n):
    assert verify_degree_theorem(r, ell, n).verdict is Verdict.MATCH


def test_degree_theorem_below_range():
    assert verify_degree_theorem(8, 0, 8).verdict is Verdict.OUT_OF_HYPOTHESIS


@pytest.mark.parametrize("t, r", [(3, None), (4, None), (3, 3)])
def test_clique_bounds(t, r):
    rep = verify_clique_bounds(t, 9, r=r, n_max=7)
    assert rep.verdict is Verdict.MATCH
    assert all(row["ok"] for row in rep.checks)


def test_clique_bounds_budget():
    with pytest.raises(BudgetRefusal):
        verify_clique_bounds(3, 40)
    with pytest.raises(BudgetRefusal):
        verify_clique_bounds(3, 10, n_max=12)


@pytest.mark.parametrize("n, r, k", [(9, 5, 0), (10, 4, 1), (8, 3, -1), (12, 3, 2), (16, 5, 1)])
def test_family_checks(n, r, k):
    rep = family_characterization_check(n, r, k)
    assert rep.verdict is Verdict.MATCH, rep.checks


def test_family_check_domain():
    assert family_characterization_check(5, 5, 0).verdict is Verdict.OUT_OF_HYPOTHESIS
    assert family_characterization_check(6, 3, 4).verdict is Verdict.OUT_OF_HYPOTHESIS


def test_kham_and_kpath_registry():
    rep = extremal_number(kham(1), 8, 5)
    assert rep.ok
    rep = extremal_number(kpath(1), 8, 5)
    assert rep.ok
