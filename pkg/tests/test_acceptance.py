"""End-to-end acceptance checks, one test per criterion.

Every comparison is exact (integers and canonical graph6 sets); the only
tolerances are wall-clock budgets, pinned in BUDGET_S.  Each test prints a
PASS/FAIL line and also records it for the terminal summary.
"""
import time

from conftest import record
from hamextremal.cli import run
from hamextremal.conditions import berge_violation, chvatal_violation, kronk_violation
from hamextremal.constructions import exceptional_graph, g_family, g_star_via_colex, turan_graph
from hamextremal.enumeration import EnumConstraints, enumerate_graphs
from hamextremal.formulas import (
    HAM,
    HAMCONN,
    TRACE,
    count_cliques,
    multipartite_clique_count,
    multipartite_edges,
    turan_edges,
    turan_part_sizes,
)
from hamextremal.graph_core import canonical_form, complete_multipartite, degree_sequence
from hamextremal.properties import (
    is_hamiltonian,
    is_hamiltonian_connected,
    is_k_hamiltonian,
    is_k_path_hamiltonian,
    is_traceable,
)
from hamextremal.verify import (
    Metric,
    Verdict,
    degree_theorem_min_n,
    extremal_number,
    family_characterization_check,
    verify_clique_bounds,
    verify_degree_theorem,
    witness_check,
)

BUDGET_S = {1: 1, 2: 300, 3: 1800, 4: 60, 5: 600, 6: 1, 7: 900, 8: 1200, 9: 1800, 10: 1800}


def g6(g):
    return canonical_form(g).graph6


def report(number, failures, elapsed, summary):
    in_time = elapsed < BUDGET_S[number]
    ok = not failures and in_time
    detail = f"{summary}; {elapsed:.1f}s (budget {BUDGET_S[number]}s)"
    if failures:
        detail += "; failures: " + "; ".join(map(str, failures[:5]))
    elif not in_time:
        detail += "; over time budget"
    record(number, ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_formulas():
    t0 = time.perf_counter()
    failures = []
    for n in range(41):
        for r in range(1, 11):
            if turan_edges(n, r) != multipartite_edges(turan_part_sizes(n, r)):
                failures.append((n, r))
    stated = {(10, 4): 37, (6, 5): 14, (8, 5): 25, (8, 8): 28, (16, 8): 112}
    for (n, r), value in stated.items():
        if turan_edges(n, r) != value:
            failures.append(("stated", n, r, turan_edges(n, r), value))
    report(1, failures, time.perf_counter() - t0, "Turán counts n<=40, r<=10 and 5 stated values")


def test_criterion_02_degree_conditions():
    t0 = time.perf_counter()
    failures = []
    graphs = 0
    for n in range(1, 9):
        for g in enumerate_graphs(EnumConstraints(n)):
            graphs += 1
            d = degree_sequence(g)
            # a graph without a condition hit must have the property
            if chvatal_violation(d, "traceable") is None and not is_traceable(g):
                failures.append(("trace", g6(g)))
            if n >= 3 and chvatal_violation(d, "hamiltonian") is None and not is_hamiltonian(g):
                failures.append(("ham", g6(g)))
            for k in range(0, min(3, n - 3) + 1):
                if chvatal_violation(d, "k_hamiltonian", k) is None and not is_k_hamiltonian(g, k):
                    failures.append(("kham", k, g6(g)))
            if n >= 4 and berge_violation(d) is None and not is_hamiltonian_connected(g):
                failures.append(("hamconn", g6(g)))
            if n <= 7:
                for k in range(0, min(2, n - 3) + 1):
                    if kronk_violation(d, k) is None and not is_k_path_hamiltonian(g, k):
                        failures.append(("kpath", k, g6(g)))
    if graphs != 1 + 2 + 4 + 11 + 34 + 156 + 1044 + 12346:
        failures.append(("class count", graphs))
    report(2, failures, time.perf_counter() - t0, f"{graphs} graphs on n<=8, zero unexplained failures")


def test_criterion_03_hamiltonian_extremal_sets():
    t0 = time.perf_counter()
    failures = []
    for n, max_edges, extra in [(7, 15, "K4111"), (9, 26, "K51111")]:
        rep = extremal_number(HAM, n, 5, jobs=1)
        want = {g6(g) for g in g_family(n, 5, 0)} | {g6(exceptional_graph(extra))}
        if rep.computed_max != max_edges or set(rep.extremal_graph6) != want:
            failures.append((n, rep.computed_max, rep.extremal_graph6))
        if rep.verdict is not Verdict.MATCH:
            failures.append((n, rep.verdict.value))
    for r in (5, 6, 7):
        rep = extremal_number(HAM, 5, r)
        if g6(exceptional_graph("K311")) not in rep.extremal_graph6 or rep.verdict is not Verdict.MATCH:
            failures.append((5, r, rep.verdict.value))
    report(3, failures, time.perf_counter() - t0, "non-Hamiltonian K_6-free maxima at n=7,9 and K_{3,1,1} at n=5")


def test_criterion_04_traceable_extremal_sets():
    t0 = time.perf_counter()
    failures = []
    rep = extremal_number(TRACE, 6, 4)
    want = {g6(turan_graph(5, 4).add_vertex()), g6(exceptional_graph("K411"))}
    if rep.computed_max != 9 or set(rep.extremal_graph6) != want:
        failures.append((6, 4, rep.computed_max, rep.extremal_graph6))
    for r in (5, 6, 7):
        rep = extremal_number(TRACE, 4, r)
        if g6(exceptional_graph("K31")) not in rep.extremal_graph6:
            failures.append((4, r, rep.extremal_graph6))
    report(4, failures, time.perf_counter() - t0, "non-traceable maxima at (6,4) and K_{3,1} at n=4, r>=5")


def test_criterion_05_triangle_free():
    t0 = time.perf_counter()
    failures = []
    for n in (6, 7, 8, 9):
        lo, hi = n // 2, (n + 1) // 2
        expected = {
            TRACE: multipartite_edges([hi + 1, lo - 1]),
            HAM: multipartite_edges([lo + 1, hi - 1]),
            HAMCONN: multipartite_edges([hi, lo]),
        }
        for prop, value in expected.items():
            rep = extremal_number(prop, n, 2)
            if rep.computed_max != value:
                failures.append((prop.label, n, rep.computed_max, value))
            if prop is TRACE and n >= 8:
                if rep.extremal_graph6 != [g6(complete_multipartite([hi + 1, lo - 1]))]:
                    failures.append(("unique", n, rep.extremal_graph6))
    report(5, failures, time.perf_counter() - t0, "triangle-free maxima for n=6..9")


def test_criterion_06_witnesses():
    t0 = time.perf_counter()
    failures = []
    six = witness_check("K6221")
    if six.verdict is not Verdict.WITNESS_ONLY or six.computed_max != 38 or six.predicted_max != 38:
        failures.append(("K6221", six.checks))
    big = witness_check("K72221111")
    if big.verdict is not Verdict.WITNESS_ONLY or big.computed_max != 112:
        failures.append(("K72221111", big.checks))
    report(6, failures, time.perf_counter() - t0, "K_{6,2,2,1} (e=38) and K_{7,2,2,2,1,1,1,1} (e=112)")


def test_criterion_07_clique_suites():
    t0 = time.perf_counter()
    failures = []
    for t in (3, 4):
        for r in (None, 3):
            rep = verify_clique_bounds(t, 12, r=r, n_max=8)
            if rep.verdict is not Verdict.MATCH:
                failures.append((t, r, [row for row in rep.checks if not row["ok"]]))
    # T_5(6) plus a pendant vertex: the pendant adds no triangles
    host = multipartite_clique_count([2, 1, 1, 1, 1], 3)
    k4111 = multipartite_clique_count([4, 1, 1, 1], 3)
    if count_cliques(g_star_via_colex(7, 5, 0), 3) != host or host != 16:
        failures.append(("product-sum oracle", "G*", host))
    if count_cliques(exceptional_graph("K4111"), 3) != k4111 or k4111 != 13:
        failures.append(("product-sum oracle", "K4111", k4111))
    rep = extremal_number(HAM, 7, 5, metric=Metric("cliques", 3))
    if rep.computed_max != 16 or rep.predicted_max != 16 or not rep.computed_max > k4111:
        failures.append(("clique instance", rep.computed_max, rep.predicted_max))
    report(7, failures, time.perf_counter() - t0,
           "t=3,4 colex and K_4-free colex bounds for m<=12 on n<=8; k_3 max 16 > 13 at (7,5)")


def test_criterion_08_family_properties():
    t0 = time.perf_counter()
    failures = []
    runs = 0
    for n in range(4, 17):
        for r in (3, 4, 5):
            for k in range(-1, 4):
                if not (r <= n - 1 and k <= n - 3):
                    continue
                rep = family_characterization_check(n, r, k)
                runs += 1
                if rep.verdict is not Verdict.MATCH:
                    failures.append((n, r, k, [c for c in rep.checks if not c["ok"]]))
    report(8, failures, time.perf_counter() - t0, f"{runs} family checks, n<=16, r in 3..5, ell in -1..3")


def test_criterion_09_degree_theorem():
    t0 = time.perf_counter()
    failures = []
    runs, skipped = 0, []
    cases = [(8, ell, n) for ell in (-1, 0) for n in (7, 8, 9)]
    cases += [(r, -1, n) for r in range(4, 8) for n in range(6, 10)]
    for r, ell, n in cases:
        if n < degree_theorem_min_n(r, ell):
            skipped.append((r, ell, n))
            if verify_degree_theorem(r, ell, n).verdict is not Verdict.OUT_OF_HYPOTHESIS:
                failures.append(("expected out_of_hypothesis", r, ell, n))
            continue
        rep = verify_degree_theorem(r, ell, n)
        runs += 1
        if rep.verdict is not Verdict.MATCH:
            failures.append((r, ell, n, rep.extremal_graph6, rep.predicted_graph6))
    report(9, failures, time.perf_counter() - t0,
           f"{runs} in-hypothesis instances match; below range: {skipped}")


DETERMINISM_RUNS = [
    ["--theorem", "ham", "--n", "7", "--r", "5"],
    ["--theorem", "ham", "--n", "9", "--r", "5"],
    ["--theorem", "trace", "--n", "6", "--r", "4"],
    ["--theorem", "hamconn", "--n", "8", "--r", "2"],
    ["--theorem", "clique_extremal(ham,3)", "--n", "7", "--r", "5"],
    ["--theorem", "kk_clique(3)", "--m", "10", "--n", "7"],
    ["--theorem", "degree(8,-1)", "--n", "8"],
    ["--theorem", "family(1)", "--n", "12", "--r", "4"],
    ["--theorem", "witness(K6221)"],
]


def test_criterion_10_determinism(tmp_path, capsys):
    t0 = time.perf_counter()
    failures = []
    for i, argv in enumerate(DETERMINISM_RUNS):
        outputs = []
        for jobs in ("1", "8"):
            path = tmp_path / f"run{i}-{jobs}.json"
            run(["verify", *argv, "--jobs", jobs, "--json", str(path)])
            capsys.readouterr()
            outputs.append(path.read_bytes())
        if outputs[0] != outputs[1]:
            failures.append(" ".join(argv))
    report(10, failures, time.perf_counter() - t0, f"{len(DETERMINISM_RUNS)} verify runs byte-identical at --jobs 1 and 8")
