import random

import pytest

from blockerlab.bipartite_blocker import (
    alpha_after_contraction_bipartite,
    build_contraction_tree,
    solve_bipartite_contraction_blocker,
)
from blockerlab.catalogue import graph_catalogue, random_connected_bipartite
from blockerlab.errors import CertificateError
from blockerlab.graph import (
    Graph,
    complete_bipartite_graph,
    contract_edges,
    cycle_graph,
    delete_vertices,
    is_forest,
    path_graph,
    restriction,
)
from blockerlab.oracle import min_critical_size
from blockerlab.parameters import alpha_exact, mu_bipartite
from blockerlab.recognizers import recognize_bipartite


def test_tree_trace_on_p4():
    g = path_graph(4)
    m = mu_bipartite(g, recognize_bipartite(g)).witness
    assert sorted(m) == [(0, 1), (2, 3)]
    tree = build_contraction_tree(g, m, 1)
    assert sorted(tree) == [(0, 1), (1, 2), (2, 3)]


def test_tree_trace_on_c4():
    g = cycle_graph(4)
    m = mu_bipartite(g, recognize_bipartite(g)).witness
    tree = build_contraction_tree(g, m, 1)
    assert len(tree) == 3
    assert is_forest(restriction(g, tree))
    assert restriction(g, tree).connected_components()[0] == [0, 1, 2, 3]


def test_tree_on_k23():
    g = complete_bipartite_graph(2, 3)
    m = mu_bipartite(g, recognize_bipartite(g)).witness
    assert len(m) == 2
    tree = build_contraction_tree(g, m, 1)
    assert len(tree) in (2, 3)
    assert is_forest(restriction(g, tree))


def test_tree_edge_count_and_alpha_drop_random():
    rng = random.Random(21)
    for d in (1, 2):
        done = 0
        while done < 60:
            n = rng.randint(2 * d + 2, 11)
            g = random_connected_bipartite(rng, n)
            cert = recognize_bipartite(g)
            alpha = alpha_exact(g).value
            if alpha < d + 1:
                continue
            m = mu_bipartite(g, cert).witness
            tree = build_contraction_tree(g, m, d)
            assert len(tree) in (2 * d, 2 * d + 1)
            sub = restriction(g, tree)
            assert is_forest(sub)
            assert max(len(c) for c in sub.connected_components()) == len(tree) + 1
            after = alpha_exact(contract_edges(g, tree)[0]).value
            assert after <= alpha - d
            # The proof's intermediate bound for the tree-deleted graph.
            touched = {v for e in tree for v in e}
            remainder, _ = delete_vertices(g, touched)
            assert alpha_exact(remainder).value <= alpha - d - 1
            done += 1


def test_tree_precondition_errors():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        build_contraction_tree(g, frozenset({(0, 1)}), 1)  # disconnected
    with pytest.raises(ValueError):
        build_contraction_tree(path_graph(4), frozenset(), 1)  # empty matching


def test_alpha_after_examples():
    g = cycle_graph(4)
    cert = recognize_bipartite(g)
    assert alpha_after_contraction_bipartite(g, [], cert) == 2
    assert alpha_after_contraction_bipartite(g, [(0, 1)], cert) == 1
    p4 = path_graph(4)
    cert4 = recognize_bipartite(p4)
    assert alpha_after_contraction_bipartite(p4, [(0, 1), (2, 3)], cert4) == 1


def test_alpha_after_matches_exact_on_random_subsets():
    rng = random.Random(31)
    for _ in range(150):
        g = random_connected_bipartite(rng, rng.randint(2, 9))
        cert = recognize_bipartite(g)
        edges = g.edges()
        s = rng.sample(edges, rng.randint(0, min(4, len(edges))))
        expected = alpha_exact(contract_edges(g, s)[0]).value
        assert alpha_after_contraction_bipartite(g, s, cert) == expected


def test_solver_spec_examples():
    p4 = path_graph(4)
    assert not solve_bipartite_contraction_blocker(p4, 1, 1).answer
    out = solve_bipartite_contraction_blocker(p4, 2, 1)
    assert out.answer and len(out.witness.edges) <= 2
    assert solve_bipartite_contraction_blocker(cycle_graph(4), 1, 1).answer


def test_solver_guaranteed_yes_at_2d_plus_1():
    rng = random.Random(41)
    for d in (1, 2):
        done = 0
        while done < 40:
            g = random_connected_bipartite(rng, rng.randint(2 * d + 2, 11))
            if alpha_exact(g).value < d + 1:
                continue
            out = solve_bipartite_contraction_blocker(g, 2 * d + 1, d)
            assert out.answer
            w = out.witness
            after = alpha_exact(contract_edges(g, w.edges)[0]).value
            assert after == w.claimed_alpha_after <= out.alpha_before - d
            done += 1


def test_solver_agrees_with_oracle_small():
    for g in graph_catalogue("bipartite", 6):
        if g.n < 2:
            continue
        m = g.edge_count()
        for d in (1, 2):
            mstar = min_critical_size(g, "contract", "alpha", d)
            for k in range(0, m + 1):
                out = solve_bipartite_contraction_blocker(g, k, d)
                assert out.answer == (mstar is not None and mstar <= k)


def test_solver_supports_d3():
    rng = random.Random(61)
    checked = 0
    while checked < 5:
        g = random_connected_bipartite(rng, rng.randint(8, 10))
        if alpha_exact(g).value < 4:
            continue
        mstar = min_critical_size(g, "contract", "alpha", 3)
        for k in (mstar - 1, mstar, 7):
            out = solve_bipartite_contraction_blocker(g, k, 3)
            assert out.answer == (mstar <= k)
        checked += 1


def test_solver_rejects_bad_inputs():
    from blockerlab.graph import complete_graph

    with pytest.raises(CertificateError):
        solve_bipartite_contraction_blocker(complete_graph(3), 1, 1)
    with pytest.raises(CertificateError):
        solve_bipartite_contraction_blocker(Graph(4, [(0, 1), (2, 3)]), 1, 1)
    with pytest.raises(ValueError):
        solve_bipartite_contraction_blocker(path_graph(4), 1, 0)
    with pytest.raises(ValueError):
        solve_bipartite_contraction_blocker(path_graph(4), -1, 1)
    with pytest.raises(ValueError):
        solve_bipartite_contraction_blocker(path_graph(4), 1, 4)


def test_threads_do_not_change_the_answer():
    rng = random.Random(51)
    for _ in range(10):
        g = random_connected_bipartite(rng, rng.randint(4, 9))
        for k, d in [(1, 1), (2, 1), (3, 2)]:
            serial = solve_bipartite_contraction_blocker(g, k, d, threads=1)
            parallel = solve_bipartite_contraction_blocker(g, k, d, threads=2)
            assert serial.answer == parallel.answer
