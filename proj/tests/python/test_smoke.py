"""Smoke tests for the python bindings."""

import math

import pytest

import densekit as dk


def test_graph_basics():
    g = dk.Graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
    assert g.vertex_count == 4
    assert g.edge_count == 4
    assert g.degree(0) == 2.0
    assert g.connected()


def test_conductance_of_cycle_arc():
    edges = [(i, (i + 1) % 8, 1.0) for i in range(8)]
    g = dk.Graph(8, edges)
    assert dk.conductance(g, [0, 1, 2, 3]) == pytest.approx(0.25)


def test_spectral_cluster_recovers_sbm():
    g, truth = dk.sbm(60, 3, 0.9, 0.05, seed=7)
    pred = dk.spectral_cluster(g, k=3, ell=2, seed=1)
    assert dk.adjusted_rand_index(truth, pred) == pytest.approx(1.0)


def test_smallest_eigs_contract():
    g, _ = dk.sbm(40, 2, 0.8, 0.1, seed=3)
    values, vectors = dk.smallest_eigs(g, 3)
    assert values[0] == pytest.approx(0.0, abs=1e-9)
    assert vectors.shape == (40, 3)
    assert sorted(values) == pytest.approx(list(values))


def test_local_bipartite_on_complete_bipartite():
    edges = [(i, 5 + j, 1.0) for i in range(5) for j in range(5)]
    g = dk.Graph(10, edges)
    res = dk.loc_bipart_dc(g, seed=0, gamma=g.total_volume(), beta=0.9, best_prefix=True)
    assert res["found"]
    assert res["beta"] == pytest.approx(0.0)
    assert sorted(res["L"] + res["R"]) == list(range(10))


def test_evo_cut_directed():
    arcs = [(i, 6 + j, 1.0) for i in range(6) for j in range(6)]
    d = dk.Digraph(12, arcs)
    res = dk.evo_cut_directed(d, seed=0, side="both", phi=1e-4, rng_seed=5, steps=20)
    assert res["found"]
    assert res["flow_ratio"] <= 0.1


def test_hypergraph_diffusion_two_colourable():
    h = dk.Hypergraph(6, [(1.0, [0, 3, 4]), (1.0, [1, 3, 5]), (1.0, [2, 4, 5])])
    res = dk.find_bipartite_components(h, f0=[1.0, 1.0, 1.0, -1.0, -1.0, -1.0])
    assert res["lambda"] == pytest.approx(0.0, abs=1e-12)
    assert res["beta_h"] == pytest.approx(0.0)
    # the quotient history never increases
    hist = res["rq_history"]
    assert all(b <= a + 1e-6 for a, b in zip(hist, hist[1:]))


def test_clique_cut_and_reduction():
    h, left, right = dk.hyper_two_cluster(40, 3, 0.05, 0.2, seed=11)
    g = dk.clique_reduction(h)
    assert g.vertex_count == h.vertex_count
    for v in range(h.vertex_count):
        assert g.degree(v) == pytest.approx(h.degree(v))
    res = dk.clique_cut(h)
    assert res["beta"] <= 1.0


def test_double_cover_correspondence():
    g, _ = dk.sbm(12, 2, 0.6, 0.2, seed=9)
    dc = dk.double_cover(g)
    left, right = [0, 1, 2], [3, 4, 5]
    lifted = left + [v + 12 for v in right]
    beta = dk.bipartiteness(g, left, right)
    cut = sum(w for (u, v, w) in dc.edges() if (u in lifted) != (v in lifted))
    vol = sum(dc.degree(v) for v in lifted)
    assert cut / vol == pytest.approx(beta, abs=1e-12)


def test_metrics_match_known_values():
    truth = [[0, 1], [2, 3]]
    pred = [[0, 2], [1, 3]]
    assert dk.rand_index(truth, pred) == pytest.approx(1.0 / 3.0)
    assert dk.misclassified_ratio([0, 1], [2, 3], [0, 1], [2, 3]) == 0.0
    assert dk.f1_pair_score([0, 1], [2, 3], [2, 3], [0, 1]) == pytest.approx(1.0)


def test_errors_surface_as_exceptions():
    g = dk.Graph(3, [(0, 1, 1.0)])
    with pytest.raises(Exception):
        dk.conductance(g, [])
    with pytest.raises(Exception):
        dk.Graph(2, [(0, 0, 1.0)])
