import numpy as np
import pytest

from rmplan.edge_cost import CostModel
from rmplan.planner import dijkstra
from rmplan.roadmap import PAPER_WORKSPACE, Workspace, build_graph, prune_knn, sample_points
from rmplan.surface import Flat


def test_two_nodes_only_start_goal():
    pts = sample_points(2, PAPER_WORKSPACE, 3, (0, 0), (10, 10))
    assert pts.tolist() == [[0, 0], [10, 10]]


def test_sampling_bounds_and_determinism():
    a = sample_points(500, PAPER_WORKSPACE, 7, (0, 0), (10, 10))
    b = sample_points(500, PAPER_WORKSPACE, 7, (0, 0), (10, 10))
    assert a.shape == (500, 2)
    assert np.array_equal(a, b)
    assert np.all((a >= -1) & (a <= 11))
    assert not np.array_equal(a, sample_points(500, PAPER_WORKSPACE, 8, (0, 0), (10, 10)))


@pytest.mark.parametrize("n, start, goal", [(1, (0, 0), (1, 1)), (5, (-2, 0), (1, 1)), (5, (0, 0), (11.5, 1))])
def test_sampling_rejects(n, start, goal):
    with pytest.raises(ValueError):
        sample_points(n, PAPER_WORKSPACE, 0, start, goal)


def test_workspace_validation():
    with pytest.raises(ValueError):
        Workspace(1, 1, 0, 2)


@pytest.mark.parametrize("model", list(CostModel))
def test_two_point_graph(model):
    r = build_graph([(0, 0), (3, 4)], Flat(0), model)
    assert r.weights.tolist() == [[0, 5], [5, 0]]


def test_collinear_flat_additive():
    r = build_graph([(0, 0), (1, 1), (3, 3)], Flat(0), CostModel.RIEMANNIAN)
    assert abs(r.weights[0, 2] - (r.weights[0, 1] + r.weights[1, 2])) < 1e-12


def test_full_paper_graph(one_peak):
    pts = sample_points(500, PAPER_WORKSPACE, 0, (0, 0), (10, 10))
    r = build_graph(pts, one_peak, CostModel.RIEMANNIAN, seed=0)
    w = r.weights
    assert np.array_equal(w, w.T)
    assert np.all(np.diag(w) == 0)
    upper = w[np.triu_indices(500, 1)]
    assert upper.size == 124750 and np.all(upper > 0)
    assert r.edge_count() == 124750
    chord = build_graph(pts, one_peak, CostModel.CHORD3D).weights
    assert np.all(w >= chord - 1e-9)
    again = build_graph(pts, one_peak, CostModel.RIEMANNIAN).weights
    assert w.tobytes() == again.tobytes()


def test_knn_identity_when_k_large(one_peak, rng):
    r = build_graph(rng.uniform(0, 10, (6, 2)), one_peak, CostModel.RIEMANNIAN)
    assert np.array_equal(prune_knn(r, 5).weights, r.weights)


def test_knn_symmetrized_path():
    r = build_graph([(0, 0), (2, 0), (1, 0)], Flat(0), CostModel.CHORD3D)
    p = prune_knn(r, 1)
    assert p.has_edge(0, 2) and p.has_edge(1, 2)
    assert not p.has_edge(0, 1)
    assert np.isinf(p.weights[0, 1]) and np.array_equal(p.weights, p.weights.T)
    assert p.warnings == []


def test_knn_disconnection_warning():
    pts = [(0, 0), (10, 10), (0.1, 0), (10, 10.1)]
    p = prune_knn(build_graph(pts, Flat(0), CostModel.CHORD3D), 1)
    assert any("disconnects" in w for w in p.warnings)


def test_knn_never_beats_complete_graph(one_peak):
    pts = sample_points(500, PAPER_WORKSPACE, 1, (0, 0), (10, 10))
    r = build_graph(pts, one_peak, CostModel.RIEMANNIAN)
    full = dijkstra(r).total_cost
    costs = [dijkstra(prune_knn(r, k)).total_cost for k in (20, 60, 499)]
    assert all(c >= full - 1e-12 for c in costs)
    # k=20 lands 1-3% above the complete graph on this field; k=60 is within 1%
    assert costs[0] <= 1.05 * full
    assert costs[1] <= 1.01 * full
    assert costs[2] == full
