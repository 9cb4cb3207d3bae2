"""Sampled planar roadmaps with dense symmetric weight matrices.

Absent edges (only produced by `prune_knn`) are stored as ``inf``; the
diagonal is 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace

import numpy as np

from .edge_cost import DEFAULT_PANEL_SCALE, CostModel, euclid3d_distances, rm_line_distances
from .quadrature import DEFAULT_ORDER, QuadratureRule, gauss_legendre
from .surface import HeightField

NO_EDGE = np.inf


@dataclass(frozen=True)
class Workspace:
    min1: float
    max1: float
    min2: float
    max2: float

    def __post_init__(self):
        if not (self.min1 < self.max1 and self.min2 < self.max2):
            raise ValueError(f"degenerate workspace {self}")

    def contains(self, p) -> bool:
        return self.min1 <= p[0] <= self.max1 and self.min2 <= p[1] <= self.max2


PAPER_WORKSPACE = Workspace(-1.0, 11.0, -1.0, 11.0)


@dataclass(eq=False)
class Roadmap:
    points: np.ndarray
    weights: np.ndarray
    cost_model: CostModel
    seed: int | None = None
    start_idx: int = 0
    end_idx: int = 1
    warnings: list[str] = dc_field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.points)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and np.isfinite(self.weights[i, j])

    def edge_count(self) -> int:
        w = self.weights
        return int((np.isfinite(w).sum() - len(w)) // 2)


def sample_points(n: int, ws: Workspace, seed: int, start, goal) -> np.ndarray:
    """``start``, ``goal`` and ``n - 2`` uniform draws from ``ws``, as an (n, 2) array."""
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    for name, p in (("start", start), ("goal", goal)):
        if not ws.contains(p):
            raise ValueError(f"{name} {tuple(p)} lies outside the workspace")
    rng = np.random.default_rng(seed)
    pts = np.empty((n, 2))
    pts[0] = start
    pts[1] = goal
    pts[2:, 0] = rng.uniform(ws.min1, ws.max1, n - 2)
    pts[2:, 1] = rng.uniform(ws.min2, ws.max2, n - 2)
    return pts


def build_graph(points, field: HeightField, model: CostModel, rule: QuadratureRule | None = None,
                seed: int | None = None, start_idx: int = 0, end_idx: int = 1,
                panel_scale: float = DEFAULT_PANEL_SCALE) -> Roadmap:
    """Complete graph on ``points``; each unordered pair is costed once."""
    points = np.asarray(points, dtype=float)
    n = len(points)
    if n < 2:
        raise ValueError("need at least 2 points")
    model = CostModel(model)
    rule = rule or gauss_legendre(DEFAULT_ORDER)
    iu, ju = np.triu_indices(n, k=1)
    if model is CostModel.RIEMANNIAN:
        w = rm_line_distances(field, points[iu], points[ju], rule, panel_scale)
    else:
        w = euclid3d_distances(field, points[iu], points[ju])
    weights = np.zeros((n, n))
    weights[iu, ju] = w
    weights[ju, iu] = w
    return Roadmap(points, weights, model, seed, start_idx, end_idx)


def _reachable(weights: np.ndarray, src: int) -> np.ndarray:
    adj = np.isfinite(weights)
    seen = np.zeros(len(weights), dtype=bool)
    seen[src] = True
    stack = [src]
    while stack:
        u = stack.pop()
        new = adj[u] & ~seen
        seen |= new
        stack.extend(np.flatnonzero(new).tolist())
    return seen


def prune_knn(r: Roadmap, k: int) -> Roadmap:
    """Keep each node's ``k`` nearest planar neighbours; an edge survives if either end keeps it."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = r.n
    if k >= n - 1:
        return replace(r, weights=r.weights.copy(), warnings=list(r.warnings))
    diff = r.points[:, None, :] - r.points[None, :, :]
    d2 = np.einsum("ijk,ijk->ij", diff, diff)
    np.fill_diagonal(d2, np.inf)
    # stable sort so equal distances resolve by node index
    nearest = np.argsort(d2, axis=1, kind="stable")[:, :k]
    keep = np.zeros((n, n), dtype=bool)
    keep[np.repeat(np.arange(n), k), nearest.ravel()] = True
    keep |= keep.T
    np.fill_diagonal(keep, True)
    weights = np.where(keep, r.weights, NO_EDGE)
    warnings = list(r.warnings)
    if not _reachable(weights, r.start_idx)[r.end_idx]:
        warnings.append(f"knn={k} pruning disconnects start from goal")
    return replace(r, weights=weights, warnings=warnings)
