"""Shortest paths over a `Roadmap`: Dijkstra and A* with a 3D-chord heuristic."""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass

import numpy as np

from .edge_cost import DEFAULT_PANEL_SCALE, CostModel, rm_line_distance
from .quadrature import QuadratureRule
from .roadmap import Roadmap
from .surface import HeightField


class UnreachableGoal(RuntimeError):
    """The frontier emptied before the goal was settled."""


ALGORITHMS = ("rm-dijkstra", "dijkstra-euclid", "astar-euclid")


@dataclass
class PlanResult:
    node_sequence: list[int]
    planar_polyline: np.ndarray
    total_cost: float
    per_edge_costs: list[float]
    algorithm: str
    expanded_count: int
    elapsed: float


def _reconstruct(prev, start, goal):
    seq = [goal]
    while seq[-1] != start:
        seq.append(int(prev[seq[-1]]))
    return seq[::-1]


def _result(r: Roadmap, prev, algorithm, expanded, t0) -> PlanResult:
    seq = _reconstruct(prev, r.start_idx, r.end_idx)
    costs = [float(r.weights[a, b]) for a, b in zip(seq, seq[1:])]
    return PlanResult(
        node_sequence=seq,
        planar_polyline=r.points[seq].copy(),
        total_cost=float(sum(costs)),
        per_edge_costs=costs,
        algorithm=algorithm,
        expanded_count=expanded,
        elapsed=time.perf_counter() - t0,
    )


def _search(r: Roadmap, heuristic: np.ndarray | None, algorithm: str) -> PlanResult:
    t0 = time.perf_counter()
    n = r.n
    start, goal = r.start_idx, r.end_idx
    h = np.zeros(n) if heuristic is None else heuristic
    dist = np.full(n, np.inf)
    prev = np.full(n, -1, dtype=np.int64)
    closed = np.zeros(n, dtype=bool)
    dist[start] = 0.0
    # (f, node) so equal priorities resolve toward the lower index
    heap = [(h[start], start)]
    expanded = 0
    while heap:
        f, u = heapq.heappop(heap)
        if closed[u] or f > dist[u] + h[u]:
            continue
        closed[u] = True
        expanded += 1
        if u == goal:
            return _result(r, prev, algorithm, expanded, t0)
        row = r.weights[u]
        cand = dist[u] + row
        # nodes may reopen: GL rounding can leave an edge a hair under its chord
        better = np.flatnonzero(cand < dist)
        better = better[better != u]
        dist[better] = cand[better]
        prev[better] = u
        closed[better] = False
        for v in better.tolist():
            heapq.heappush(heap, (dist[v] + h[v], v))
    raise UnreachableGoal(f"goal {goal} unreachable from {start}")


def dijkstra(r: Roadmap) -> PlanResult:
    algorithm = "rm-dijkstra" if r.cost_model is CostModel.RIEMANNIAN else "dijkstra-euclid"
    return _search(r, None, algorithm)


def chord_heuristic(r: Roadmap, field: HeightField) -> np.ndarray:
    """3D straight-line distance from every lifted node to the lifted goal."""
    g = r.points[r.end_idx]
    z = np.asarray(field.height(r.points[:, 0], r.points[:, 1]))
    d = r.points - g
    return np.sqrt(d[:, 0] ** 2 + d[:, 1] ** 2 + (z - z[r.end_idx]) ** 2)


def astar(r: Roadmap, field: HeightField) -> PlanResult:
    algorithm = "astar-euclid" if r.cost_model is CostModel.CHORD3D else "astar-rm"
    return _search(r, chord_heuristic(r, field), algorithm)


def path_surface_length(field: HeightField, polyline, rule: QuadratureRule | None = None,
                        panel_scale: float = DEFAULT_PANEL_SCALE) -> float:
    """Re-measure a planar polyline under the pulled-back metric."""
    polyline = np.asarray(polyline, dtype=float)
    if len(polyline) < 2:
        raise ValueError("polyline needs at least 2 points")
    return float(sum(rm_line_distance(field, a, b, rule, panel_scale) for a, b in zip(polyline[:-1], polyline[1:])))
