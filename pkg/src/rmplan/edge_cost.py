"""Edge weights between planar points.

``RIEMANNIAN`` integrates the pulled-back line element along the straight
planar segment; ``CHORD3D`` is the straight 3D distance between the lifted
endpoints, which is what the Euclidean baselines use.

The Riemannian integral is a composite Gauss-Legendre rule: the segment is cut
into equal panels no wider than ``panel_scale * field.feature_length`` and the
order-n rule is applied on each. With ``panel_scale=inf`` (or a flat/planar
field) this is a single rule on the whole segment.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .metric import metric_components
from .quadrature import DEFAULT_ORDER, QuadratureRule, gauss_legendre
from .surface import HeightField

DEFAULT_PANEL_SCALE = 0.5
_CHUNK_NODES = 1 << 22


class CostModel(str, enum.Enum):
    RIEMANNIAN = "riemannian"
    CHORD3D = "chord3d"


def _line_element(field, x1, x2, dx1, dx2):
    h11, h12, h22 = metric_components(field, x1, x2)
    return np.sqrt(h11 * dx1 * dx1 + 2.0 * h12 * dx1 * dx2 + h22 * dx2 * dx2)


def panel_counts(field: HeightField, lengths, panel_scale: float = DEFAULT_PANEL_SCALE) -> np.ndarray:
    width = panel_scale * field.feature_length
    lengths = np.asarray(lengths, dtype=float)
    if not math.isfinite(width):
        return np.ones(lengths.shape, dtype=np.int64)
    return np.maximum(1, np.ceil(lengths / width)).astype(np.int64)


def _composite_nodes(rule: QuadratureRule, panels: int):
    """Nodes and weights of the composite rule on [0, 1]."""
    t, w = rule.mapped(0.0, 1.0)
    offsets = np.arange(panels)[:, None]
    return ((offsets + t) / panels).ravel(), np.tile(w / panels, panels)


def rm_line_distance(field: HeightField, start, end, rule: QuadratureRule | None = None,
                     panel_scale: float = DEFAULT_PANEL_SCALE) -> float:
    """Length of the segment start -> end under the pulled-back metric.

    The metric is evaluated at every quadrature node along the segment, so the
    result is the surface length of the lifted segment up to quadrature error.
    """
    rule = rule or gauss_legendre(DEFAULT_ORDER)
    dx1 = float(end[0]) - float(start[0])
    dx2 = float(end[1]) - float(start[1])
    if dx1 == 0.0 and dx2 == 0.0:
        return 0.0
    k = int(panel_counts(field, math.hypot(dx1, dx2), panel_scale))
    t, w = _composite_nodes(rule, k)
    vals = _line_element(field, start[0] + t * dx1, start[1] + t * dx2, dx1, dx2)
    return float(np.dot(w, vals))


def rm_line_distances(field: HeightField, starts, ends, rule: QuadratureRule | None = None,
                      panel_scale: float = DEFAULT_PANEL_SCALE) -> np.ndarray:
    """Batched `rm_line_distance` over arrays of shape (m, 2)."""
    rule = rule or gauss_legendre(DEFAULT_ORDER)
    starts = np.asarray(starts, dtype=float)
    ends = np.asarray(ends, dtype=float)
    deltas = ends - starts
    counts = panel_counts(field, np.hypot(deltas[:, 0], deltas[:, 1]), panel_scale)
    out = np.empty(len(starts))
    for k in np.unique(counts):
        idx = np.flatnonzero(counts == k)
        t, w = _composite_nodes(rule, int(k))
        step = max(1, _CHUNK_NODES // len(t))
        for lo in range(0, len(idx), step):
            sel = idx[lo:lo + step]
            s = starts[sel]
            dx1 = deltas[sel, 0:1]
            dx2 = deltas[sel, 1:2]
            vals = _line_element(field, s[:, 0:1] + t * dx1, s[:, 1:2] + t * dx2, dx1, dx2)
            out[sel] = vals @ w
    out[(deltas[:, 0] == 0.0) & (deltas[:, 1] == 0.0)] = 0.0
    return out


def euclid3d_distance(field: HeightField, start, end) -> float:
    dz = field.height(end[0], end[1]) - field.height(start[0], start[1])
    return math.sqrt((end[0] - start[0]) ** 2 + (end[1] - start[1]) ** 2 + dz * dz)


def euclid3d_distances(field: HeightField, starts, ends) -> np.ndarray:
    starts = np.asarray(starts, dtype=float)
    ends = np.asarray(ends, dtype=float)
    z0 = np.asarray(field.height(starts[:, 0], starts[:, 1]))
    z1 = np.asarray(field.height(ends[:, 0], ends[:, 1]))
    d = ends - starts
    return np.sqrt(d[:, 0] ** 2 + d[:, 1] ** 2 + (z1 - z0) ** 2)


def lifted_polyline_length(field: HeightField, start, end, m: int) -> float:
    """Sum of 3D chords after splitting the segment into ``m`` equal planar pieces."""
    if m < 1:
        raise ValueError("m must be >= 1")
    t = np.linspace(0.0, 1.0, m + 1)
    x1 = start[0] + t * (end[0] - start[0])
    x2 = start[1] + t * (end[1] - start[1])
    x3 = np.asarray(field.height(x1, x2))
    return float(np.sum(np.sqrt(np.diff(x1) ** 2 + np.diff(x2) ** 2 + np.diff(x3) ** 2)))


def segment_cost(field: HeightField, start, end, model: CostModel, rule: QuadratureRule | None = None,
                 panel_scale: float = DEFAULT_PANEL_SCALE) -> float:
    if CostModel(model) is CostModel.RIEMANNIAN:
        return rm_line_distance(field, start, end, rule, panel_scale)
    return euclid3d_distance(field, start, end)
