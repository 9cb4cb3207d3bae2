"""Lift planar polylines onto the surface as densely sampled 3D paths."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .surface import HeightField


@dataclass
class SurfacePath:
    samples: np.ndarray  # (m, 3)
    segment_boundaries: list[int]
    total_chord_length: float

    def arc_parameter(self) -> np.ndarray:
        """Cumulative chord length normalised to [0, 1]."""
        steps = np.linalg.norm(np.diff(self.samples, axis=0), axis=1)
        s = np.concatenate([[0.0], np.cumsum(steps)])
        return s / s[-1] if s[-1] > 0 else s


def lift_path(field: HeightField, polyline, samples_per_segment: int = 200) -> SurfacePath:
    polyline = np.asarray(polyline, dtype=float)
    if len(polyline) < 2:
        raise ValueError("polyline needs at least 2 points")
    if samples_per_segment < 1:
        raise ValueError("samples_per_segment must be >= 1")
    k = samples_per_segment
    t = np.arange(k) / k
    a = polyline[:-1]
    d = polyline[1:] - a
    planar = (a[:, None, :] + t[None, :, None] * d[:, None, :]).reshape(-1, 2)
    planar = np.vstack([planar, polyline[-1:]])
    x3 = np.asarray(field.height(planar[:, 0], planar[:, 1]))
    samples = np.column_stack([planar, x3])
    chords = np.linalg.norm(np.diff(samples, axis=0), axis=1)
    boundaries = [i * k for i in range(len(polyline))]
    return SurfacePath(samples, boundaries, float(chords.sum()))
