"""Pullback of the Euclidean metric of R^3 onto the projection plane."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .surface import HeightField, lift_tangent


@dataclass(frozen=True)
class MetricInverse:
    k11: float
    k12: float
    k22: float

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.k11, self.k12], [self.k12, self.k22]])


@dataclass(frozen=True)
class MetricTensor:
    """Upper triangle of the symmetric 2x2 metric [h_ij] at ``at_point``."""

    h11: float
    h12: float
    h22: float
    at_point: tuple[float, float] = (0.0, 0.0)

    @property
    def h21(self):
        return self.h12

    def det(self) -> float:
        return self.h11 * self.h22 - self.h12 * self.h12

    def inverse(self) -> MetricInverse:
        d = self.det()
        return MetricInverse(self.h22 / d, -self.h12 / d, self.h11 / d)

    def inner(self, u, v) -> float:
        return self.h11 * u[0] * v[0] + self.h12 * (u[0] * v[1] + u[1] * v[0]) + self.h22 * u[1] * v[1]

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.h11, self.h12], [self.h12, self.h22]])


def metric_components(field: HeightField, x1, x2):
    """Vectorized ``(h11, h12, h22)`` over arrays of planar coordinates."""
    g1, g2 = field.gradient(x1, x2)
    return 1.0 + g1 * g1, g1 * g2, 1.0 + g2 * g2


def metric_at(field: HeightField, p) -> MetricTensor:
    h11, h12, h22 = metric_components(field, float(p[0]), float(p[1]))
    return MetricTensor(float(h11), float(h12), float(h22), (float(p[0]), float(p[1])))


def det(h: MetricTensor) -> float:
    return h.det()


def inverse(h: MetricTensor) -> MetricInverse:
    return h.inverse()


def inner(h: MetricTensor, u, v) -> float:
    return h.inner(u, v)


def isometry_residual(field: HeightField, p, u, v) -> float:
    """|h(u, v) - <lift(u), lift(v)>| at p.

    Zero up to rounding whenever [h_ij] really is the induced metric.
    """
    lhs = metric_at(field, p).inner(u, v)
    rhs = float(np.dot(lift_tangent(field, p, u), lift_tangent(field, p, v)))
    return abs(lhs - rhs)
