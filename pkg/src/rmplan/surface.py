"""Analytic height surfaces x3(x1, x2) and lifting from the plane to the surface.

All field methods accept scalars or numpy arrays for the coordinates and
broadcast like numpy ufuncs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np


def _unwrap(a):
    return a if np.ndim(a) else float(a)


@dataclass(frozen=True)
class GaussianPeak:
    """A * exp(-((x1 - c1)^2 + (x2 - c2)^2) / (2 sigma^2))."""

    amplitude: float
    center: tuple[float, float]
    sigma: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if not math.isfinite(self.amplitude):
            raise ValueError("amplitude must be finite")
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))

    @classmethod
    def from_coefficient(cls, amplitude, center, coefficient):
        """Build a peak written as ``A * exp(-coefficient * r^2)``."""
        return cls(amplitude, center, math.sqrt(1.0 / (2.0 * coefficient)))

    @property
    def coefficient(self):
        return 1.0 / (2.0 * self.sigma**2)


class HeightField:
    """Base class for smooth height functions defined on all of R^2."""

    def height(self, x1, x2):
        raise NotImplementedError

    def gradient(self, x1, x2):
        """Return ``(dx3/dx1, dx3/dx2)``."""
        raise NotImplementedError

    @property
    def feature_length(self) -> float:
        """Horizontal length scale over which the slope changes appreciably."""
        return math.inf

    def to_config(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Flat(HeightField):
    level: float = 0.0

    def height(self, x1, x2):
        return _unwrap(np.full(np.broadcast(x1, x2).shape, float(self.level)))

    def gradient(self, x1, x2):
        shape = np.broadcast(x1, x2).shape
        return _unwrap(np.zeros(shape)), _unwrap(np.zeros(shape))

    def to_config(self):
        return {"flat": self.level}


@dataclass(frozen=True)
class Plane(HeightField):
    """x3 = a * x1 + b * x2."""

    a: float
    b: float

    def height(self, x1, x2):
        return _unwrap(self.a * np.asarray(x1, dtype=float) + self.b * np.asarray(x2, dtype=float))

    def gradient(self, x1, x2):
        shape = np.broadcast(x1, x2).shape
        return _unwrap(np.full(shape, float(self.a))), _unwrap(np.full(shape, float(self.b)))

    def to_config(self):
        return {"plane": [self.a, self.b]}


@dataclass(frozen=True)
class PeakSum(HeightField):
    """Superposition of Gaussian peaks."""

    peaks: tuple[GaussianPeak, ...]

    def __post_init__(self):
        object.__setattr__(self, "peaks", tuple(self.peaks))

    @property
    def feature_length(self) -> float:
        return min((pk.sigma for pk in self.peaks), default=math.inf)

    def height(self, x1, x2):
        x1 = np.asarray(x1, dtype=float)
        x2 = np.asarray(x2, dtype=float)
        total = np.zeros(np.broadcast(x1, x2).shape)
        for pk in self.peaks:
            d1 = x1 - pk.center[0]
            d2 = x2 - pk.center[1]
            total = total + pk.amplitude * np.exp(-(d1 * d1 + d2 * d2) / (2.0 * pk.sigma**2))
        return _unwrap(total)

    def gradient(self, x1, x2):
        x1 = np.asarray(x1, dtype=float)
        x2 = np.asarray(x2, dtype=float)
        shape = np.broadcast(x1, x2).shape
        g1 = np.zeros(shape)
        g2 = np.zeros(shape)
        for pk in self.peaks:
            s2 = pk.sigma**2
            d1 = x1 - pk.center[0]
            d2 = x2 - pk.center[1]
            val = pk.amplitude * np.exp(-(d1 * d1 + d2 * d2) / (2.0 * s2))
            g1 = g1 - val * d1 / s2
            g2 = g2 - val * d2 / s2
        return _unwrap(g1), _unwrap(g2)

    def to_config(self):
        return [
            {"amplitude": pk.amplitude, "center": list(pk.center), "sigma": pk.sigma}
            for pk in self.peaks
        ]


def field_from_config(spec) -> HeightField:
    """Parse ``{"flat": c}``, ``{"plane": [a, b]}`` or a list of peak records."""
    if isinstance(spec, dict):
        if "flat" in spec:
            return Flat(float(spec["flat"]))
        if "plane" in spec:
            a, b = spec["plane"]
            return Plane(float(a), float(b))
        if "peaks" in spec:
            spec = spec["peaks"]
        else:
            raise ValueError("surface: expected 'flat', 'plane' or a list of peaks")
    if not isinstance(spec, (list, tuple)) or not spec:
        raise ValueError("surface: expected a non-empty list of peak records")
    peaks = []
    for i, rec in enumerate(spec):
        try:
            center = rec["center"]
            if "sigma" in rec:
                peaks.append(GaussianPeak(float(rec["amplitude"]), (float(center[0]), float(center[1])), float(rec["sigma"])))
            else:
                peaks.append(GaussianPeak.from_coefficient(float(rec["amplitude"]), center, float(rec["coefficient"])))
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"surface[{i}]: malformed peak record ({exc!r})") from None
    return PeakSum(tuple(peaks))


def height(field: HeightField, p) -> float:
    return field.height(p[0], p[1])


def gradient(field: HeightField, p) -> np.ndarray:
    g1, g2 = field.gradient(p[0], p[1])
    return np.array([g1, g2], dtype=float)


def gradient_fd(field: HeightField, p, step: float = 1e-6) -> np.ndarray:
    """Central finite-difference gradient. Only meant as a check on `gradient`."""
    if not step > 0:
        raise ValueError("step must be positive")
    x1, x2 = float(p[0]), float(p[1])
    d1 = (field.height(x1 + step, x2) - field.height(x1 - step, x2)) / (2 * step)
    d2 = (field.height(x1, x2 + step) - field.height(x1, x2 - step)) / (2 * step)
    return np.array([d1, d2])


def lift_point(field: HeightField, p) -> np.ndarray:
    return np.array([p[0], p[1], field.height(p[0], p[1])], dtype=float)


def lift_tangent(field: HeightField, p, v: Sequence[float]) -> np.ndarray:
    """Push a planar vector at ``p`` forward onto the tangent plane of the surface."""
    g1, g2 = field.gradient(p[0], p[1])
    return np.array([v[0], v[1], v[0] * g1 + v[1] * g2], dtype=float)
