"""Independent reference computations used only by the tests."""

import itertools
import math

import numpy as np


def peak_sum_speed(peaks, start, end, t):
    """|d/dt (gamma(t), x3(gamma(t)))| along a straight segment, written out by hand.

    ``peaks`` are (amplitude, c1, c2, sigma) tuples. The squared distance to a
    peak centre is a quadratic in t, so each peak costs one exp per node.
    """
    s = np.asarray(start, float)
    d = np.asarray(end, float) - s
    dd = float(d @ d)
    dz = np.zeros_like(t)
    for amp, c1, c2, sigma in peaks:
        q = s - (c1, c2)
        alpha = float(q @ q)
        beta = 2.0 * float(q @ d)
        k = 1.0 / (2.0 * sigma * sigma)
        val = amp * np.exp(-k * (alpha + t * (beta + t * dd)))
        dz -= val * k * (beta + 2.0 * dd * t)
    return np.sqrt(dd + dz * dz)


def simpson_line_distance(peaks, start, end, m=1_000_000, chunk=1 << 14):
    """Composite Simpson's rule with ``m`` (even) subintervals on [0, 1].

    Same integrand as `peak_sum_speed`, evaluated in place chunk by chunk;
    the 10^6-interval runs dominate the acceptance budget otherwise.
    """
    if m % 2:
        raise ValueError("m must be even")
    s = np.asarray(start, float)
    d = np.asarray(end, float) - s
    dd = float(d @ d)
    params = []
    for amp, c1, c2, sigma in peaks:
        q = s - (c1, c2)
        params.append((amp, float(q @ q), 2.0 * float(q @ d), 1.0 / (2.0 * sigma * sigma)))
    ebuf, gbuf, dzbuf = np.empty(chunk), np.empty(chunk), np.empty(chunk)
    base = np.arange(chunk, dtype=float)
    total = 0.0
    for lo in range(0, m + 1, chunk):
        n = min(chunk, m + 1 - lo)
        t = (base[:n] + lo) / m
        e, g, dz = ebuf[:n], gbuf[:n], dzbuf[:n]
        dz[:] = 0.0
        for amp, alpha, beta, k in params:
            np.multiply(t, dd, out=e)
            e += beta
            e *= t
            e += alpha
            e *= -k
            np.exp(e, out=e)
            np.multiply(t, 2.0 * dd, out=g)
            g += beta
            g *= e
            dz -= amp * k * g
        dz *= dz
        dz += dd
        f = np.sqrt(dz, out=dz)
        # weights 1, 4, 2, 4, ..., 2, 4, 1 on global indices
        total += 2.0 * f.sum() + 2.0 * f[(1 - lo % 2)::2].sum()
        if lo == 0:
            total -= f[0]
        if lo + n == m + 1:
            total -= f[n - 1]
    return total / (3.0 * m)


def peak_tuples(field):
    return [(p.amplitude, p.center[0], p.center[1], p.sigma) for p in field.peaks]


def brute_force_shortest(weights, start, goal):
    """Minimum cost over every simple path by explicit enumeration (n <= 8)."""
    n = len(weights)
    others = [i for i in range(n) if i not in (start, goal)]
    best = math.inf
    for k in range(len(others) + 1):
        for mid in itertools.permutations(others, k):
            seq = (start, *mid, goal)
            cost = 0.0
            for a, b in zip(seq, seq[1:]):
                cost += weights[a][b]
            best = min(best, cost)
    return best
