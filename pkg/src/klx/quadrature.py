"""Gauss-Legendre quadrature on the unit interval."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre


@lru_cache(maxsize=64)
def gauss_legendre_01(n: int) -> tuple[np.ndarray, np.ndarray]:
    """n-point Gauss-Legendre nodes and weights mapped to [0, 1].

    Weights sum to 1 up to rounding.  Returned arrays are read-only and
    cached per node count.
    """
    if n < 1:
        raise ValueError(f"node count must be >= 1, got {n}")
    x, w = roots_legendre(n)
    nodes = 0.5 * (x + 1.0)
    weights = 0.5 * w
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def integrate_01(f, n: int = 64, split_at: float | None = None) -> float:
    """Integrate a vectorized callable over [0, 1].

    With ``split_at`` the interval is split there and each piece gets its own
    n-point rule; use this when the integrand has a kink (e.g. at s = t for
    kernels built from min(s, t)).
    """
    nodes, weights = gauss_legendre_01(n)
    if split_at is None:
        return float(np.dot(weights, f(nodes)))
    if not 0.0 <= split_at <= 1.0:
        raise ValueError(f"split point must lie in [0, 1], got {split_at}")
    total = 0.0
    for a, b in ((0.0, split_at), (split_at, 1.0)):
        width = b - a
        if width > 0.0:
            total += width * float(np.dot(weights, f(a + width * nodes)))
    return total
