"""Covariance kernels of four zero-mean Gaussian processes on [0, 1].

The four kinds are the Wiener process, its demeaned and detrended variants
(residuals after projecting out a constant, or a constant plus linear trend),
and the Brownian bridge.  All kernels have closed forms built from min(s, t)
and low-degree polynomials, and all are positive semidefinite on any grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np


class KernelKind(Enum):
    WIENER = "wiener"
    DEMEANED = "demeaned"
    DETRENDED = "detrended"
    BRIDGE = "bridge"

    @classmethod
    def parse(cls, name: str) -> "KernelKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown kernel kind {name!r}; expected one of: {valid}") from None


def _kernel_array(kind: KernelKind, s, t):
    """Closed-form kernel on broadcastable arrays.  No range checks."""
    m = np.minimum(s, t)
    if kind is KernelKind.WIENER:
        return m
    if kind is KernelKind.BRIDGE:
        return m - s * t
    if kind is KernelKind.DEMEANED:
        return m - (s + t) + 0.5 * (s * s + t * t) + 1.0 / 3.0
    if kind is KernelKind.DETRENDED:
        return (
            m
            - 1.1 * (s + t)
            + 2.0 * (s * s + t * t)
            - (s**3 + t**3)
            - 3.0 * (s * t * t + t * s * s)
            + 2.0 * (s * t**3 + t * s**3)
            + 1.2 * (s * t)
            + 2.0 / 15.0
        )
    raise ValueError(f"unknown kernel kind: {kind!r}")


def _check_unit(x: float, name: str) -> float:
    x = float(x)
    if math.isnan(x) or not 0.0 <= x <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {x}")
    return x


def kernel_value(kind: KernelKind, s: float, t: float) -> float:
    """Evaluate the kernel at a single point pair.

    Arguments are canonically ordered before evaluation, so
    kernel_value(kind, s, t) == kernel_value(kind, t, s) bit for bit.
    """
    s = _check_unit(s, "s")
    t = _check_unit(t, "t")
    if s > t:
        s, t = t, s
    return float(_kernel_array(kind, s, t))


def kernel_matrix(kind: KernelKind, x, y) -> np.ndarray:
    """Kernel evaluated on the grid product x * y, shape (len(x), len(y))."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    for arr, name in ((x, "x"), (y, "y")):
        if arr.size and (np.isnan(arr).any() or arr.min() < 0.0 or arr.max() > 1.0):
            raise ValueError(f"{name} values must lie in [0, 1]")
    return np.asarray(_kernel_array(kind, x[:, None], y[None, :]), dtype=float)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric kernel matrix over an ordered grid in [0, 1]."""

    kind: KernelKind
    grid: np.ndarray
    entries: np.ndarray


def _validated_grid(grid) -> np.ndarray:
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size == 0:
        raise ValueError("grid must be a non-empty 1-D sequence")
    if np.isnan(g).any() or g[0] < 0.0 or g[-1] > 1.0:
        raise ValueError("grid values must lie in [0, 1]")
    if not (np.diff(g) > 0.0).all():
        raise ValueError("grid must be strictly increasing")
    return g


def gram(kind: KernelKind, grid) -> GramMatrix:
    """Build the Gram matrix of the kernel on a strictly increasing grid.

    The upper triangle is computed and mirrored, so the result is symmetric
    exactly, not merely to rounding.
    """
    g = _validated_grid(grid)
    full = _kernel_array(kind, g[:, None], g[None, :])
    upper = np.triu(full, k=1)
    entries = upper + upper.T + np.diag(np.diag(full))
    g.setflags(write=False)
    entries.setflags(write=False)
    return GramMatrix(kind=kind, grid=g, entries=entries)
