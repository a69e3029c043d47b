"""Analytic eigenvalues and eigenfunctions of the four covariance kernels.

Eigenpairs solve f(t) = lambda * integral_0^1 k(s, t) f(s) ds (the eigenvalue
multiplies the integral, so the kernel operator itself has eigenvalues
1/lambda).  Closed forms:

* Wiener:     lambda_j = (j - 1/2)^2 pi^2,  f_j(t) = sqrt(2) sin((j - 1/2) pi t)
* demeaned:   lambda_j = j^2 pi^2,          f_j(t) = sqrt(2) cos(j pi t)
* bridge:     lambda_j = j^2 pi^2,          f_j(t) = sqrt(2) sin(j pi t)
* detrended:  odd j:  lambda_j = (j + 1)^2 pi^2, f_j(t) = sqrt(2) cos((j + 1) pi t)
              even j: lambda_j = 4 z_n^2 with n = j/2, where z_n is the n-th
              positive root of sin z - z cos z (equivalently of the Bessel
              function of order 3/2, or of tan z = z), and
              f_j(t) = (-1)^(n+1) sqrt(L_j) sin(2 z_n (t - 1/2)) with
              L_j = 2 / sin(z_n)^2.

Trigonometric arguments that are multiples of pi are reduced before calling
sin/cos, so values like f(0), f(1) and the even detrended f(1/2) come out as
exact zeros or exact +-sqrt(2).  That exactness is relied on elsewhere (path
simulation pins bridge endpoints to 0.0; Mercer sums at t = 1/2 drop even
detrended terms identically).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .kernels import KernelKind

PI = math.pi
PI_SQUARED = math.pi**2
SQRT2 = math.sqrt(2.0)

_BISECTION_STEPS = 80
_NEWTON_STEPS = 3


def _sinpi(x: np.ndarray) -> np.ndarray:
    """sin(pi * x) with exact reduction: exactly 0 at integers, +-1 at
    half-integers."""
    n = np.round(x)
    r = x - n
    s = np.sin(np.pi * r)
    return np.where(n % 2.0 == 0.0, s, -s)


def _cospi(x: np.ndarray) -> np.ndarray:
    """cos(pi * x) via the shifted sine, keeping the exact special values."""
    return _sinpi(x + 0.5)


@dataclass(frozen=True)
class BesselRoot:
    """The n-th positive root of sin z - z cos z (order-3/2 Bessel zero)."""

    n: int
    z: float


def _solve_roots(n_max: int) -> np.ndarray:
    """Roots 1..n_max of g(z) = sin z - z cos z by bracketed bisection.

    Root n lies in (n pi, (n+1) pi); g at the left endpoint has sign
    (-1)^(n+1).  Bisection runs a fixed 80 steps (interval shrinks below one
    ulp long before that), then three Newton polish steps with
    g'(z) = z sin z.
    """
    n = np.arange(1, n_max + 1, dtype=float)
    lo = n * PI
    hi = (n + 1.0) * PI
    sign_lo = np.where(np.arange(1, n_max + 1) % 2 == 1, 1.0, -1.0)
    for _ in range(_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        g = np.sin(mid) - mid * np.cos(mid)
        same_side = np.sign(g) == sign_lo
        lo = np.where(same_side, mid, lo)
        hi = np.where(same_side, hi, mid)
    z = 0.5 * (lo + hi)
    for _ in range(_NEWTON_STEPS):
        g = np.sin(z) - z * np.cos(z)
        z = z - g / (z * np.sin(z))
    return z


_roots_cache = np.empty(0)


def bessel_roots(n_max: int) -> np.ndarray:
    """First n_max roots as a read-only array (cached, grown on demand)."""
    global _roots_cache
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > _roots_cache.size:
        roots = _solve_roots(n_max)
        roots.setflags(write=False)
        _roots_cache = roots
    return _roots_cache[:n_max]


def bessel_root(n: int) -> BesselRoot:
    """The n-th positive root, n >= 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return BesselRoot(n, float(bessel_roots(n)[n - 1]))


def _require_j(j: int) -> None:
    if j < 1:
        raise ValueError(f"eigenpair index must be >= 1, got {j}")


def eigenvalues(kind: KernelKind, j_max: int) -> np.ndarray:
    """Eigenvalues for indices 1..j_max, strictly increasing."""
    _require_j(j_max)
    j = np.arange(1, j_max + 1, dtype=float)
    if kind is KernelKind.WIENER:
        return (j - 0.5) ** 2 * PI_SQUARED
    if kind in (KernelKind.DEMEANED, KernelKind.BRIDGE):
        return j**2 * PI_SQUARED
    if kind is KernelKind.DETRENDED:
        ints = np.arange(1, j_max + 1)
        odd = ints % 2 == 1
        lam = np.empty(j_max)
        lam[odd] = (j[odd] + 1.0) ** 2 * PI_SQUARED
        if j_max >= 2:
            n = ints[~odd] // 2
            z = bessel_roots(j_max // 2)[n - 1]
            lam[~odd] = 4.0 * z**2
        return lam
    raise ValueError(f"unknown kernel kind: {kind!r}")


def eigenvalue(kind: KernelKind, j: int) -> float:
    """Eigenvalue of index j >= 1."""
    _require_j(j)
    return float(eigenvalues(kind, j)[j - 1])


def eigenfunction_matrix(kind: KernelKind, j_max: int, t) -> np.ndarray:
    """Eigenfunctions 1..j_max sampled on t, shape (j_max, len(t)).

    ``t`` is assumed to lie in [0, 1]; validation happens in the scalar
    entry point and in grid constructors.
    """
    _require_j(j_max)
    t = np.atleast_1d(np.asarray(t, dtype=float))
    j = np.arange(1, j_max + 1, dtype=float)[:, None]
    if kind is KernelKind.WIENER:
        return SQRT2 * _sinpi((j - 0.5) * t)
    if kind is KernelKind.DEMEANED:
        return SQRT2 * _cospi(j * t)
    if kind is KernelKind.BRIDGE:
        return SQRT2 * _sinpi(j * t)
    if kind is KernelKind.DETRENDED:
        ints = np.arange(1, j_max + 1)
        odd = ints % 2 == 1
        out = np.empty((j_max, t.size))
        out[odd] = SQRT2 * _cospi((j[odd] + 1.0) * t)
        if j_max >= 2:
            n = ints[~odd] // 2
            z = bessel_roots(j_max // 2)[n - 1][:, None]
            sign = np.where(n % 2 == 1, 1.0, -1.0)[:, None]
            amplitude = SQRT2 / np.abs(np.sin(z))
            out[~odd] = sign * amplitude * np.sin(2.0 * z * (t - 0.5))
        return out
    raise ValueError(f"unknown kernel kind: {kind!r}")


def eigenfunction(kind: KernelKind, j: int, t: float) -> float:
    """Eigenfunction f_j evaluated at a single t in [0, 1]."""
    _require_j(j)
    t = float(t)
    if math.isnan(t) or not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    return float(eigenfunction_matrix(kind, j, np.array([t]))[j - 1, 0])


def capital_lambda(j: int) -> float:
    """Amplitude constant 2 / sin(sqrt(lambda_j)/2)^2 of the even detrended
    eigenfunctions; j must be even."""
    if j < 2 or j % 2 != 0:
        raise ValueError(f"j must be even and >= 2, got {j}")
    half_sqrt_lambda = 0.5 * math.sqrt(eigenvalue(KernelKind.DETRENDED, j))
    s = math.sin(half_sqrt_lambda)
    if s == 0.0:
        # The roots are never integer multiples of pi, so a vanishing sine
        # means the eigenvalue is corrupted.
        raise ValueError(f"sin(sqrt(lambda)/2) vanished for j={j}; eigenvalue corrupted")
    return 2.0 / (s * s)


@dataclass(frozen=True)
class EigenPair:
    """One analytic eigenpair with a vectorized eigenfunction evaluator."""

    kind: KernelKind
    j: int
    value: float
    f: Callable[[np.ndarray], np.ndarray]


def eigenpair(kind: KernelKind, j: int) -> EigenPair:
    """Bundle eigenvalue j with its eigenfunction evaluator."""
    _require_j(j)
    lam = eigenvalue(kind, j)

    def evaluate(t):
        return eigenfunction_matrix(kind, j, t)[j - 1]

    return EigenPair(kind=kind, j=j, value=lam, f=evaluate)
