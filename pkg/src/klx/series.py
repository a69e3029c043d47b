"""Classical partial sums related to zeta(2) = pi^2/6.

All sums are accumulated in ascending index order with Kahan-compensated
summation, so results are deterministic and ulp-level identities between
different routes to the same quantity actually hold.

Index conventions:

* ``zeta_partial`` and ``triangular_partial`` take the number of terms
  ``n >= 1``.
* The odd-denominator series (``odd_squares_partial``, ``leibniz_partial``)
  and the residuals built from them are 0-indexed: the argument ``n`` is the
  last summation index, so ``n = 0`` means one term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class PartialSum:
    """A finite partial sum: how many terms went in and what came out."""

    n_terms: int
    value: float

    def __post_init__(self) -> None:
        if self.n_terms < 1:
            raise ValueError("a partial sum needs at least one term")
        if not math.isfinite(self.value):
            raise ValueError("partial sum value must be finite")


@dataclass(frozen=True)
class ResidualSequenceEntry:
    """One entry of a residual sequence, keyed by the last summation index."""

    index: int
    residual: float

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("index must be >= 0")
        if not math.isfinite(self.residual):
            raise ValueError("residual must be finite")


def _kahan(terms: Iterable[float]) -> float:
    """Sum ``terms`` in iteration order with Kahan compensation."""
    total = 0.0
    comp = 0.0
    for x in terms:
        y = x - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def _kahan_running(terms: Iterable[float]) -> Iterator[float]:
    """Yield the compensated running sum after each term."""
    total = 0.0
    comp = 0.0
    for x in terms:
        y = x - comp
        t = total + y
        comp = (t - total) - y
        total = t
        yield total


def _require_count(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


def _require_index(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{name} must be >= 0, got {n}")


def zeta_partial(s: float, n: int) -> PartialSum:
    """Partial sum of k^(-s) for k = 1..n.

    Requires s > 1 (the full series diverges otherwise) and n >= 1.
    """
    if not s > 1.0:
        raise ValueError(f"s must be > 1, got {s}")
    _require_count(n)
    return PartialSum(n, _kahan(k ** -s for k in range(1, n + 1)))


def zeta_partial_table(s: float, n_values: Sequence[int]) -> list[PartialSum]:
    """``zeta_partial`` at several term counts, sharing one accumulation pass.

    Each returned value is bit-identical to the corresponding scalar call.
    """
    if not s > 1.0:
        raise ValueError(f"s must be > 1, got {s}")
    if not n_values:
        raise ValueError("n_values must be non-empty")
    targets = sorted(set(n_values))
    _require_count(targets[0])
    wanted = {}
    running = _kahan_running(k ** -s for k in range(1, targets[-1] + 1))
    target_iter = iter(targets)
    next_target = next(target_iter)
    for n, value in enumerate(running, start=1):
        if n == next_target:
            wanted[n] = value
            next_target = next(target_iter, None)
            if next_target is None:
                break
    return [PartialSum(n, wanted[n]) for n in n_values]


def zeta2_tail_bounds(n: int) -> tuple[float, float]:
    """Strict bracket (1/(n+1), 1/n) for the tail zeta(2) - zeta_partial(2, n)."""
    _require_count(n)
    return 1.0 / (n + 1), 1.0 / n


def triangular_closed_form(n: int) -> float:
    """Telescoped value 2 (1 - 1/(n+1)) of the triangular-reciprocal sum."""
    _require_count(n)
    return 2.0 * (1.0 - 1.0 / (n + 1))


def triangular_partial(n: int) -> PartialSum:
    """Term-by-term sum of 2/(k(k+1)) for k = 1..n; telescopes to 2."""
    _require_count(n)
    return PartialSum(n, _kahan(2.0 / (k * (k + 1)) for k in range(1, n + 1)))


def triangular_partial_table(n_values: Sequence[int]) -> list[PartialSum]:
    """``triangular_partial`` at several term counts in one accumulation pass."""
    if not n_values:
        raise ValueError("n_values must be non-empty")
    targets = sorted(set(n_values))
    _require_count(targets[0])
    wanted = {}
    running = _kahan_running(2.0 / (k * (k + 1)) for k in range(1, targets[-1] + 1))
    target_iter = iter(targets)
    next_target = next(target_iter)
    for n, value in enumerate(running, start=1):
        if n == next_target:
            wanted[n] = value
            next_target = next(target_iter, None)
            if next_target is None:
                break
    return [PartialSum(n, wanted[n]) for n in n_values]


def odd_squares_partial(n: int) -> PartialSum:
    """Sum of 1/(2k+1)^2 for k = 0..n; converges to pi^2/8."""
    _require_index(n)
    return PartialSum(n + 1, _kahan((2 * k + 1) ** -2.0 for k in range(n + 1)))


def leibniz_partial(n: int) -> PartialSum:
    """Alternating sum of (-1)^k/(2k+1) for k = 0..n; converges to pi/4."""
    _require_index(n)
    return PartialSum(
        n + 1,
        _kahan((1.0 if k % 2 == 0 else -1.0) / (2 * k + 1) for k in range(n + 1)),
    )


def bernoulli_residual(n: int) -> ResidualSequenceEntry:
    """Defect of squaring the alternating sum: odd-squares sum minus the
    squared Leibniz sum, both through index n.  Converges to pi^2/16."""
    _require_index(n)
    q = leibniz_partial(n).value
    return ResidualSequenceEntry(n, odd_squares_partial(n).value - q * q)


def estermann_residual(n: int) -> ResidualSequenceEntry:
    """Odd-squares sum minus twice the squared Leibniz sum, both through
    index n.  Converges to 0; empirically |residual| <= 2/n for n >= 1."""
    _require_index(n)
    q = leibniz_partial(n).value
    return ResidualSequenceEntry(n, odd_squares_partial(n).value - 2.0 * q * q)


def odd_split_gap(n: int) -> float:
    """Gap (3/4) * zeta_partial(2, 2n+1) - odd_squares_partial(n).

    Splitting indices into odd and even shows both sides converge to pi^2/8,
    so the gap vanishes; empirically |gap| <= 1/(2n).
    """
    _require_count(n)
    return 0.75 * zeta_partial(2.0, 2 * n + 1).value - odd_squares_partial(n).value
