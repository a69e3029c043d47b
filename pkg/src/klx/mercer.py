"""Mercer partial sums and the three zeta(2) verification pipelines.

The Mercer identity k(t, t) = sum_j f_j(t)^2 / lambda_j turns each kernel's
diagonal into a positive series.  Three evaluation points give three
independent routes to zeta(2) = pi^2/6:

* route 1: the Wiener diagonal at t = 1 yields the odd-reciprocal-squares
  series; scaling by 4/3 recovers the full square series.
* route 2: the demeaned diagonal at t = 1 equals 1/3 and rearranges to
  (2/pi^2) * sum 1/j^2.
* route 3: the detrended diagonal at t = 1/2 equals 1/12; even-index terms
  vanish there identically, and the surviving odd-index terms rearrange to
  (1/(2 pi^2)) * sum 1/n^2.

Each estimate comes with an analytic tail bound that is validated (never
assumed) by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .eigen import PI_SQUARED, eigenfunction_matrix, eigenvalues
from .kernels import KernelKind
from .series import _kahan

ZETA2 = PI_SQUARED / 6.0

PROOF_IDS = (1, 2, 3)

#: Frozen tail-bound constants: bound = _TAIL_CONSTANT[proof] / J.  Route 1
#: comes from the midpoint bound on sum (j - 1/2)^(-2); routes 2 and 3 both
#: reduce to the square-reciprocal tail, bounded by the integral 1/J.
_TAIL_CONSTANT = {1: 1.0 / 3.0, 2: 1.0, 3: 1.0}

#: Rounding allowance added to every tail bound.  The route-1 midpoint bound
#: is sharp to O(1/J^3), which at J = 1e5 is smaller than the double-rounding
#: of the estimate and of the reference value, so an honest bound on the
#: *computed* error must also cover a few ulps of measurement fuzz.
_FLOAT_SLACK = 16.0 * math.ulp(PI_SQUARED / 6.0)


def _require_positive(value: int, name: str) -> None:
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


def _check_proof(proof: int) -> None:
    if proof not in PROOF_IDS:
        raise ValueError(f"proof must be one of {PROOF_IDS}, got {proof}")


def mercer_terms(kind: KernelKind, t: float, j_max: int):
    """The first j_max Mercer terms f_j(t)^2 / lambda_j as an array."""
    _require_positive(j_max, "j_max")
    t = float(t)
    if math.isnan(t) or not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    f = eigenfunction_matrix(kind, j_max, t)[:, 0]
    return f * f / eigenvalues(kind, j_max)


def mercer_partial(kind: KernelKind, t: float, j_max: int) -> float:
    """Partial Mercer sum sum_{j<=j_max} f_j(t)^2 / lambda_j.

    Converges to kernel_value(kind, t, t) as j_max grows.
    """
    return _kahan(mercer_terms(kind, t, j_max).tolist())


def truncated_covariance(kind: KernelKind, s: float, t: float, j_max: int) -> float:
    """Truncated expansion covariance sum_{j<=j_max} f_j(s) f_j(t) / lambda_j.

    This is the exact covariance of a truncated expansion with j_max terms,
    which is what simulated ensembles should be compared against.
    """
    _require_positive(j_max, "j_max")
    for name, x in (("s", float(s)), ("t", float(t))):
        if math.isnan(x) or not 0.0 <= x <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {x}")
    fs = eigenfunction_matrix(kind, j_max, s)[:, 0]
    ft = eigenfunction_matrix(kind, j_max, t)[:, 0]
    return _kahan((fs * ft / eigenvalues(kind, j_max)).tolist())


def basel_estimate(proof: int, j_terms: int) -> float:
    """zeta(2) estimate from one of the three routes, using j_terms terms.

    Route 1 sums the odd-square reciprocals directly and scales by 4/3
    (the closed form of its Mercer sum at t = 1); routes 2 and 3 evaluate
    the Mercer partial sums and rescale.  Route 3 spends 2 * j_terms
    eigenpair indices because the even-index terms vanish at t = 1/2,
    leaving j_terms nonzero contributions.
    """
    _check_proof(proof)
    _require_positive(j_terms, "j_terms")
    if proof == 1:
        return (4.0 / 3.0) * _kahan((2 * j - 1) ** -2.0 for j in range(1, j_terms + 1))
    if proof == 2:
        return (PI_SQUARED / 2.0) * mercer_partial(KernelKind.DEMEANED, 1.0, j_terms)
    return (2.0 * PI_SQUARED) * mercer_partial(KernelKind.DETRENDED, 0.5, 2 * j_terms)


def basel_estimate_route1_literal(j_terms: int) -> float:
    """Route 1 computed from the literal Mercer sum at t = 1.

    Equals ``basel_estimate(1, j_terms)`` to a few ulps; kept as a

    cross-check that the rearranged series and the eigenfunction route
    agree.
    """
    _require_positive(j_terms, "j_terms")
    return (PI_SQUARED / 6.0) * mercer_partial(KernelKind.WIENER, 1.0, j_terms)


def proof_tail_bound(proof: int, j_terms: int) -> float:
    """Validated upper bound on zeta(2) - basel_estimate(proof, j_terms).

    Covers the analytic truncation tail plus a small fixed allowance for the
    floating-point rounding of the computed estimate and reference.
    """
    _check_proof(proof)
    _require_positive(j_terms, "j_terms")
    return _TAIL_CONSTANT[proof] / j_terms + _FLOAT_SLACK


@dataclass(frozen=True)
class ConvergenceRow:
    j_terms: int
    estimate: float
    abs_error: float
    tail_bound: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Estimate sequence for one route, with honest error bounds."""

    proof_id: str
    rows: tuple[ConvergenceRow, ...]

    def passes(self) -> bool:
        """True when every row's error is within its tail bound."""
        return all(row.abs_error <= row.tail_bound for row in self.rows)


def proof_report(proof: int, j_values: Sequence[int]) -> ConvergenceReport:
    """Convergence report of one route over the given truncation levels."""
    _check_proof(proof)
    if not j_values:
        raise ValueError("j_values must be non-empty")
    rows = []
    for j_terms in j_values:
        estimate = basel_estimate(proof, j_terms)
        rows.append(
            ConvergenceRow(
                j_terms=j_terms,
                estimate=estimate,
                abs_error=abs(ZETA2 - estimate),
                tail_bound=proof_tail_bound(proof, j_terms),
            )
        )
    return ConvergenceReport(proof_id=f"Proof{proof}", rows=tuple(rows))
