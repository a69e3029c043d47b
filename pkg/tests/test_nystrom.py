"""Tests for the Nystrom discretization of the kernel eigenproblem."""

import math

import numpy as np
import pytest

from klx import (
    KernelKind,
    compare_eigenpairs,
    eigenfunction_matrix,
    eigenvalue,
    kernel_value,
    nystrom_solve,
)

ALL_KINDS = list(KernelKind)


class TestSolutionInvariants:
    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_weights_and_spectrum(self, kind):
        solution = nystrom_solve(kind, 64, 64)
        assert abs(solution.weights.sum() - 1.0) <= 1e-14
        # the operator is positive semidefinite up to rounding
        assert solution.eigenvalues.min() >= -1e-10
        assert (np.diff(solution.eigenvalues) <= 0).all()

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_weighted_orthonormality(self, kind):
        solution = nystrom_solve(kind, 200, 8)
        overlap = (solution.eigenvectors.T * solution.weights) @ solution.eigenvectors
        assert np.max(np.abs(overlap - np.eye(8))) <= 1e-10

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_trace_identity(self, kind):
        # sum of all operator eigenvalues equals the quadrature of the diagonal
        solution = nystrom_solve(kind, 128, 128)
        diagonal = np.array([kernel_value(kind, float(x), float(x)) for x in solution.nodes])
        assert abs(solution.eigenvalues.sum() - float(np.dot(solution.weights, diagonal))) <= 1e-8

    def test_wiener_trace_is_half(self):
        solution = nystrom_solve(KernelKind.WIENER, 128, 128)
        assert solution.eigenvalues.sum() == pytest.approx(0.5, abs=1e-8)

    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            nystrom_solve(KernelKind.WIENER, 16, 20)
        with pytest.raises(ValueError):
            nystrom_solve(KernelKind.WIENER, 8, 4)
        with pytest.raises(ValueError):
            nystrom_solve(KernelKind.WIENER, 64, 0)


class TestEigenvalueAccuracy:
    def test_wiener_fundamental_mode(self):
        solution = nystrom_solve(KernelKind.WIENER, 400, 1)
        assert solution.eigenvalues[0] == pytest.approx(4.0 / math.pi**2, rel=1e-4)
        assert 1.0 / solution.eigenvalues[0] == pytest.approx(math.pi**2 / 4.0, rel=1e-4)

    def test_demeaned_third_mode(self):
        solution = nystrom_solve(KernelKind.DEMEANED, 400, 3)
        assert 1.0 / solution.eigenvalues[2] == pytest.approx(9.0 * math.pi**2, rel=1e-3)

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_refinement_decreases_error(self, kind):
        lam_true = eigenvalue(kind, 1)
        errors = []
        for n_nodes in (100, 200, 400):
            mu = nystrom_solve(kind, n_nodes, 1).eigenvalues[0]
            errors.append(abs(1.0 / mu - lam_true) / lam_true)
        assert errors[0] >= errors[1] >= errors[2]


class TestComparison:
    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_first_modes_match_at_moderate_resolution(self, kind):
        comparison = compare_eigenpairs(kind, 5, 400)
        assert comparison.passes()
        for row in comparison.rows:
            assert row.rel_error <= 1e-3
            assert row.max_deviation <= 1e-3

    def test_detrended_even_rows_are_root_eigenvalues(self):
        comparison = compare_eigenpairs(KernelKind.DETRENDED, 6, 400)
        for row in comparison.rows:
            assert row.analytic == eigenvalue(KernelKind.DETRENDED, row.j)
            assert row.nystrom == pytest.approx(row.analytic, rel=1e-3)

    def test_bridge_modes_match(self):
        comparison = compare_eigenpairs(KernelKind.BRIDGE, 5, 400)
        for row in comparison.rows:
            assert row.analytic == pytest.approx(row.j**2 * math.pi**2, rel=1e-15)
            assert row.rel_error <= 1e-3

    def test_sign_agnostic_eigenvector_match(self):
        # deviations are measured after sign alignment, so they are small even
        # though the raw eigensolver sign is arbitrary
        comparison = compare_eigenpairs(KernelKind.DEMEANED, 5, 400)
        assert max(row.max_deviation for row in comparison.rows) <= 1e-3


class TestInterpolation:
    def test_extension_matches_analytic_off_nodes(self):
        solution = nystrom_solve(KernelKind.WIENER, 300, 2)
        t = np.array([0.111, 0.5321, 0.9017])
        for idx in range(2):
            extended = solution.interpolate(idx, t)
            analytic = eigenfunction_matrix(KernelKind.WIENER, idx + 1, t)[idx]
            sign = 1.0 if np.dot(extended, analytic) >= 0 else -1.0
            assert np.max(np.abs(sign * extended - analytic)) <= 1e-3

    def test_extension_reproduces_node_values(self):
        solution = nystrom_solve(KernelKind.BRIDGE, 200, 1)
        probe = solution.nodes[::40]
        extended = solution.interpolate(0, probe)
        assert np.max(np.abs(extended - solution.eigenvectors[::40, 0])) <= 1e-8
