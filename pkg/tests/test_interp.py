"""Tests for interpolation, Lebesgue constants, and convergence diagnostics."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from cubasquare.interp import (
    convergence_report,
    family_rule,
    interpolate_kernel,
    interpolate_padua,
    lebesgue_constant,
)
from cubasquare.nodes import padua_points
from cubasquare.univariate import eval_chebyshev_t
from cubasquare.weights import cheb1, tensor_oracle


def sample(f, nodes):
    return f(nodes.points[:, 0], nodes.points[:, 1])


class TestKernelInterpolation:
    def test_constant_reproduced(self):
        nodes, spec, w, _ = family_rule("cheb1", 6)
        interp = interpolate_kernel(nodes, spec, w, np.ones(len(nodes)))
        g = np.linspace(-1, 1, 30)
        X, Y = np.meshgrid(g, g)
        assert_allclose(interp(X, Y), 1.0, atol=1e-10)

    def test_polynomial_projection(self):
        f = lambda x, y: x**3 * y**2
        nodes, spec, w, _ = family_rule("cheb1", 8)
        interp = interpolate_kernel(nodes, spec, w, sample(f, nodes))
        g = np.linspace(-1, 1, 30)
        X, Y = np.meshgrid(g, g)
        assert np.abs(interp(X, Y) - f(X, Y)).max() < 1e-9

    @pytest.mark.parametrize("family,n", [("cheb1", 6), ("cheb1", 7), ("cheb2", 6), ("gencheb", 6)])
    def test_cardinal_property(self, family, n):
        nodes, spec, w, _ = family_rule(family, n)
        interp = interpolate_kernel(nodes, spec, w, np.zeros(len(nodes)))
        L = interp.cardinal_matrix(nodes.points)
        assert np.abs(L - np.eye(len(nodes))).max() < 1e-9

    def test_cardinal_property_larger_n(self):
        for family, n in [("cheb1", 16), ("gencheb", 12)]:
            nodes, spec, w, _ = family_rule(family, n)
            interp = interpolate_kernel(nodes, spec, w, np.zeros(len(nodes)))
            L = interp.cardinal_matrix(nodes.points)
            assert np.abs(L - np.eye(len(nodes))).max() < 1e-9

    def test_interpolation_at_nodes(self):
        f = lambda x, y: np.exp(x) * np.cos(y)
        nodes, spec, w, _ = family_rule("cheb1", 9)
        fv = sample(f, nodes)
        interp = interpolate_kernel(nodes, spec, w, fv)
        got = interp(nodes.points[:, 0], nodes.points[:, 1])
        assert np.abs(got - fv).max() < 1e-9 * (1 + np.abs(fv).max())

    def test_quadrature_interpolation_consistency(self):
        # integrating L_n f against the weight equals sum(lambda * f)
        f = lambda x, y: np.exp(x + 0.5 * y)
        nodes, spec, w, rule = family_rule("cheb1", 8)
        interp = interpolate_kernel(nodes, spec, w, sample(f, nodes))
        X, Y, wts = tensor_oracle(w, 2 * 8 + 4)
        integral = (wts * interp(X, Y)).sum()
        assert integral == pytest.approx(float(rule.lambdas @ sample(f, nodes)), abs=1e-9)


class TestPaduaInterpolation:
    def test_basis_member_reproduced(self):
        f = lambda x, y: eval_chebyshev_t(3, x) * eval_chebyshev_t(2, y)
        for n in (5, 8):
            nodes = padua_points(n)
            interp = interpolate_padua(n, sample(f, nodes))
            g = np.linspace(-1, 1, 30)
            X, Y = np.meshgrid(g, g)
            assert np.abs(interp(X, Y) - f(X, Y)).max() < 1e-10

    def test_n11_residual_at_nodes(self):
        f = lambda x, y: np.cos(x) * np.exp(y)
        nodes = padua_points(11)
        assert len(nodes) == 78
        interp = interpolate_padua(11, sample(f, nodes))
        got = interp(nodes.points[:, 0], nodes.points[:, 1])
        assert np.abs(got - sample(f, nodes)).max() < 1e-10

    def test_integral_of_constant_interpolant(self):
        nodes = padua_points(7)
        interp = interpolate_padua(7, np.ones(len(nodes)))
        X, Y, wts = tensor_oracle(cheb1(), 20)
        assert (wts * interp(X, Y)).sum() == pytest.approx(np.pi**2, abs=1e-10)

    def test_unisolvence_through_n20(self):
        for n in range(1, 21):
            nodes = padua_points(n)
            interp = interpolate_padua(n, np.zeros(len(nodes)))
            assert np.isfinite(interp.collocation_cond)

    def test_value_count_checked(self):
        with pytest.raises(ValueError):
            interpolate_padua(5, np.zeros(7))


class TestLebesgue:
    def test_small_n_order_one(self):
        lam = lebesgue_constant("cheb1", 2, grid_resolution=65)
        assert 1.0 <= lam < 10.0

    def test_log_square_band(self):
        for n in (4, 8, 16):
            lam = lebesgue_constant("cheb1", n, grid_resolution=65)
            assert 0.1 <= lam / np.log(n) ** 2 <= 10.0

    def test_gencheb_power_band(self):
        for n in (4, 8):
            lam = lebesgue_constant("gencheb", n, grid_resolution=65)
            assert 0.2 <= lam / n**2 <= 0.9

    def test_monotone_under_nested_refinement(self):
        a = lebesgue_constant("cheb1", 6, grid_resolution=65)
        b = lebesgue_constant("cheb1", 6, grid_resolution=129)
        assert b >= a - 1e-12

    def test_resolution_floor(self):
        with pytest.raises(ValueError):
            lebesgue_constant("cheb1", 4, grid_resolution=32)

    def test_padua_lebesgue(self):
        lam = lebesgue_constant("padua", 6, grid_resolution=65)
        assert 1.0 < lam < 20.0


class TestConvergence:
    def test_exponential_decay(self):
        f = lambda x, y: np.exp(x + y)
        rows = dict(convergence_report("cheb1", f, [4, 8, 16]))
        assert rows[16] < 1e-8
        assert rows[8] / rows[4] <= 0.5
        assert rows[16] / rows[8] <= 0.5

    def test_projection_error_tiny(self):
        f = lambda x, y: x**4 - 2 * x * y**3
        rows = dict(convergence_report("cheb1", f, [5, 6]))
        assert rows[5] < 1e-9 and rows[6] < 1e-9

    def test_abs_x_decays_slowly(self):
        f = lambda x, y: np.abs(x)
        rows = dict(convergence_report("cheb1", f, [4, 8, 16]))
        assert rows[16] < rows[8] < rows[4]
        assert rows[16] > 1e-4  # genuinely slow

    def test_l2_norm_variant(self):
        f = lambda x, y: np.exp(x + y)
        rows = dict(convergence_report("cheb1", f, [4, 8], norm="L2"))
        assert rows[8] < rows[4]

    def test_padua_family(self):
        f = lambda x, y: np.exp(x + y)
        rows = dict(convergence_report("padua", f, [4, 8]))
        assert rows[8] < 1e-3 * rows[4]
