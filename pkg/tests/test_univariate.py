"""Tests for univariate polynomial evaluation, zeros, and Gauss rules."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from cubasquare.univariate import (
    eval_chebyshev_t,
    eval_chebyshev_u,
    eval_gegenbauer,
    eval_jacobi_normalized,
    gauss_rule_1d,
    jacobi_angle_grid,
    jacobi_normalized_table,
)

PARAM_PAIRS = [(-0.5, -0.5), (0.5, 0.5), (0.5, -0.5), (0.0, 0.0)]


class TestChebyshev:
    def test_t0_is_one(self):
        assert eval_chebyshev_t(0, 0.3) == 1.0

    def test_t2_value(self):
        # T_2(x) = 2x^2 - 1
        assert_allclose(eval_chebyshev_t(2, 0.5), -0.5, atol=1e-15)

    def test_negative_degree_is_zero(self):
        assert eval_chebyshev_t(-1, 0.7) == 0.0
        assert eval_chebyshev_u(-1, 0.7) == 0.0

    def test_u1(self):
        assert_allclose(eval_chebyshev_u(1, 0.25), 0.5, atol=1e-15)

    def test_u0(self):
        assert eval_chebyshev_u(0, -0.9) == 1.0

    def test_u3_at_cos_pi_over_4(self):
        # sin(4 * pi/4) / sin(pi/4) = 0
        assert_allclose(eval_chebyshev_u(3, np.cos(np.pi / 4)), 0.0, atol=1e-14)

    def test_trig_identity_on_grid(self):
        th = np.linspace(0.05, np.pi - 0.05, 40)
        x = np.cos(th)
        for n in (1, 5, 12):
            assert_allclose(eval_chebyshev_t(n, x), np.cos(n * th), atol=1e-12)
            assert_allclose(eval_chebyshev_u(n, x), np.sin((n + 1) * th) / np.sin(th), atol=1e-11)


class TestGegenbauer:
    def test_lambda_one_is_u(self):
        assert_allclose(eval_gegenbauer(1.0, 2, 0.5), eval_chebyshev_u(2, 0.5), atol=1e-15)
        assert_allclose(eval_gegenbauer(1.0, 2, 0.5), 0.0, atol=1e-15)

    def test_lambda_half_is_legendre(self):
        assert_allclose(eval_gegenbauer(0.5, 1, 0.4), 0.4, atol=1e-15)

    def test_closed_form_degree3(self):
        # C_3^{3/2}(x) = 17.5 x^3 - 7.5 x from the hypergeometric series
        lam = 1.5
        poch2 = lam * (lam + 1)
        poch3 = poch2 * (lam + 2)
        x = 0.2
        expected = poch3 * 8 * x**3 / 6 - 2 * poch2 * x
        assert_allclose(eval_gegenbauer(lam, 3, x), expected, atol=1e-14)
        assert_allclose(expected, -1.36, atol=1e-14)

    def test_lambda_zero_rejected(self):
        with pytest.raises(ValueError, match="chebyshev"):
            eval_gegenbauer(0.0, 3, 0.5)

    def test_negative_degree(self):
        assert eval_gegenbauer(1.5, -2, 0.3) == 0.0


class TestJacobiNormalized:
    def test_p0_is_one(self):
        for a, b in PARAM_PAIRS:
            assert eval_jacobi_normalized(a, b, 0, 0.37) == 1.0

    def test_chebyshev_case_is_sqrt2_cos(self):
        th = np.linspace(0.1, 3.0, 25)
        for n in (1, 2, 7):
            assert_allclose(
                eval_jacobi_normalized(-0.5, -0.5, n, np.cos(th)),
                np.sqrt(2) * np.cos(n * th),
                atol=1e-12,
            )

    def test_odd_vanishes_at_origin(self):
        assert_allclose(eval_jacobi_normalized(0.5, 0.5, 1, 0.0), 0.0, atol=1e-15)

    @pytest.mark.parametrize("a,b", PARAM_PAIRS)
    def test_orthonormality_gram(self, a, b):
        x, w = gauss_rule_1d(a, b, 12)
        mass = w.sum()
        tab = jacobi_normalized_table(a, b, 10, x)
        gram = (tab * w) @ tab.T / mass
        assert np.abs(gram - np.eye(11)).max() < 1e-10

    @pytest.mark.parametrize("a,b", [(0.5, -0.5), (0.0, 0.0), (1.5, 0.5)])
    def test_against_classical_jacobi(self, a, b):
        # independent oracle: scipy's classical P_n^(a,b) with closed-form norms
        from math import gamma
        from scipy.special import eval_jacobi

        x = np.linspace(-0.95, 0.95, 21)
        mass = 2.0 ** (a + b + 1) * gamma(a + 1) * gamma(b + 1) / gamma(a + b + 2)
        for n in (1, 3, 6):
            h = (
                2.0 ** (a + b + 1)
                * gamma(n + a + 1)
                * gamma(n + b + 1)
                / ((2 * n + a + b + 1) * gamma(n + a + b + 1) * gamma(n + 1))
            )
            expected = eval_jacobi(n, a, b, x) * np.sqrt(mass / h)
            assert_allclose(eval_jacobi_normalized(a, b, n, x), expected, atol=1e-12)


class TestRecurrenceConsistency:
    """Recomputing p_{n+1} from the recurrence matches the table for n <= 50."""

    def test_chebyshev_t(self):
        x = np.linspace(-1, 1, 100)
        for n in range(1, 50):
            resid = eval_chebyshev_t(n + 1, x) - (2 * x * eval_chebyshev_t(n, x) - eval_chebyshev_t(n - 1, x))
            assert np.abs(resid).max() < 1e-12

    def test_chebyshev_u(self):
        x = np.linspace(-1, 1, 100)
        for n in range(1, 50):
            resid = eval_chebyshev_u(n + 1, x) - (2 * x * eval_chebyshev_u(n, x) - eval_chebyshev_u(n - 1, x))
            assert np.abs(resid).max() < 1e-12

    def test_gegenbauer(self):
        x = np.linspace(-1, 1, 100)
        lam = 1.5
        for n in range(1, 50):
            lhs = (n + 1) * eval_gegenbauer(lam, n + 1, x)
            rhs = 2 * (n + lam) * x * eval_gegenbauer(lam, n, x) - (n + 2 * lam - 1) * eval_gegenbauer(lam, n - 1, x)
            assert np.abs(lhs - rhs).max() < 1e-9 * np.abs(lhs).max()

    def test_jacobi_normalized_table_consistency(self):
        x = np.linspace(-1, 1, 100)
        tab = jacobi_normalized_table(0.5, -0.5, 51, x)
        for n in (10, 30, 50):
            assert np.abs(tab[n]).max() < 1e3  # stable, no blowup


class TestJacobiAngleGrid:
    def test_chebyshev_case(self):
        g = jacobi_angle_grid(-0.5, -0.5, 2)
        assert_allclose(g.thetas, [0.0, np.pi / 4, 3 * np.pi / 4], atol=1e-14)

    def test_u1_case(self):
        g = jacobi_angle_grid(0.5, 0.5, 1)
        assert_allclose(g.thetas, [0.0, np.pi / 2], atol=1e-14)

    def test_legendre_case(self):
        g = jacobi_angle_grid(0.0, 0.0, 2)
        assert_allclose(g.thetas, [0.0, np.arccos(1 / np.sqrt(3)), np.arccos(-1 / np.sqrt(3))], atol=1e-14)

    def test_ordering_invariant(self):
        g = jacobi_angle_grid(0.5, -0.5, 9)
        assert g.thetas[0] == 0.0
        assert np.all(np.diff(g.thetas) > 0)
        assert g.thetas[-1] < np.pi

    def test_zero_residual(self):
        for a, b in PARAM_PAIRS:
            g = jacobi_angle_grid(a, b, 14)
            z = np.cos(g.thetas[1:])
            vals = jacobi_normalized_table(a, b, 14, z)[14]
            assert np.abs(vals).max() < 1e-12

    def test_interlacing(self):
        for a, b in PARAM_PAIRS:
            zm = np.sort(np.cos(jacobi_angle_grid(a, b, 8).thetas[1:]))
            zm1 = np.sort(np.cos(jacobi_angle_grid(a, b, 9).thetas[1:]))
            for k in range(8):
                assert zm1[k] < zm[k] < zm1[k + 1]


class TestGaussRule:
    def test_midpoint(self):
        x, w = gauss_rule_1d(0.0, 0.0, 1)
        assert_allclose(x, [0.0], atol=1e-15)
        assert_allclose(w, [2.0], atol=1e-15)

    def test_chebyshev_equal_weights(self):
        for m in (3, 7, 10):
            _, w = gauss_rule_1d(-0.5, -0.5, m)
            assert_allclose(w, np.pi / m, atol=1e-13)

    def test_monomial_x8(self):
        x, w = gauss_rule_1d(0.0, 0.0, 5)
        assert abs((w * x**8).sum() - 2.0 / 9.0) < 1e-14

    @pytest.mark.parametrize("a,b", PARAM_PAIRS)
    def test_pairwise_products_exact(self, a, b):
        m = 8
        x, w = gauss_rule_1d(a, b, m)
        tab = jacobi_normalized_table(a, b, m, x)
        mass = w.sum()
        for i in range(m):
            for j in range(m - i):
                got = (w * tab[i] * tab[j]).sum() / mass
                assert abs(got - (1.0 if i == j else 0.0)) < 1e-12

    def test_weights_positive_and_mass(self):
        x, w = gauss_rule_1d(0.5, 0.5, 9)
        assert w.min() > 0
        assert_allclose(w.sum(), np.pi / 2, atol=1e-13)

    def test_invalid_m(self):
        with pytest.raises(ValueError):
            gauss_rule_1d(0.0, 0.0, 0)
