"""Tests for cubature weights, exactness checking, bounds, serialization."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from cubasquare.basis2d import star_spec_cheb1, star_spec_gaussian, star_spec_gencheb
from cubasquare.cubature import (
    CubatureError,
    CubatureRule,
    exactness_check,
    lower_bounds,
    rule_from_json,
    rule_to_json,
    weights_from_kernel,
    weights_from_vandermonde,
)
from cubasquare.nodes import (
    NodeSet,
    gauss_u_nodes,
    gencheb_nodes,
    min_t_nodes_even,
    moeller_count,
    near_min_t_nodes_odd,
    padua_points,
)
from cubasquare.weights import cheb1, cheb2, constant, gencheb, mass


class TestKernelWeights:
    def test_cheb1_minimal_sum_is_pi_squared(self):
        nodes = min_t_nodes_even(4)
        rule = weights_from_kernel(nodes, star_spec_cheb1(4), cheb1())
        assert rule.lambdas.sum() == pytest.approx(np.pi**2, rel=1e-12)

    def test_cheb2_gaussian_degrees(self):
        for n in range(2, 13):
            rule = weights_from_kernel(gauss_u_nodes(n), star_spec_gaussian(cheb2(), n), cheb2())
            rep = exactness_check(rule)
            assert rule.degree == 2 * n - 2
            assert rep.passed and rep.max_rel_error < 1e-9

    def test_cheb1_weight_structure_regression(self):
        # two weight levels: interior pi^2/(2m^2), boundary half of that
        m = 4
        rule = weights_from_kernel(min_t_nodes_even(2 * m), star_spec_cheb1(2 * m), cheb1())
        uniq = np.unique(np.round(rule.lambdas, 12))
        assert len(uniq) == 2
        assert_allclose(uniq, [np.pi**2 / (4 * m * m), np.pi**2 / (2 * m * m)], atol=1e-12)
        boundary = (np.abs(rule.nodes.points) > 1 - 1e-12).any(axis=1)
        assert_allclose(rule.lambdas[boundary], np.pi**2 / (4 * m * m), atol=1e-12)
        assert rule.lambdas.min() > 0

    def test_positivity_all_families(self):
        for n in range(2, 17):
            rule = weights_from_kernel(gauss_u_nodes(n), star_spec_gaussian(cheb2(), n), cheb2())
            assert rule.lambdas.min() > 0
        for n in range(2, 17, 2):
            rule = weights_from_kernel(min_t_nodes_even(n), star_spec_cheb1(n), cheb1())
            assert rule.lambdas.min() > 0
        for n in range(3, 16, 2):
            rule = weights_from_kernel(near_min_t_nodes_odd(n), star_spec_cheb1(n), cheb1())
            assert rule.lambdas.min() > 0
        for n in range(2, 17):
            rule = weights_from_kernel(
                gencheb_nodes(0.5, 0.5, n), star_spec_gencheb(0.5, 0.5, n), gencheb(0.5, 0.5, -0.5)
            )
            assert rule.lambdas.min() > 0

    def test_wrong_pairing_raises(self):
        with pytest.raises(CubatureError):
            weights_from_kernel(min_t_nodes_even(4), star_spec_cheb1(6), cheb1())

    def test_wrong_weight_raises(self):
        with pytest.raises(CubatureError):
            weights_from_kernel(min_t_nodes_even(4), star_spec_cheb1(4), cheb2())


class TestVandermondeWeights:
    def test_padua_degree_2n_minus_1(self):
        for n in (2, 5, 11):
            rule = weights_from_vandermonde(padua_points(n), cheb1(), 2 * n - 1)
            rep = exactness_check(rule)
            assert rep.passed

    def test_normalization_row(self):
        rule = weights_from_vandermonde(padua_points(6), cheb1(), 11)
        assert rule.lambdas.sum() == pytest.approx(np.pi**2, abs=1e-12)

    def test_unsupported_degree_raises(self):
        # 4 boundary-heavy points cannot integrate to degree 5
        ns = NodeSet(
            points=np.array([[1.0, 1.0], [-1.0, -1.0], [1.0, -1.0], [-1.0, 1.0]]),
            family="padua", n=1, expected_count=4, provenance="corners",
        )
        with pytest.raises(CubatureError):
            weights_from_vandermonde(ns, constant(), 5)

    def test_agreement_with_kernel_weights(self):
        for n in range(2, 13):
            nodes = min_t_nodes_even(n) if n % 2 == 0 else near_min_t_nodes_odd(n)
            r1 = weights_from_kernel(nodes, star_spec_cheb1(n), cheb1())
            r2 = weights_from_vandermonde(nodes, cheb1(), 2 * n - 1)
            assert np.abs(r1.lambdas - r2.lambdas).max() < 1e-9


class TestExactnessCheck:
    def test_midpoint_rule(self):
        ns = NodeSet(points=np.array([[0.0, 0.0]]), family="padua", n=0,
                     expected_count=1, provenance="midpoint")
        rule = CubatureRule(weight=constant(), degree=1, nodes=ns, lambdas=np.array([4.0]))
        rep = exactness_check(rule)
        assert rep.passed
        assert rep.first_failure_degree == 2

    def test_cheb2_failure_degree(self):
        rule = weights_from_kernel(gauss_u_nodes(6), star_spec_gaussian(cheb2(), 6), cheb2())
        rep = exactness_check(rule)
        assert rep.passed
        assert rep.first_failure_degree in (11, 12, 13)

    def test_cheb1_minimal_pass_at_15(self):
        rule = weights_from_kernel(min_t_nodes_even(8), star_spec_cheb1(8), cheb1())
        rep = exactness_check(rule)
        assert rep.passed and rule.degree == 15

    def test_gencheb_rules_exact(self):
        for n in (4, 7, 8):
            rule = weights_from_kernel(
                gencheb_nodes(0.5, 0.5, n), star_spec_gencheb(0.5, 0.5, n), gencheb(0.5, 0.5, -0.5)
            )
            rep = exactness_check(rule)
            assert rep.passed and rule.degree == 2 * n - 1


class TestLowerBounds:
    def test_constant_fixtures(self):
        lb5 = lower_bounds(constant(), 5)
        assert (lb5.dim_bound, lb5.moeller_bound) == (15, 17)
        lb4 = lower_bounds(constant(), 4)
        assert (lb4.dim_bound, lb4.moeller_bound) == (10, 12)

    def test_rank_bound_reduces_to_moeller(self):
        for n in range(2, 9):
            lb = lower_bounds(constant(), n)
            assert lb.rank_bound == lb.moeller_bound

    def test_every_rule_respects_bounds(self):
        cases = [
            (weights_from_kernel(gauss_u_nodes(5), star_spec_gaussian(cheb2(), 5), cheb2()), 5),
            (weights_from_kernel(min_t_nodes_even(6), star_spec_cheb1(6), cheb1()), 6),
            (weights_from_kernel(near_min_t_nodes_odd(7), star_spec_cheb1(7), cheb1()), 7),
        ]
        for rule, n in cases:
            lb = lower_bounds(rule.weight, n)
            assert rule.node_count >= lb.dim_bound
            assert rule.node_count >= lb.moeller_bound or rule.degree == 2 * n - 2

    def test_cheb1_even_attains_moeller(self):
        for n in (4, 8, 12):
            rule = weights_from_kernel(min_t_nodes_even(n), star_spec_cheb1(n), cheb1())
            assert rule.node_count == moeller_count(n)


class TestRuleValidation:
    def test_negative_weight_rejected(self):
        ns = NodeSet(points=np.array([[0.0, 0.0], [0.5, 0.5]]), family="padua", n=0,
                     expected_count=2, provenance="")
        with pytest.raises(CubatureError):
            CubatureRule(weight=constant(), degree=0, nodes=ns, lambdas=np.array([5.0, -1.0]))

    def test_bad_mass_rejected(self):
        ns = NodeSet(points=np.array([[0.0, 0.0]]), family="padua", n=0,
                     expected_count=1, provenance="")
        with pytest.raises(CubatureError):
            CubatureRule(weight=constant(), degree=0, nodes=ns, lambdas=np.array([3.0]))


class TestSerialization:
    def test_round_trip_bit_stable(self):
        rule = weights_from_kernel(min_t_nodes_even(6), star_spec_cheb1(6), cheb1())
        rule.oracle_report = exactness_check(rule)
        text = rule_to_json(rule)
        r2 = rule_from_json(text)
        assert np.array_equal(r2.nodes.points, rule.nodes.points)
        assert np.array_equal(r2.lambdas, rule.lambdas)
        assert rule_to_json(r2) == text

    def test_oracle_report_preserved(self):
        rule = weights_from_vandermonde(padua_points(4), cheb1(), 7)
        rule.oracle_report = exactness_check(rule)
        r2 = rule_from_json(rule_to_json(rule))
        assert r2.oracle_report.passed
        rep = exactness_check(r2)
        assert rep.passed

    def test_mass_helper(self):
        assert mass(cheb1()) == pytest.approx(np.pi**2, rel=1e-14)
