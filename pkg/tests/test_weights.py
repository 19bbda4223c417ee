"""Tests for the weight registry and moment oracle."""

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.integrate import quad

from cubasquare.weights import (
    WeightSpec,
    cheb1,
    cheb2,
    constant,
    gegenbauer_product,
    gencheb,
    is_centrally_symmetric,
    jacobi_product,
    mass,
    moment,
    moment_table,
    parse_weight,
    weight_string,
)

ALL_WEIGHTS = [
    constant(),
    cheb1(),
    cheb2(),
    gegenbauer_product(1.5),
    jacobi_product(0.5, 1.0),
    gencheb(0.5, 0.5, -0.5),
    gencheb(0.5, -0.5, -0.5),
    gencheb(1.5, 0.5, 0.5),
]


class TestMoments:
    def test_constant_area(self):
        assert moment(constant(), 0, 0) == pytest.approx(4.0, abs=1e-14)

    def test_cheb1_mass_pi_squared(self):
        assert moment(cheb1(), 0, 0) == pytest.approx(np.pi**2, rel=1e-14)

    def test_odd_symmetry(self):
        assert moment(constant(), 1, 4) == 0.0

    def test_all_odd_moments_vanish(self):
        for w in ALL_WEIGHTS:
            for i in range(5):
                for j in range(5):
                    if (i + j) % 2:
                        assert moment(w, i, j) == 0.0

    def test_constant_closed_form(self):
        for i in range(0, 8, 2):
            for j in range(0, 8, 2):
                assert moment(constant(), i, j) == pytest.approx(
                    4.0 / ((i + 1) * (j + 1)), rel=1e-14
                )

    def test_gencheb_swap_symmetry(self):
        w = gencheb(0.5, -0.5, -0.5)
        for i, j in [(2, 0), (4, 2), (6, 0), (3, 1)]:
            assert moment(w, i, j) == pytest.approx(moment(w, j, i), abs=1e-13)

    def test_moment_table_matches_moment(self):
        for w in (cheb2(), gencheb(0.5, 0.5, -0.5)):
            tbl = moment_table(w, 6)
            for i in range(7):
                for j in range(7):
                    assert tbl[i, j] == pytest.approx(moment(w, i, j), abs=1e-12)

    def test_gencheb_halfinteger_required(self):
        with pytest.raises(ValueError, match="polynomial"):
            moment(gencheb(0.3, 0.5, -0.5), 2, 2)


class TestAdaptiveQuadratureAgreement:
    """Independent oracle: nested 1-D adaptive quadrature with algebraic weights."""

    @pytest.mark.parametrize("w", [constant(), cheb1(), cheb2(), jacobi_product(0.5, 1.0)])
    def test_product_weights(self, w):
        rng = np.random.default_rng(42)
        if w.kind == "const":
            expo = (0.0, 0.0)
        elif w.kind == "gegenbauer":
            expo = (w.alpha - 0.5, w.alpha - 0.5)
        else:
            expo = (w.alpha, w.beta)
        pairs = {tuple(2 * rng.integers(0, 6, 2)) for _ in range(20)}
        for i, j in pairs:
            ref_x = quad(lambda x: x**i, -1, 1, weight="alg", wvar=(expo[0], expo[0]))[0]
            ref_y = quad(lambda y: y**j, -1, 1, weight="alg", wvar=(expo[1], expo[1]))[0]
            got = moment(w, int(i), int(j))
            assert got == pytest.approx(ref_x * ref_y, rel=1e-12, abs=1e-13)

    def test_gencheb_weight(self):
        w = gencheb(0.5, 0.5, -0.5)

        def inner(x, j):
            return quad(
                lambda y: y**j * (x + y) ** 2 * (x - y) ** 2,
                -1, 1, weight="alg", wvar=(-0.5, -0.5),
            )[0]

        for i, j in [(0, 0), (2, 0), (2, 2), (4, 0)]:
            ref = quad(lambda x: x**i * inner(x, j), -1, 1, weight="alg", wvar=(-0.5, -0.5))[0]
            assert moment(w, i, j) == pytest.approx(ref, rel=1e-11)


class TestCentralSymmetry:
    def test_all_kinds(self):
        for w in ALL_WEIGHTS:
            assert is_centrally_symmetric(w)

    def test_gencheb_pointwise(self):
        from cubasquare.weights import weight_values

        w = gencheb(0.5, -0.5, -0.5)
        rng = np.random.default_rng(0)
        x, y = rng.uniform(-0.99, 0.99, (2, 50))
        assert_allclose(weight_values(w, x, y), weight_values(w, -x, -y), rtol=1e-13)


class TestCanonicalStrings:
    @pytest.mark.parametrize(
        "text", ["const", "cheb1", "cheb2", "gegenbauer:1.5", "jacobi2:0.5:1", "gencheb:0.5:0.5:-0.5"]
    )
    def test_round_trip(self, text):
        w = parse_weight(text)
        assert parse_weight(weight_string(w)) == w

    def test_cheb_aliases(self):
        assert weight_string(gegenbauer_product(0.0)) == "cheb1"
        assert weight_string(gegenbauer_product(1.0)) == "cheb2"

    def test_bad_strings(self):
        for text in ["chebX", "gegenbauer", "gencheb:0.5:0.5", "jacobi2:a:b"]:
            with pytest.raises(ValueError):
                parse_weight(text)


class TestValidation:
    def test_gegenbauer_range(self):
        with pytest.raises(ValueError):
            gegenbauer_product(-0.6)

    def test_gencheb_gamma(self):
        with pytest.raises(ValueError):
            WeightSpec("gencheb", alpha=0.5, beta=0.5, gamma=0.0)

    def test_mass_positive(self):
        for w in ALL_WEIGHTS:
            assert mass(w) > 0
