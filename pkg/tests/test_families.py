"""Tests for the closed-form trigonometric family evaluators.

Every closed form is checked against the independent series-based
evaluators in fraclegendre.oracle on guard-compliant argument ranges,
plus frozen endpoint values and the gamma-product constants.
"""

import math

import pytest

from fraclegendre import exact, families, octahedral, oracle

SQRT3 = math.sqrt(3.0)


def rel_err(got, want):
    return abs(got - want) / max(abs(want), 1e-300)


class TestTrigPair:
    def test_product_identities(self):
        for xi in (0.3, 1.0, 2.5):
            pair = families.trig_pair("A", xi)
            want = math.sinh(xi / 3.0) ** 2 / 3.0
            assert abs(pair.plus * pair.minus - want) <= 1e-13 * (1.0 + want)
        for theta in (0.4, 1.5, 3.0):
            pair = families.trig_pair("B", theta)
            want = math.sin(theta / 3.0) ** 2 / 3.0
            assert abs(pair.plus * pair.minus - want) <= 1e-13 * (1.0 + want)
        for xi in (-1.2, 0.0, 0.9):
            pair = families.trig_pair("C", xi)
            want = math.cosh(xi / 3.0) ** 2 / 3.0
            assert abs(pair.plus * pair.minus - want) <= 1e-13 * (1.0 + want)

    def test_endpoints(self):
        pair = families.trig_pair("A", 0.0)
        assert pair.plus == pytest.approx(2.0, abs=1e-15)
        assert pair.minus == pytest.approx(0.0, abs=1e-15)
        pair = families.trig_pair("B", 0.0)
        assert pair.plus == pytest.approx(2.0, abs=1e-15)
        assert pair.minus == pytest.approx(0.0, abs=1e-15)
        # sqrt amplifies the cos(pi/3) rounding to ~1e-8 at the branch point
        pair = families.trig_pair("B", math.pi)
        assert pair.plus == pytest.approx(0.5, abs=1e-7)
        assert pair.minus == pytest.approx(0.5, abs=1e-7)

    def test_b_ratio_tends_to_one_at_pi(self):
        # the deviation scales like sqrt(pi - theta)
        for eps in (1e-4, 1e-6, 1e-8):
            pair = families.trig_pair("B", math.pi - eps)
            assert abs(pair.ratio_minus_over_plus - 1.0) < 4.0 * math.sqrt(eps)

    def test_c_ratio_asymptote(self):
        # -C_-/C_+ approaches -(2+sqrt(3))^2, a root of p_f, only in the limit
        pair = families.trig_pair("C", -30.0)
        assert rel_err(-pair.ratio_minus_over_plus, -(2.0 + SQRT3) ** 2) < 1e-6

    def test_quotient_map_gives_tanh_squared(self):
        xi = 1.0
        pair = families.trig_pair("A", xi)
        got = exact.map_R(-pair.ratio_minus_over_plus)
        assert rel_err(got, math.tanh(xi) ** 2) < 1e-12

    def test_invariants_along_a_curve(self):
        xi = 0.8
        pair = families.trig_pair("A", xi)
        u = -pair.ratio_minus_over_plus
        p_v, p_e, p_f = exact.invariant_polys()
        ap = pair.plus
        assert rel_err(p_v.eval(u), -(16.0 / 27.0) * ap**-6 * math.sinh(xi) ** 2) < 1e-12
        assert rel_err(p_e.eval(u), 8.0 * ap**-3 * math.cosh(xi)) < 1e-12
        assert rel_err(p_f.eval(u), 4.0 * ap**-2) < 1e-12

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            families.trig_pair("A", -0.1)
        with pytest.raises(ValueError):
            families.trig_pair("B", 3.2)
        with pytest.raises(ValueError):
            families.trig_pair("D", 1.0)


class TestOctahedralLegendre:
    def test_base_point_closed_form(self):
        xi = 0.8
        pair = families.trig_pair("A", xi)
        want = (
            1.0
            / math.gamma(0.75)
            * math.sinh(xi) ** -0.25
            * pair.plus**0.25
        )
        assert rel_err(families.oct_legendre_P(0, 0, xi, 1), want) < 1e-13

    def test_example_against_series(self):
        got = families.oct_legendre_P(1, 0, 0.5, 1)
        want = oracle.legendre_P(5.0 / 6.0, 0.25, math.cosh(0.5))
        assert rel_err(got, want) < 1e-10

    @pytest.mark.parametrize("xi", [0.5, 1.2])
    def test_grid_against_series(self, xi):
        z = math.cosh(xi)
        for n in range(-2, 3):
            for m in range(-2, 3):
                nu = -1.0 / 6.0 + n
                mu = 0.25 + m
                got = families.oct_legendre_P(n, m, xi, 1)
                assert rel_err(got, oracle.legendre_P(nu, mu, z)) < 1e-9
                got = families.oct_legendre_P(n, m, xi, -1)
                assert rel_err(got, oracle.legendre_P(nu, -mu, z)) < 1e-9

    def test_domain_error(self):
        with pytest.raises(ValueError):
            families.oct_legendre_P(0, 0, 0.0, 1)


class TestOctahedralFerrers:
    def test_example_against_series(self):
        got = families.oct_ferrers_P(0, 0, 1.0, 1)
        want = oracle.ferrers_P(-1.0 / 6.0, 0.25, math.cos(1.0))
        assert rel_err(got, want) < 1e-10

    def test_shifted_order_both_signs(self):
        theta = 0.6
        z = math.cos(theta)
        got = families.oct_ferrers_P(0, 1, theta, 1)
        assert rel_err(got, oracle.ferrers_P(-1.0 / 6.0, 1.25, z)) < 1e-9
        got = families.oct_ferrers_P(0, 1, theta, -1)
        assert rel_err(got, oracle.ferrers_P(-1.0 / 6.0, -1.25, z)) < 1e-9

    @pytest.mark.parametrize("theta", [0.7, 2.6])
    def test_grid_against_series(self, theta):
        z = math.cos(theta)
        for n in range(-2, 3):
            for m in range(-2, 3):
                nu = -1.0 / 6.0 + n
                mu = 0.25 + m
                got = families.oct_ferrers_P(n, m, theta, 1)
                assert rel_err(got, oracle.ferrers_P(nu, mu, z)) < 1e-9
                got = families.oct_ferrers_P(n, m, theta, -1)
                assert rel_err(got, oracle.ferrers_P(nu, -mu, z)) < 1e-9

    def test_domain_error(self):
        with pytest.raises(ValueError):
            families.oct_ferrers_P(0, 0, math.pi, 1)


class TestMehlerIntegral:
    """The closed form must match the classical integral-transform relation
    value sqrt(pi/2) Gamma(m+3/4) w^(m+1/4) P^(-1/4-m), w = sinh or sin."""

    PAIRS = [(0, 0), (1, 0), (0, 1), (-1, 1), (2, 2), (-2, 1)]

    @pytest.mark.parametrize("n,m", PAIRS)
    def test_hyperbolic_matches_series(self, n, m):
        xi = 0.9
        want = (
            math.sqrt(math.pi / 2.0)
            * math.gamma(m + 0.75)
            * math.sinh(xi) ** (m + 0.25)
            * oracle.legendre_P(-1.0 / 6.0 + n, -(0.25 + m), math.cosh(xi))
        )
        got = families.mehler_integral(n, m, xi, "hyperbolic")
        assert rel_err(got, want) < 1e-9

    @pytest.mark.parametrize("n,m", PAIRS)
    def test_circular_matches_series(self, n, m):
        theta = 1.1
        want = (
            math.sqrt(math.pi / 2.0)
            * math.gamma(m + 0.75)
            * math.sin(theta) ** (m + 0.25)
            * oracle.ferrers_P(-1.0 / 6.0 + n, -(0.25 + m), math.cos(theta))
        )
        got = families.mehler_integral(n, m, theta, "circular")
        assert rel_err(got, want) < 1e-9

    def test_rejects_negative_m_and_bad_kind(self):
        with pytest.raises(ValueError):
            families.mehler_integral(0, -1, 0.5, "hyperbolic")
        with pytest.raises(ValueError):
            families.mehler_integral(0, 0, 0.5, "elliptic")
        with pytest.raises(ValueError):
            families.mehler_integral(0, 0, -0.5, "hyperbolic")
        with pytest.raises(ValueError):
            families.mehler_integral(0, 0, 3.5, "circular")


class TestGammaProductConstants:
    def test_sqrt_sqrt3_plus_1(self):
        g = math.gamma
        want = families.SQRT_SQRT3_PLUS_1
        got = (
            math.sqrt(math.pi)
            * 2.0**0.25
            * 3.0**-0.375
            * g(1.0 / 12.0)
            / (g(0.25) * g(1.0 / 3.0))
        )
        assert rel_err(got, want) < 1e-12
        got = (
            math.pi**-1.5
            * 2.0**-0.75
            * 3.0**0.375
            * g(11.0 / 12.0)
            * g(0.25)
            * g(1.0 / 3.0)
        )
        assert rel_err(got, want) < 1e-12

    def test_sqrt_sqrt3_minus_1(self):
        g = math.gamma
        want = families.SQRT_SQRT3_MINUS_1
        got = (
            math.pi**-0.5
            * 2.0**-0.25
            * 3.0**0.125
            * g(5.0 / 12.0)
            * g(1.0 / 3.0)
            / g(0.25)
        )
        assert rel_err(got, want) < 1e-12
        got = (
            math.pi**-0.5
            * 2.0**-0.25
            * 3.0**-0.125
            * g(7.0 / 12.0)
            * g(0.25)
            / g(1.0 / 3.0)
        )
        assert rel_err(got, want) < 1e-12


class TestTetraSecondKind:
    def test_example_first_row(self):
        got = families.tetra2_Qhat(0, 0, 1.0, "first")
        want = (2.0 / math.pi) * oracle.legendre_Qhat(
            -0.75, -1.0 / 3.0, 1.0 / math.tanh(1.0)
        )
        assert rel_err(got, want) < 1e-9

    def test_example_second_row(self):
        got = families.tetra2_Qhat(1, 0, 0.7, "second")
        want = (2.0 / math.pi) * oracle.legendre_Qhat(
            -0.25, -4.0 / 3.0, 1.0 / math.tanh(0.7)
        )
        assert rel_err(got, want) < 1e-9

    @pytest.mark.parametrize("xi", [0.7, 1.2])
    def test_grid_against_series(self, xi):
        z = 1.0 / math.tanh(xi)
        for n in range(-2, 3):
            for m in range(-2, 3):
                mu = -1.0 / 3.0 - n
                got = families.tetra2_Qhat(n, m, xi, "first")
                want = (2.0 / math.pi) * oracle.legendre_Qhat(-0.75 - m, mu, z)
                assert rel_err(got, want) < 1e-9
                got = families.tetra2_Qhat(n, m, xi, "second")
                want = (2.0 / math.pi) * oracle.legendre_Qhat(-0.25 + m, mu, z)
                assert rel_err(got, want) < 1e-9

    def test_bad_row_and_domain(self):
        with pytest.raises(ValueError):
            families.tetra2_Qhat(0, 0, 1.0, "third")
        with pytest.raises(ValueError):
            families.tetra2_Qhat(0, 0, -1.0, "first")


class TestTetraFirstKind:
    def test_example_legendre(self):
        got = families.tetra2_P_legendre(0, 0, 1.2, -1)
        want = oracle.legendre_P(-0.75, -1.0 / 3.0, 1.0 / math.tanh(1.2))
        assert rel_err(got, want) < 1e-9

    def test_example_ferrers(self):
        got = families.tetra2_P_ferrers(0, 0, -0.4, 1)
        want = oracle.ferrers_P(-0.75, 1.0 / 3.0, math.tanh(-0.4))
        assert rel_err(got, want) < 1e-9

    @pytest.mark.parametrize("xi", [0.7, 1.2])
    def test_legendre_grid(self, xi):
        z = 1.0 / math.tanh(xi)
        for n in range(-2, 3):
            for m in range(-2, 3):
                nu = -0.75 - m
                got = families.tetra2_P_legendre(n, m, xi, -1)
                assert rel_err(got, oracle.legendre_P(nu, -1.0 / 3.0 - n, z)) < 1e-9
                got = families.tetra2_P_legendre(n, m, xi, 1)
                assert rel_err(got, oracle.legendre_P(nu, 1.0 / 3.0 + n, z)) < 1e-9

    @pytest.mark.parametrize("xi", [-0.8, 0.3, 0.9])
    def test_ferrers_grid(self, xi):
        z = math.tanh(xi)
        for n in range(-2, 3):
            for m in range(-2, 3):
                nu = -0.75 - m
                got = families.tetra2_P_ferrers(n, m, xi, -1)
                assert rel_err(got, oracle.ferrers_P(nu, -1.0 / 3.0 - n, z)) < 1e-9
                got = families.tetra2_P_ferrers(n, m, xi, 1)
                assert rel_err(got, oracle.ferrers_P(nu, 1.0 / 3.0 + n, z)) < 1e-9

    def test_domain_error(self):
        with pytest.raises(ValueError):
            families.tetra2_P_legendre(0, 0, 0.0, -1)


class TestTetraThirdClass:
    def test_ferrers_example(self):
        z = math.sqrt(1.0 - math.exp(-2.0))
        got = families.tetra3_eval(0, 1.0, "ferrers", -1)
        assert rel_err(got, oracle.ferrers_P(-1.0 / 6.0, -1.0 / 3.0, z)) < 1e-9
        got = families.tetra3_eval(0, 1.0, "ferrers", 1)
        assert rel_err(got, oracle.ferrers_P(-5.0 / 6.0, 1.0 / 3.0, z)) < 1e-9

    def test_legendre_example(self):
        z = math.sqrt(1.0 + math.exp(-1.0))
        got = families.tetra3_eval(0, 0.5, "legendre", -1)
        assert rel_err(got, oracle.legendre_P(-1.0 / 6.0, -1.0 / 3.0, z)) < 1e-9

    def test_qhat_example(self):
        z = math.sqrt(1.0 + math.exp(0.6))
        got = families.tetra3_eval(1, 0.3, "qhat", 1)
        want = (2.0 / math.pi) * oracle.legendre_Qhat(-5.0 / 6.0 - 1, 1.0 / 3.0 + 1, z)
        assert rel_err(got, want) < 1e-9

    @pytest.mark.parametrize("xi", [0.6, 1.5])
    def test_ferrers_grid(self, xi):
        z = math.sqrt(1.0 - math.exp(-2.0 * xi))
        for n in range(-2, 3):
            got = families.tetra3_eval(n, xi, "ferrers", -1)
            assert rel_err(got, oracle.ferrers_P(-1.0 / 6.0 + n, -1.0 / 3.0 - n, z)) < 1e-9
            got = families.tetra3_eval(n, xi, "ferrers", 1)
            assert rel_err(got, oracle.ferrers_P(-5.0 / 6.0 - n, 1.0 / 3.0 + n, z)) < 1e-9

    @pytest.mark.parametrize("xi", [-0.3, 0.5])
    def test_legendre_grid(self, xi):
        z = math.sqrt(1.0 + math.exp(-2.0 * xi))
        for n in range(-2, 3):
            got = families.tetra3_eval(n, xi, "legendre", -1)
            assert rel_err(got, oracle.legendre_P(-1.0 / 6.0 + n, -1.0 / 3.0 - n, z)) < 1e-9
            got = families.tetra3_eval(n, xi, "legendre", 1)
            assert rel_err(got, oracle.legendre_P(-5.0 / 6.0 - n, 1.0 / 3.0 + n, z)) < 1e-9

    @pytest.mark.parametrize("xi", [-0.4, 0.5, 1.0])
    def test_qhat_grid(self, xi):
        z = math.sqrt(1.0 + math.exp(2.0 * xi))
        for n in range(-2, 3):
            got = families.tetra3_eval(n, xi, "qhat", -1)
            want = (2.0 / math.pi) * oracle.legendre_Qhat(
                -1.0 / 6.0 + n, -1.0 / 3.0 - n, z
            )
            assert rel_err(got, want) < 1e-9
            got = families.tetra3_eval(n, xi, "qhat", 1)
            want = (2.0 / math.pi) * oracle.legendre_Qhat(
                -5.0 / 6.0 - n, 1.0 / 3.0 + n, z
            )
            assert rel_err(got, want) < 1e-9

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            families.tetra3_eval(0, -1.0, "ferrers", -1)
        with pytest.raises(ValueError):
            families.tetra3_eval(0, 1.0, "gegenbauer", -1)


class TestCyclic:
    def test_degree_zero_is_constant_one(self):
        assert families.cyclic_P(0, 0.0, 1.7, "legendre") == pytest.approx(1.0)
        assert families.cyclic_P(0, 0.0, 0.2, "ferrers") == pytest.approx(1.0)

    def test_example_against_series(self):
        z = math.cosh(0.8)
        got = families.cyclic_P(1, 0.25, z, "legendre")
        assert rel_err(got, oracle.legendre_P(1.0, 0.25, z)) < 1e-10

    def test_ferrers_against_series(self):
        got = families.cyclic_P(2, 0.3, 0.4, "ferrers")
        assert rel_err(got, oracle.ferrers_P(2.0, 0.3, 0.4)) < 1e-10

    def test_degenerate_orders_vanish(self):
        assert families.cyclic_P(1, 3.0, 1.5, "legendre") == 0.0
        assert families.cyclic_P(0, 1.0, 0.3, "ferrers") == 0.0

    @pytest.mark.parametrize("mu", [0.25, -0.6, 1.2])
    def test_grid_against_series(self, mu):
        for n in range(4):
            got = families.cyclic_P(n, mu, 1.5, "legendre")
            assert rel_err(got, oracle.legendre_P(float(n), mu, 1.5)) < 1e-9
            for z in (-0.35, 0.35):
                got = families.cyclic_P(n, mu, z, "ferrers")
                assert rel_err(got, oracle.ferrers_P(float(n), mu, z)) < 1e-9

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            families.cyclic_P(-1, 0.25, 1.5, "legendre")
        with pytest.raises(ValueError):
            families.cyclic_P(1, 0.25, 0.5, "legendre")
        with pytest.raises(ValueError):
            families.cyclic_P(1, 0.25, 1.5, "ferrers")
        with pytest.raises(ValueError):
            families.cyclic_P(1, 0.25, 1.5, "gegenbauer")


class TestDihedral:
    def test_half_order_ferrers_p_closed_forms(self):
        alpha, theta = 0.7, 1.3
        root = math.sqrt(2.0 / math.pi) / math.sqrt(math.sin(theta))
        got = families.dihedral_eval(0, alpha, theta, "ferrers_p", 1)
        assert rel_err(got, root * math.cos(alpha * theta)) < 1e-12
        got = families.dihedral_eval(0, alpha, theta, "ferrers_p", -1)
        assert rel_err(got, root * math.sin(alpha * theta) / alpha) < 1e-12

    def test_half_order_ferrers_q_closed_forms(self):
        alpha, theta = 0.7, 1.3
        root = math.sqrt(math.pi / 2.0) / math.sqrt(math.sin(theta))
        got = families.dihedral_eval(0, alpha, theta, "ferrers_q", 1)
        assert rel_err(got, -root * math.sin(alpha * theta)) < 1e-12
        got = families.dihedral_eval(0, alpha, theta, "ferrers_q", -1)
        assert rel_err(got, root * math.cos(alpha * theta) / alpha) < 1e-12

    def test_quarter_circle_point(self):
        got = families.dihedral_eval(0, 1.0, math.pi / 2.0, "ferrers_p", -1)
        assert rel_err(got, math.sqrt(2.0 / math.pi)) < 1e-12

    def test_qhat_example(self):
        got = families.dihedral_eval(2, 0.6, 1.1, "qhat", 1)
        want = oracle.legendre_Qhat(0.1, 2.5, math.cosh(1.1))
        assert rel_err(got, want) < 1e-9

    @pytest.mark.parametrize("alpha", [0.3, 0.7, 1.6])
    def test_hyperbolic_grid(self, alpha):
        nu = alpha - 0.5
        for m in range(4):
            mu = m + 0.5
            for xi in (0.6, 0.9, 1.2, 1.5):
                z = math.cosh(xi)
                got = families.dihedral_eval(m, alpha, xi, "qhat", 1)
                assert rel_err(got, oracle.legendre_Qhat(nu, mu, z)) < 1e-9
                got = families.dihedral_eval(m, alpha, xi, "qhat", -1)
                assert rel_err(got, oracle.legendre_Qhat(nu, -mu, z)) < 1e-9
                got = families.dihedral_eval(m, alpha, xi, "legendre", 1)
                assert rel_err(got, oracle.legendre_P(nu, mu, z)) < 1e-9
                got = families.dihedral_eval(m, alpha, xi, "legendre", -1)
                assert rel_err(got, oracle.legendre_P(nu, -mu, z)) < 1e-9

    @pytest.mark.parametrize("alpha", [0.3, 0.7, 1.6])
    def test_circular_grid(self, alpha):
        nu = alpha - 0.5
        for m in range(4):
            mu = m + 0.5
            for theta in (0.7, 1.3, 2.0, 2.6):
                z = math.cos(theta)
                got = families.dihedral_eval(m, alpha, theta, "ferrers_p", 1)
                assert rel_err(got, oracle.ferrers_P(nu, mu, z)) < 1e-9
                got = families.dihedral_eval(m, alpha, theta, "ferrers_p", -1)
                assert rel_err(got, oracle.ferrers_P(nu, -mu, z)) < 1e-9
                got = families.dihedral_eval(m, alpha, theta, "ferrers_q", 1)
                assert rel_err(got, oracle.ferrers_Q(nu, mu, z)) < 1e-9
                got = families.dihedral_eval(m, alpha, theta, "ferrers_q", -1)
                assert rel_err(got, oracle.ferrers_Q(nu, -mu, z)) < 1e-9

    def test_degenerate_minus_order_cases(self):
        with pytest.raises(ValueError):
            families.dihedral_eval(1, 1.0, 0.8, "qhat", -1)
        with pytest.raises(ValueError):
            families.dihedral_eval(0, 0.0, 0.8, "ferrers_q", -1)
        with pytest.raises(NotImplementedError):
            families.dihedral_eval(2, 1.0, 0.8, "legendre", -1)
        with pytest.raises(NotImplementedError):
            families.dihedral_eval(2, -2.0, 0.8, "ferrers_p", -1)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            families.dihedral_eval(-1, 0.3, 0.8, "qhat", 1)
        with pytest.raises(ValueError):
            families.dihedral_eval(0, 0.3, -0.8, "qhat", 1)
        with pytest.raises(ValueError):
            families.dihedral_eval(0, 0.3, 3.5, "ferrers_p", 1)
        with pytest.raises(ValueError):
            families.dihedral_eval(0, 0.3, 0.8, "bessel", 1)
