"""Tests for the quadrature and biorthogonal-expansion machinery.

Quadrature is checked against analytically integrable singular models;
the two biorthogonality pairings against their vanishing conditions and
against closed-form diagonal values derived independently (and verified
by high-precision quadrature before being frozen here); the expansion
paths against self-expansions, analytic coefficient laws, and pointwise
convergence studies.
"""

import math

import pytest

from fraclegendre import expansions, families
from fraclegendre.expansions import (
    ExpansionSpec,
    QuadResult,
    chebyshev_w,
    lh_coefficients,
    lh_normalization,
    love_hunter_inner,
    octahedral_biorthog,
    pinsky_basis,
    singular_quad,
    w_expansion,
)
from fraclegendre.oracle import ferrers_P


class TestSingularQuad:
    def test_inverse_sqrt(self):
        r = singular_quad(lambda z: z ** -0.5, 0.0, 1.0, (-0.5, 0.0))
        assert abs(r.value - 2.0) <= 1e-12
        assert r.err_estimate >= 0.0
        assert r.evaluations > 0

    def test_symmetric_beta_kernel(self):
        # int_{-1}^{1} (1-z)^{-1/8} (1+z)^{-1/8} dz = 2^{3/4} B(7/8, 7/8)
        want = 2.0 ** 0.75 * math.gamma(7 / 8) ** 2 / math.gamma(7 / 4)
        r = singular_quad(lambda z: (1 - z) ** -0.125 * (1 + z) ** -0.125,
                          -1.0, 1.0, (-0.125, -0.125))
        assert abs(r.value - want) <= 1e-10

    def test_mehler_kernel_matches_closed_form(self):
        theta = 1.2
        r = singular_quad(
            lambda p: math.cos(p / 3.0) * (math.cos(p) - math.cos(theta)) ** -0.25,
            0.0, theta, (0.0, -0.25))
        assert abs(r.value - families.mehler_integral(0, 0, theta, "circular")) <= 1e-6

    def test_smooth_integrand(self):
        r = singular_quad(math.exp, 0.0, 1.0)
        assert abs(r.value - (math.e - 1.0)) <= 1e-13

    def test_non_integrable_exponent_rejected(self):
        for exps in ((-1.0, 0.0), (0.0, -1.0), (-1.5, 0.0)):
            with pytest.raises(ValueError):
                singular_quad(lambda z: 1.0, 0.0, 1.0, exps)

    def test_empty_interval_rejected(self):
        with pytest.raises(ValueError):
            singular_quad(lambda z: 1.0, 1.0, 1.0)

    def test_negative_error_estimate_rejected(self):
        with pytest.raises(ValueError):
            QuadResult(1.0, -1e-3, 10)


class TestLoveHunterInner:
    def test_even_gap_vanishes(self):
        r = love_hunter_inner(-1 / 6, -1 / 6 + 2, 0.25)
        assert abs(r.value) <= 1e-8

    def test_even_gap_vanishes_negative_mu(self):
        r = love_hunter_inner(0.3, 2.3, -0.45)
        assert abs(r.value) <= 1e-8

    def test_normalization_baseline(self):
        # Diagonal at nu = -1/6: 3*sqrt(3)/2, from the closed form
        # 2 cos(nu pi)/(2 nu + 1) (verified by independent high-precision
        # quadrature before freezing).
        r = love_hunter_inner(-1 / 6, -1 / 6, 0.25)
        assert abs(r.value - 1.5 * math.sqrt(3.0)) <= 5e-12

    def test_diagonal_closed_form_sweep(self):
        for nu in (-1 / 6, 0.3, 1.7, -0.6):
            for mu in (0.25, -0.25, 1 / 3):
                r = love_hunter_inner(nu, nu, mu)
                want = lh_normalization(nu)
                assert abs(r.value - want) <= 1e-9 * max(1.0, abs(want))

    def test_diagonal_at_zero_degree_is_two(self):
        # 2 cos(0)/(2*0+1): holds for every order, here the order sweep's
        # hardest case (strongest endpoint singularity).
        r = love_hunter_inner(0.0, 0.0, -0.45)
        assert abs(r.value - 2.0) <= 5e-8

    def test_vanishing_sweep_all_orders(self):
        # |inner| < 1e-8 * (norm product) for nonzero even gaps.
        for mu in (0.25, -0.25, 1 / 3, -0.45):
            for (nu, nup) in ((-1 / 6, -1 / 6 + 2), (-1 / 6 + 2, -1 / 6),
                              (0.3, 2.3), (-0.6, 1.4)):
                scale = math.sqrt(abs(lh_normalization(nu) * lh_normalization(nup)))
                r = love_hunter_inner(nu, nup, mu)
                assert abs(r.value) <= 1e-8 * max(scale, 1.0), (nu, nup, mu)

    def test_odd_gap_does_not_vanish(self):
        r = love_hunter_inner(-1 / 6, -1 / 6 + 1, 0.25)
        assert abs(r.value) > 1e-6

    def test_order_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            love_hunter_inner(0.3, 2.3, 1.0)

    def test_half_odd_degree_rejected(self):
        with pytest.raises(ValueError):
            love_hunter_inner(0.5, 2.5, 0.25)
        with pytest.raises(ValueError):
            love_hunter_inner(0.3, -1.5, 0.25)


class TestOctahedralBiorthog:
    def test_even_gap_vanishes_m0(self):
        r = octahedral_biorthog(0, 2, 0)
        assert abs(r.value) <= 1e-8

    def test_even_gap_vanishes_m_minus_one(self):
        r = octahedral_biorthog(1, -1, -1)
        assert abs(r.value) <= 1e-8

    def test_even_gap_sweep(self):
        for m in (0, -1):
            for n in range(-3, 4):
                for npr in range(-3, 4):
                    if n == npr or (n - npr) % 2 != 0:
                        continue
                    r = octahedral_biorthog(n, npr, m)
                    assert abs(r.value) <= 1e-8, (n, npr, m)

    def test_odd_gap_does_not_vanish(self):
        r = octahedral_biorthog(0, 1, 0)
        assert abs(r.value) > 1e-6

    def test_other_orders_rejected(self):
        for m in (1, -2, 3):
            with pytest.raises(ValueError):
                octahedral_biorthog(0, 2, m)


class TestExpansionSpec:
    def test_order_bounds(self):
        for mu in (1.0, -1.0, 1.5):
            with pytest.raises(ValueError):
                ExpansionSpec(nu0=0.0, mu=mu, N=1, f=abs)

    def test_half_odd_base_degree_rejected(self):
        with pytest.raises(ValueError):
            ExpansionSpec(nu0=1.5, mu=0.25, N=1, f=abs)

    def test_negative_truncation_rejected(self):
        with pytest.raises(ValueError):
            ExpansionSpec(nu0=0.0, mu=0.25, N=-1, f=abs)

    def test_degree_indexing(self):
        spec = ExpansionSpec(nu0=-1 / 6, mu=0.25, N=2, f=abs)
        assert spec.degree(0) == -1 / 6
        assert spec.degree(-2) == pytest.approx(-1 / 6 - 4.0)


class TestLHCoefficients:
    def test_self_expansion(self):
        # f equal to the n = 0 basis element: c_0 = 1, the rest vanish.
        for (nu0, mu) in ((-1 / 6, 0.25), (0.1, 1 / 3)):
            spec = ExpansionSpec(nu0=nu0, mu=mu, N=2,
                                 f=lambda z: ferrers_P(nu0, mu, z))
            exp = lh_coefficients(spec)
            assert exp.basis == "ferrers"
            for n in range(-2, 3):
                want = 1.0 if n == 0 else 0.0
                assert abs(exp.coefficients[n] - want) <= 1e-7, (nu0, mu, n)

    def test_denominators_match_diagonal_law(self):
        spec = ExpansionSpec(nu0=-1 / 6, mu=0.25, N=8, f=lambda z: z)
        exp = lh_coefficients(spec)
        for n in range(-8, 9):
            want = lh_normalization(spec.degree(n))
            assert abs(exp.denominators[n].value - want) <= 5e-9 * max(1.0, abs(want))

    def test_linear_function_partial_sums_converge(self):
        # f(z) = z on the (nu0, mu) = (-1/6, 1/4) family, N = 8: evaluated
        # at z = 0.2 the truncation error decreases as terms are added,
        # down to a bilateral-tail floor of a few 1e-3.
        spec = ExpansionSpec(nu0=-1 / 6, mu=0.25, N=8, f=lambda z: z)
        exp = lh_coefficients(spec)
        err = {upto: abs(exp.partial_sum(0.2, upto) - 0.2)
               for upto in (0, 2, 4, 8)}
        assert err[2] < err[0]
        assert err[4] < err[2]
        assert err[8] < err[0] / 10.0
        assert err[8] < 5e-3

    def test_degenerate_denominator_rejected(self):
        spec = ExpansionSpec(nu0=0.5 + 1e-9, mu=0.25, N=0, f=lambda z: z)
        with pytest.raises(ValueError):
            lh_coefficients(spec)

    def test_dihedral_denominators_constant(self):
        # mu = -1/2, alpha = 0.3: every diagonal pairing equals
        # (pi/2) sin(alpha pi).
        alpha = 0.3
        spec = ExpansionSpec(nu0=alpha - 0.5, mu=-0.5, N=3, f=lambda z: z)
        exp = lh_coefficients(spec)
        assert exp.basis == "dihedral-trig"
        want = (math.pi / 2.0) * math.sin(alpha * math.pi)
        for n in range(-3, 4):
            assert abs(exp.denominators[n].value - want) <= 1e-9

    def test_dihedral_self_expansion(self):
        alpha = 0.3
        spec0 = ExpansionSpec(nu0=alpha - 0.5, mu=-0.5, N=3, f=lambda z: z)
        probe = lh_coefficients(spec0)
        spec = ExpansionSpec(nu0=alpha - 0.5, mu=-0.5, N=3,
                             f=lambda z: probe.basis_function(0, z))
        exp = lh_coefficients(spec)
        for n in range(-3, 4):
            want = 1.0 if n == 0 else 0.0
            assert abs(exp.coefficients[n] - want) <= 1e-7

    def test_dihedral_integer_alpha_rejected(self):
        with pytest.raises(ValueError):
            lh_coefficients(ExpansionSpec(nu0=0.5 - 1e-14, mu=-0.5, N=1,
                                          f=lambda z: z))

    def test_dihedral_agrees_with_w_expansion_at_alpha_half(self):
        spec = ExpansionSpec(nu0=0.0, mu=-0.5, N=4, f=abs)
        exp = lh_coefficients(spec, breakpoints=(0.0,))
        w = w_expansion(abs, 4, breakpoints=(0.0,))
        for n in range(-4, 5):
            assert abs(exp.coefficients[n] - w.bilateral[n]) <= 1e-12


class TestDihedralCrossIntegral:
    # int_0^pi sin(a t) cos(a'(pi - t)) dt vanishes when a - a' is a
    # nonzero even integer; generically it equals
    # a (cos(a' pi) - cos(a pi)) / (a^2 - a'^2).
    def test_even_gap_vanishes(self):
        for (al, ap) in ((2.3, 0.3), (0.3, 2.3), (4.3, 2.3), (1.25, 3.25)):
            r = singular_quad(
                lambda t: math.sin(al * t) * math.cos(ap * (math.pi - t)),
                0.0, math.pi)
            assert abs(r.value) <= 1e-12, (al, ap)

    def test_generic_closed_form(self):
        for (al, ap) in ((0.37, 1.91), (0.3, 0.9), (1.25, 0.4)):
            r = singular_quad(
                lambda t: math.sin(al * t) * math.cos(ap * (math.pi - t)),
                0.0, math.pi)
            want = al * (math.cos(ap * math.pi) - math.cos(al * math.pi)) \
                / (al ** 2 - ap ** 2)
            assert abs(r.value - want) <= 1e-12

    def test_diagonal_value(self):
        for al in (0.3, 1.3, 2.7):
            r = singular_quad(
                lambda t: math.sin(al * t) * math.cos(al * (math.pi - t)),
                0.0, math.pi)
            assert abs(r.value - (math.pi / 2.0) * math.sin(al * math.pi)) <= 1e-12


class TestChebyshevW:
    def test_w0_is_one(self):
        for z in (-1.0, -0.3, 0.0, 0.7, 1.0):
            assert chebyshev_w(0, z) == pytest.approx(1.0, abs=1e-14)

    def test_endpoint_values(self):
        for j in range(6):
            assert chebyshev_w(j, 1.0) == pytest.approx(2.0 * j + 1.0, abs=1e-13)
            assert chebyshev_w(j, -1.0) == pytest.approx(float((-1) ** j), abs=1e-13)

    def test_first_kind_relation(self):
        # W_j(z) = (-1)^j u^{-1} T_{2j+1}(u) with z = 1 - 2u^2, at j=3, u=0.4.
        u = 0.4
        z = 1.0 - 2.0 * u * u
        t7 = math.cos(7.0 * math.acos(u))
        assert abs(chebyshev_w(3, z) - (-1) ** 3 * t7 / u) <= 1e-12

    def test_exponential_sum_identity(self):
        # W_j(cos theta) = sum_{k=-j}^{j} e^{i k theta}.
        theta = 1.1
        for j in range(5):
            want = sum(math.cos(k * theta) for k in range(-j, j + 1))
            assert abs(chebyshev_w(j, math.cos(theta)) - want) <= 1e-12

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            chebyshev_w(-1, 0.0)
        with pytest.raises(ValueError):
            chebyshev_w(2, 1.5)


class TestPinskyBasis:
    def test_reduces_to_w_at_alpha_half(self):
        theta = 0.8
        psi, chi = pinsky_basis(2, 0.5, theta)
        assert abs(psi - chebyshev_w(4, math.cos(theta))) <= 1e-13
        assert abs(chi - chebyshev_w(4, math.cos(theta))) <= 1e-13

    def test_negative_index_sign(self):
        theta = 1.3
        for n in (-1, -2):
            psi, _ = pinsky_basis(n, 0.5, theta)
            assert abs(psi + chebyshev_w(-2 * n - 1, math.cos(theta))) <= 1e-13

    def test_cosine_partner_hypergeometric_form(self):
        # psi-hat is 2 beta 2F1(1/2 - beta, 1/2 + beta; 3/2; sin^2(theta/2)).
        from fraclegendre.oracle import gauss_2f1
        alpha, n, theta = 0.3, 1, 1.1
        beta = 2 * n + alpha
        psi, _ = pinsky_basis(n, alpha, theta)
        s2 = math.sin(0.5 * theta) ** 2
        want = 2.0 * beta * gauss_2f1(0.5 - beta, 0.5 + beta, 1.5, s2)
        assert abs(psi - want) <= 1e-12 * max(1.0, abs(want))

    def test_domain_errors(self):
        for theta in (0.0, math.pi, -0.3, 4.0):
            with pytest.raises(ValueError):
                pinsky_basis(1, 0.3, theta)


class TestWExpansion:
    def test_constant_reconstructs_exactly(self):
        w = w_expansion(lambda z: 1.0, 4)
        assert abs(w.bilateral[0] - 1.0) <= 1e-12
        for n in range(-4, 5):
            if n != 0:
                assert abs(w.bilateral[n]) <= 1e-12
        for z in (-1.0, -0.4, 0.37, 1.0):
            assert abs(w.reconstruct(z) - 1.0) <= 1e-12

    def test_abs_error_decreases(self):
        # Max error over interior and endpoint probes drops monotonically
        # from N=16 to N=128 (the kink at 0 is a declared breakpoint).
        points = (-1.0, -0.5, 0.3, 1.0)
        errs = []
        for n_trunc in (16, 32, 64, 128):
            w = w_expansion(abs, n_trunc, breakpoints=(0.0,))
            errs.append(max(abs(w.reconstruct(z) - abs(z)) for z in points))
        assert errs[1] < errs[0]
        assert errs[2] < errs[1]
        assert errs[3] < errs[2]
        assert errs[3] <= 1e-4

    def test_step_midpoint_value(self):
        # Jump at 0: the series converges to the mean of the one-sided
        # limits.
        step = lambda z: 0.0 if z < 0.0 else 1.0
        w = w_expansion(step, 128, breakpoints=(0.0,))
        assert abs(w.reconstruct(0.0) - 0.5) <= 0.05

    def test_step_coefficients_match_analytic_law(self):
        # Cosine moments of the step are a_0 = pi/2, a_k = sin(k pi/2)/k;
        # each bilateral coefficient is (a_{|2n|} - a_{|2n+1|})/pi.
        step = lambda z: 0.0 if z < 0.0 else 1.0
        w = w_expansion(step, 16, breakpoints=(0.0,))
        for n in range(-16, 17):
            a2n = math.pi / 2.0 if n == 0 else math.sin(abs(2 * n) * math.pi / 2.0) / abs(2 * n)
            k = abs(2 * n + 1)
            want = (a2n - math.sin(k * math.pi / 2.0) / k) / math.pi
            assert abs(w.bilateral[n] - want) <= 1e-10, n

    def test_unilateral_fold(self):
        w = w_expansion(lambda z: z * z, 3)
        assert len(w.unilateral) == 7
        # Index n >= 0 lands on W_{2n}; n < 0 on -W_{-2n-1}.
        assert w.unilateral[4] == pytest.approx(w.bilateral[2], abs=1e-15)
        assert w.unilateral[1] == pytest.approx(-w.bilateral[-1], abs=1e-15)

    def test_negative_truncation_rejected(self):
        with pytest.raises(ValueError):
            w_expansion(abs, -1)
