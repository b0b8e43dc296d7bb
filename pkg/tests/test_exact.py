"""Exact arithmetic layer: Pochhammer, polynomials, rational functions, invariant maps."""

import math
from fractions import Fraction

import pytest

from fraclegendre.exact import (
    RationalFunction,
    RationalPoly,
    gamma_fraction,
    invariant_polys,
    map_R,
    map_S,
    map_T,
    pochhammer,
)

F = Fraction
U = RationalPoly((0, 1))


def test_pochhammer_frozen_values():
    assert pochhammer(F(5, 12), 0) == 1
    assert pochhammer(F(5, 12), -1) == F(-12, 7)
    assert pochhammer(F(1, 4), 2) == F(5, 16)
    assert pochhammer(3, 3) == 60


def test_pochhammer_zero_factor_raises():
    # (d)_{-k} with d-1, ..., d+k crossing zero is undefined
    with pytest.raises(ZeroDivisionError):
        pochhammer(2, -3)


def test_pochhammer_composition_identity():
    # (d)_k (d+k)_j = (d)_{k+j} across both signs
    for d in (F(1, 4), F(5, 12), F(13, 12)):
        for k in range(-5, 6):
            for j in range(-5, 6):
                assert pochhammer(d, k) * pochhammer(d + k, j) == pochhammer(d, k + j)


def test_invariant_polys_coefficients():
    p_v, p_e, p_f = invariant_polys()
    assert p_v.degree == 5 and p_e.degree == 3 and p_f.degree == 2
    assert p_v.coeffs == (0, 1, -4, 6, -4, 1)
    assert p_e.coeffs == (1, -33, -33, 1)
    assert p_f.coeffs == (1, 14, 1)
    # values at u = 1 (face invariant is 16, forced by the syzygy)
    assert p_v.eval(1) == 0
    assert p_e.eval(1) == -64
    assert p_f.eval(1) == 16


def test_syzygy_is_exactly_zero():
    p_v, p_e, p_f = invariant_polys()
    syz = p_e * p_e - p_f ** 3 + 108 * p_v
    assert syz.is_zero()


def test_poly_divmod_roundtrip():
    a = RationalPoly((3, 0, -2, 1, 7))
    b = RationalPoly((1, 2, 1))
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_rational_function_canonical_form():
    f = RationalFunction((U - 1) * (U + 2), (U - 1) * 2)
    # cancelled and denominator normalized to monic (here constant 1)
    assert f.is_poly()
    assert f.eval(F(3)) == F(5, 2)
    g = RationalFunction(U + 1, 3 * U + 6)
    assert g.den.coeffs[-1] == 1
    assert g.eval(0) == F(1, 6)


def test_rational_function_mul_div_roundtrip():
    f = RationalFunction(U ** 3 - 2 * U + 1, U ** 2 + 1)
    g = RationalFunction(5 * U - 7, U + 11)
    assert (f * g) / g == f
    assert (f / g) * g == f
    h = f - f
    assert h.is_zero()


def test_rational_function_pole_eval():
    f = RationalFunction(RationalPoly((1,)), U - 1)
    with pytest.raises(ZeroDivisionError):
        f.eval(1)


def test_substitute_inverse():
    f = RationalFunction(U ** 2 + 3 * U, U + 5)
    u = F(7, 3)
    assert f.substitute_inverse().eval(u) == f.eval(1 / u)


def test_map_R_exact_values():
    assert map_R(0) == 0
    assert map_R(F(1)) == 0
    _, p_e, p_f = invariant_polys()
    u = F(1, 3)
    assert map_R(u) == 1 - p_f.eval(u) ** 3 / F(p_e.eval(u)) ** 2


def test_map_poles():
    with pytest.raises(ZeroDivisionError):
        map_T(-1)
    with pytest.raises(ZeroDivisionError):
        map_T(-1.0)
    # p_e(u) = 0 has a root in (0, 1/33); bracket it and hit it via Fraction arithmetic
    _, p_e, _ = invariant_polys()
    # rational pole test: construct map_R argument from a float root estimate instead
    root = 0.030303
    r = root
    for _ in range(60):
        r = r - p_e.eval(r) / p_e.derivative().eval(r)
    with pytest.raises(ZeroDivisionError):
        map_R(r)


def test_triple_angle_correspondence():
    # if T(u) = tanh^2(xi/3) then R(u) = tanh^2(xi), checked at xi = 1
    xi = 1.0
    tau = math.tanh(xi / 3) ** 2
    # solve tau u^2 + (2 tau + 12) u + tau = 0 for the root in (-1, 0)
    disc = (2 * tau + 12) ** 2 - 4 * tau * tau
    # the two roots are reciprocal; compute the large one and invert (stable)
    u = (2 * tau) / (-(2 * tau + 12) - math.sqrt(disc))
    assert abs(map_T(u) - tau) < 1e-15
    assert abs(map_R(u) - math.tanh(xi) ** 2) < 1e-12


def test_map_S_exact_and_float():
    assert map_S(0) == 0
    t = F(1, 10)
    exact = map_S(t)
    assert isinstance(exact, Fraction)
    assert abs(map_S(0.1) - float(exact)) < 1e-15


def test_gamma_fraction():
    assert abs(gamma_fraction(F(1, 2)) - math.sqrt(math.pi)) < 1e-15
    assert gamma_fraction(5) == 24
    with pytest.raises(ValueError):
        gamma_fraction(0)
    with pytest.raises(ValueError):
        gamma_fraction(-3)
