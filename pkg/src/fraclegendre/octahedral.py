"""Octahedral rational functions r_n^m: exact generation by three-term
recurrence, structural invariants, conjugates, coefficient recurrences,
hypergeometric rows, and the eight first-order differential shifts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    RationalFunction,
    RationalPoly,
    invariant_polys,
    pochhammer,
)

F = Fraction
_P_V, _P_E, _P_F = invariant_polys()
_U = RationalPoly((0, 1))
_ONE_MINUS_U = RationalPoly((1, -1))
_U_MINUS_ONE = RationalPoly((-1, 1))


def expected_structure(n, m):
    """Quadrant structure (pow_one_minus_u, pow_pf, numer degree) for index (n, m)."""
    if n >= 0 and m >= 0:
        return 0, 0, 3 * n + 2 * m
    if n >= 0:
        mp = -m - 1
        return 3 + 4 * mp, 0, 1 + 3 * n + 2 * mp
    if m >= 0:
        np_ = -n - 1
        return 0, 2 + 3 * np_, 1 + 3 * np_ + 2 * m
    np_, mp = -n - 1, -m - 1
    return 3 + 4 * mp, 2 + 3 * np_, 2 + 3 * np_ + 2 * mp


def d_coeff(n, m):
    """Leading coefficient of r_n^m at u -> infinity, an exact rational."""
    return (F(-1) ** (m + n) * F(3) ** (3 * m)
            * pochhammer(F(5, 12), m - n) * pochhammer(F(13, 12), m + n)
            / (pochhammer(F(1, 4), m) * pochhammer(F(5, 4), m)))


@dataclass(frozen=True)
class OctahedralFunction:
    """r_n^m in factored form numer(u) * (1-u)^(-pow_one_minus_u) * p_f(u)^(-pow_pf).

    numer(0) = 1 and the (pow_one_minus_u, pow_pf, degree) triple is pinned to
    the quadrant of (n, m); construction fails loudly on any violation.
    """

    index: tuple
    numer: RationalPoly
    pow_one_minus_u: int
    pow_pf: int

    @classmethod
    def from_rational_function(cls, index, rf):
        """Factor a canonical rational function into octahedral form, verifying structure."""
        n, m = index
        num, den = rf.num, rf.den
        a = 0
        while not den.is_zero() and den.degree >= 1 and den.eval(1) == 0:
            den = den.exact_div(_U_MINUS_ONE)
            a += 1
        b = 0
        while den.degree >= 2:
            q, r = den.divmod(_P_F)
            if not r.is_zero():
                raise RuntimeError(f"r_{n}^{m}: denominator has a factor outside (u-1)^a p_f^b")
            den = q
            b += 1
        if den != RationalPoly((1,)):
            raise RuntimeError(f"r_{n}^{m}: denominator residue {den!r} is not 1")
        numer = num * F(-1) ** a
        ea, eb, edeg = expected_structure(n, m)
        if (a, b, numer.degree) != (ea, eb, edeg):
            raise RuntimeError(
                f"r_{n}^{m}: structure (a={a}, b={b}, deg={numer.degree}) "
                f"!= expected ({ea}, {eb}, {edeg})")
        if numer.eval(0) != 1:
            raise RuntimeError(f"r_{n}^{m}: numerator not normalized, numer(0) != 1")
        if numer.coeffs[-1] * F(-1) ** a != d_coeff(n, m):
            raise RuntimeError(f"r_{n}^{m}: leading coefficient != d_n^m")
        return cls(index, numer, a, b)

    def as_rational_function(self):
        den = _U_MINUS_ONE ** self.pow_one_minus_u * _P_F ** self.pow_pf
        return RationalFunction(self.numer * F(-1) ** self.pow_one_minus_u, den)

    def eval(self, u):
        """Horner evaluation; raises ZeroDivisionError at a pole of the factored form."""
        base = self.numer.eval(u)
        if self.pow_one_minus_u:
            omu = 1 - u
            if omu == 0:
                raise ZeroDivisionError(f"r_{self.index[0]}^{self.index[1]} pole at u = 1")
            base = base / omu ** self.pow_one_minus_u
        if self.pow_pf:
            pf = _P_F.eval(u)
            if pf == 0:
                raise ZeroDivisionError(f"r_{self.index[0]}^{self.index[1]} pole at p_f zero")
            base = base / pf ** self.pow_pf
        return base

    def __call__(self, u):
        return self.eval(u)


# Seed numerators, frozen from the defining sequence (exact integers over small
# denominators). Keys are (n, m).
_SEED_COEFFS = {
    (0, 0): (1,),
    (0, 1): (1, -26, -39),
    (1, 0): (1, -39, F(-195, 7), F(13, 7)),
    (1, 1): (1, 175, -150, 3550, 325, 195),
}

_cache = {}


def _put(index, rf):
    if index not in _cache:
        _cache[index] = OctahedralFunction.from_rational_function(index, rf)
    return _cache[index]


def seed_functions():
    """The four generation seeds r_0^0, r_0^1, r_1^0, r_1^1."""
    out = {}
    for idx, coeffs in _SEED_COEFFS.items():
        out[idx] = _put(idx, RationalFunction(RationalPoly(coeffs)))
    return out


def _rf(index):
    return _cache[index].as_rational_function()


def _march_m_up(n, m_hi):
    """Fill cache entries (n, 2..m_hi) from (n, 0) and (n, 1)."""
    for m in range(1, m_hi):
        if (n, m + 1) in _cache:
            continue
        c = F(3) * (12 * m - 12 * n - 7) * (12 * m + 12 * n + 1) / ((4 * m - 3) * (4 * m + 1))
        nxt = _P_E * _rf((n, m)) + c * _P_V * _rf((n, m - 1))
        _put((n, m + 1), nxt)


def _march_m_down(n, m_lo):
    """Fill cache entries (n, -1..m_lo) from (n, 0) and (n, 1)."""
    for m in range(0, m_lo, -1):
        if (n, m - 1) in _cache:
            continue
        c = F((4 * m - 3) * (4 * m + 1), 3 * (12 * m - 12 * n - 7) * (12 * m + 12 * n + 1))
        prv = c * (_rf((n, m + 1)) - _P_E * _rf((n, m))) / RationalFunction(_P_V)
        _put((n, m - 1), prv)


def _march_n(n_target, m):
    """Fill cache along the n direction at fixed m, starting from n = 0, 1."""
    pf3 = RationalFunction(_P_F ** 3)
    for n in range(1, n_target):
        if (n + 1, m) in _cache:
            continue
        nxt = (8 * (3 * n + 1) * _P_E * _rf((n, m))
               - (12 * n + 12 * m + 1) * pf3 * _rf((n - 1, m))) / (12 * n - 12 * m + 7)
        _put((n + 1, m), nxt)
    for n in range(0, n_target, -1):
        if (n - 1, m) in _cache:
            continue
        prv = (8 * (3 * n + 1) * _P_E * _rf((n, m))
               - (12 * n - 12 * m + 7) * _rf((n + 1, m))) / ((12 * n + 12 * m + 1) * pf3)
        _put((n - 1, m), prv)


def generate(n, m):
    """r_n^m for any integer index pair, generated exactly and cached write-once."""
    if (n, m) in _cache:
        return _cache[(n, m)]
    seed_functions()
    for n0 in (0, 1):
        if m >= 0:
            _march_m_up(n0, max(m, 1))
        else:
            _march_m_down(n0, m)
    _march_n(n, m)
    return _cache[(n, m)]


def conjugate(n, m):
    """The conjugate function u^(3n+2m) r_n^m(1/u) / d_n^m as a RationalFunction."""
    r = generate(n, m).as_rational_function()
    return r.substitute_inverse().mul_monomial(3 * n + 2 * m) / d_coeff(n, m)


def scaled(n, m):
    """r_n^m / d_n^m as a RationalFunction (the hat-normalized companion)."""
    return generate(n, m).as_rational_function() / d_coeff(n, m)


def eval_scaled(n, m, u):
    """Evaluate r_n^m(u) / d_n^m; float in, float out."""
    return generate(n, m).eval(u) / float(d_coeff(n, m))


def coeffs_via_recurrence(n, m):
    """Numerator coefficients of r_n^m for n, m >= 0 from the third-order contiguous
    coefficient recurrence; must terminate at degree 3n + 2m."""
    if n < 0 or m < 0:
        raise ValueError("coefficient recurrence applies to n, m >= 0 only")
    deg = 3 * n + 2 * m
    a = {-2: F(0), -1: F(0), 0: F(1)}
    for k in range(0, deg + 4):
        bk = F(k * (52 * k - 36 * m - 168 * n - 13) - (2 * m - 9 * n) * (12 * m + 12 * n + 1))
        ck = -F((k - 1) * (52 * k - 276 * m - 144 * n - 65) + 2 * (14 * m + 3 * n) * (12 * m + 12 * n + 1))
        dk = -F((k - 2 * m - 3 * n - 2) * (4 * k - 12 * m - 12 * n - 9))
        a[k + 1] = -(bk * a[k] + ck * a[k - 1] + dk * a[k - 2]) / ((k + 1) * (4 * k - 4 * m + 3))
    for k in range(deg + 1, deg + 5):
        if a[k] != 0:
            raise RuntimeError(f"coefficient recurrence for r_{n}^{m} failed to terminate")
    return [a[k] for k in range(deg + 1)]


def coeffs_via_heun(n):
    """Coefficients of r_n^0 from the second-order recurrence available at m = 0."""
    if n < 0:
        raise ValueError("second-order coefficient recurrence applies to n >= 0 only")
    deg = 3 * n
    a = {-1: F(0), 0: F(1)}
    for k in range(0, deg + 4):
        bk = F(14 * k * (4 * k - 12 * n - 1) + 9 * n * (12 * n + 1))
        ck = F((k - 3 * n - 1) * (4 * k - 12 * n - 5))
        a[k + 1] = -(bk * a[k] + ck * a[k - 1]) / ((k + 1) * (4 * k + 3))
    for k in range(deg + 1, deg + 5):
        if a[k] != 0:
            raise RuntimeError(f"second-order coefficient recurrence for r_{n}^0 failed to terminate")
    return [a[k] for k in range(deg + 1)]


def hypergeometric_row(m):
    """r_0^m for any integer m from its terminating hypergeometric representation."""
    if m >= 0:
        coeffs = []
        for k in range(2 * m + 1):
            coeffs.append(pochhammer(-2 * m, k) * pochhammer(F(-1, 4) - 3 * m, k)
                          / (pochhammer(F(3, 4) - m, k) * math.factorial(k)))
        return _put((0, m), RationalFunction(RationalPoly(coeffs)))
    mp = -m - 1
    coeffs = []
    for k in range(2 * mp + 2):
        coeffs.append(pochhammer(-1 - 2 * mp, k) * pochhammer(F(-1, 4) - mp, k)
                      / (pochhammer(F(7, 4) + mp, k) * math.factorial(k)))
    rf = RationalFunction(RationalPoly(coeffs), _ONE_MINUS_U ** (3 + 4 * mp))
    return _put((0, m), rf)


# Differential shift table, keyed by (dn, dm). Entries:
# (sigma_v, sigma_e, sigma_f, eps_v, eps_e, eps_f, K), all as functions of (n, m).
def _shift_table(n, m):
    return {
        (0, 1): (F(-1 - 4 * m), F(0), F(5, 8) + F(3, 2) * m - F(3, 2) * n,
                 1, 0, 1, F(-(1 + 4 * m))),
        (0, -1): (F(0), F(0), F(-1, 8) - F(3, 2) * m - F(3, 2) * n,
                  -3, 0, 1, F(3 * (1 + 12 * m + 12 * n) * (7 - 12 * m + 12 * n), 4 * m - 3)),
        (1, 0): (F(7, 6) - 2 * m + 2 * n, F(0), F(-1 - 3 * n),
                 1, 0, 1, F(7 - 12 * m + 12 * n, 6)),
        (-1, 0): (F(-1, 6) - 2 * m - 2 * n, F(0), F(0),
                  1, 0, -2, F(-(1 + 12 * m + 12 * n), 6)),
        (1, 1): (F(-1 - 4 * m), F(13, 12) + m + n, F(-1 - 3 * n),
                 1, 1, 1, F(-(1 + 4 * m))),
        (-1, -1): (F(0), F(-1, 12) - m - n, F(0),
                   -3, 1, -2, F(3 * (1 + 12 * m + 12 * n) * (-11 + 12 * m + 12 * n), 4 * m - 3)),
        (-1, 1): (F(-1 - 4 * m), F(5, 12) + m - n, F(0),
                  1, 1, -2, F(-(1 + 4 * m))),
        (1, -1): (F(0), F(7, 12) - m + n, F(-1 - 3 * n),
                  -3, 1, 1, F(3 * (-7 + 12 * m - 12 * n) * (-19 + 12 * m - 12 * n), 4 * m - 3)),
    }


def apply_diff_recurrence(n, m, delta):
    """Shift r_n^m by delta = (dn, dm) through its first-order differential relation.

    All fractional powers of the invariants must cancel; any residue is a
    consistency error. Returns the shifted function in octahedral form.
    """
    if delta not in _shift_table(0, 0):
        raise ValueError(f"unknown shift {delta}; expected a unit or diagonal step")
    sv, se, sf, ev, ee, ef, K = _shift_table(n, m)[delta]
    if (3 + ev) % 4 != 0:
        raise RuntimeError(f"shift {delta}: fractional power of p_v fails to cancel")
    if K == 0:
        raise RuntimeError(f"shift {delta}: vanishing normalization at (n, m) = ({n}, {m})")
    r = generate(n, m).as_rational_function()
    log_deriv = (sv / 4 * RationalFunction(_P_V.derivative(), _P_V)
                 + se * RationalFunction(_P_E.derivative(), _P_E)
                 + sf * RationalFunction(_P_F.derivative(), _P_F))
    core = log_deriv * r + r.derivative()
    pre = RationalFunction(_U ** ((3 + ev) // 4) * _ONE_MINUS_U ** max(ev, 0),
                           _ONE_MINUS_U ** max(-ev, 0))
    pe_pow = RationalFunction(_P_E) ** ee
    pf_pow = RationalFunction(_P_F) ** ef
    shifted = (4 / K) * pre * pe_pow * pf_pow * core
    target = (n + delta[0], m + delta[1])
    result = OctahedralFunction.from_rational_function(target, shifted)
    cached = generate(*target)
    if result.as_rational_function() != cached.as_rational_function():
        raise RuntimeError(f"shift {delta} at ({n}, {m}) disagrees with the recurrence route")
    return result


def three_term_residual_m(n, m):
    """Exact residual of the order-direction three-term relation at (n, m); zero when valid."""
    lhs = ((4 * m - 3) * (4 * m + 1) * _rf_any(n, m + 1)
           - (4 * m - 3) * (4 * m + 1) * _P_E * _rf_any(n, m)
           - 3 * (12 * m - 12 * n - 7) * (12 * m + 12 * n + 1) * _P_V * _rf_any(n, m - 1))
    return lhs


def three_term_residual_n(n, m):
    """Exact residual of the degree-direction three-term relation at (n, m)."""
    return ((12 * n - 12 * m + 7) * _rf_any(n + 1, m)
            - 8 * (3 * n + 1) * _P_E * _rf_any(n, m)
            + (12 * n + 12 * m + 1) * RationalFunction(_P_F ** 3) * _rf_any(n - 1, m))


def three_term_residual_diag1(n, m):
    """Exact residual of the first diagonal three-term relation at (n, m)."""
    pf3 = RationalFunction(_P_F ** 3)
    return (3 * (4 * m - 3) * (4 * m + 1) * _rf_any(n + 1, m + 1)
            - (4 * m - 3) * ((12 * m + 12 * n + 7) * pf3 - 4 * (3 * n + 1) * RationalFunction(_P_E ** 2)) * _rf_any(n, m)
            + 9 * (12 * m + 12 * n + 1) * (12 * m + 12 * n - 11) * _P_V * pf3 * _rf_any(n - 1, m - 1))


def three_term_residual_diag2(n, m):
    """Exact residual of the second diagonal three-term relation at (n, m)."""
    pf3 = RationalFunction(_P_F ** 3)
    return (3 * (4 * m - 3) * (4 * m + 1) * pf3 * _rf_any(n - 1, m + 1)
            - (4 * m - 3) * ((12 * m - 12 * n - 1) * pf3 + 4 * (3 * n + 1) * RationalFunction(_P_E ** 2)) * _rf_any(n, m)
            + 9 * (12 * m - 12 * n - 7) * (12 * m - 12 * n - 19) * _P_V * _rf_any(n + 1, m - 1))


def _rf_any(n, m):
    return generate(n, m).as_rational_function()
