"""Closed-form trigonometric evaluators for the parametrized families.

Each function here turns one of the parametric closed forms into a float:
the octahedral first-kind formulas, the two tetrahedral classes, the
Mehler-Dirichlet integral values, and the dihedral/cyclic Jacobi-polynomial
forms.  The heavy lifting happens in :mod:`fraclegendre.octahedral`
(exact rational data) and :mod:`fraclegendre.oracle` (Jacobi polynomials);
this module only assembles prefactors and trigonometric arguments.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from . import octahedral
from .exact import pochhammer
from .oracle import inv_gamma, jacobi_P, poch_f

__all__ = [
    "TrigPair",
    "trig_pair",
    "oct_legendre_P",
    "oct_ferrers_P",
    "mehler_integral",
    "tetra2_Qhat",
    "tetra2_P_legendre",
    "tetra2_P_ferrers",
    "tetra3_eval",
    "cyclic_P",
    "dihedral_eval",
    "SQRT_SQRT3_PLUS_1",
    "SQRT_SQRT3_MINUS_1",
]

_SQRT3 = math.sqrt(3.0)
SQRT_SQRT3_PLUS_1 = math.sqrt(_SQRT3 + 1.0)
SQRT_SQRT3_MINUS_1 = math.sqrt(_SQRT3 - 1.0)


@dataclass(frozen=True)
class TrigPair:
    """Branch pair (plus, minus) for one of the kinds A(xi), B(theta), C(xi)."""

    kind: str
    plus: float
    minus: float

    @property
    def ratio_minus_over_plus(self) -> float:
        return self.minus / self.plus

    @property
    def ratio_plus_over_minus(self) -> float:
        return self.plus / self.minus


def trig_pair(kind: str, var: float) -> TrigPair:
    """Evaluate the branch pair; the radical form is stable at the endpoints.

    A(xi):  +-cosh(xi/3) + sqrt((4 cosh^2(xi/3) - 1)/3),  xi >= 0
    B(theta):  cos(theta/3) +- sqrt((4 cos^2(theta/3) - 1)/3),  0 <= theta <= pi
    C(xi):  +-sinh(xi/3) + sqrt((4 sinh^2(xi/3) + 1)/3),  any xi
    """
    if kind == "A":
        if var < 0.0:
            raise ValueError("A pair needs xi >= 0")
        c = math.cosh(var / 3.0)
        root = math.sqrt((4.0 * c * c - 1.0) / 3.0)
        return TrigPair("A", c + root, -c + root)
    if kind == "B":
        if not 0.0 <= var <= math.pi:
            raise ValueError("B pair needs 0 <= theta <= pi")
        c = math.cos(var / 3.0)
        root = math.sqrt(max((4.0 * c * c - 1.0) / 3.0, 0.0))
        return TrigPair("B", c + root, c - root)
    if kind == "C":
        s = math.sinh(var / 3.0)
        root = math.sqrt((4.0 * s * s + 1.0) / 3.0)
        return TrigPair("C", s + root, -s + root)
    raise ValueError("kind must be one of 'A', 'B', 'C'")


def _poch_float(d: Fraction, k: int) -> float:
    """Exact Pochhammer (supports negative k) pushed to float."""
    return float(pochhammer(d, k))


def oct_legendre_P(n: int, m: int, xi: float, sign: int = 1) -> float:
    """First-kind Legendre value at cosh(xi), degree -1/6+n, order +-(1/4+m)."""
    if xi <= 0.0:
        raise ValueError("oct_legendre_P needs xi > 0")
    pair = trig_pair("A", xi)
    expo = 0.25 + 3.0 * m + 3.0 * n
    sh = math.sinh(xi) ** (-0.25 - m)
    if sign >= 0:
        pref = 2.0 ** (-2 * m - 3 * n) * inv_gamma(0.75 - m)
        return pref * sh * pair.plus ** expo * octahedral.generate(n, m).eval(
            -pair.ratio_minus_over_plus
        )
    pref = (
        (-1.0) ** n
        * 2.0 ** (-2 * m - 3 * n)
        * 3.0 ** (0.75 + 3 * m)
        * inv_gamma(1.25 + m)
    )
    return pref * sh * pair.minus ** expo * octahedral.eval_scaled(
        n, m, -pair.ratio_plus_over_minus
    )


def oct_ferrers_P(n: int, m: int, theta: float, sign: int = 1) -> float:
    """First-kind Ferrers value at cos(theta), degree -1/6+n, order +-(1/4+m)."""
    if not 0.0 < theta < math.pi:
        raise ValueError("oct_ferrers_P needs 0 < theta < pi")
    pair = trig_pair("B", theta)
    expo = 0.25 + 3.0 * m + 3.0 * n
    sh = math.sin(theta) ** (-0.25 - m)
    if sign >= 0:
        pref = 2.0 ** (-2 * m - 3 * n) * inv_gamma(0.75 - m)
        return pref * sh * pair.plus ** expo * octahedral.generate(n, m).eval(
            pair.ratio_minus_over_plus
        )
    pref = 2.0 ** (-2 * m - 3 * n) * 3.0 ** (0.75 + 3 * m) * inv_gamma(1.25 + m)
    return pref * sh * pair.minus ** expo * octahedral.eval_scaled(
        n, m, pair.ratio_plus_over_minus
    )


def mehler_integral(n: int, m: int, var: float, kind: str) -> float:
    """Closed form of the Mehler-Dirichlet integral with cos/cosh((1/3+n)t)
    against (cos t - cos theta)^(m-1/4) (circular) or the hyperbolic twin.
    """
    if m < 0:
        raise ValueError("mehler_integral needs m >= 0")
    const = (
        math.sqrt(math.pi / 2.0)
        * 2.0 ** (-2 * m - 3 * n)
        * 3.0 ** (0.75 + 3 * m)
        * math.gamma(0.75 + m)
        / math.gamma(1.25 + m)
    )
    expo = 0.25 + 3.0 * m + 3.0 * n
    if kind == "hyperbolic":
        if var <= 0.0:
            raise ValueError("hyperbolic form needs xi > 0")
        pair = trig_pair("A", var)
        return (
            (-1.0) ** n
            * const
            * pair.minus ** expo
            * octahedral.eval_scaled(n, m, -pair.ratio_plus_over_minus)
        )
    if kind == "circular":
        if not 0.0 < var < math.pi:
            raise ValueError("circular form needs 0 < theta < pi")
        pair = trig_pair("B", var)
        return const * pair.minus ** expo * octahedral.eval_scaled(
            n, m, pair.ratio_plus_over_minus
        )
    raise ValueError("kind must be 'hyperbolic' or 'circular'")


def _tetra2_common(n: int, m: int, which: str) -> float:
    """Shared prefactor pieces of the class-II closed forms."""
    quarter = _poch_float(Fraction(1, 4), m)
    if which == "sum":
        return quarter / _poch_float(Fraction(13, 12), m + n) / math.gamma(4.0 / 3.0)
    return quarter / _poch_float(Fraction(5, 12), m - n) / math.gamma(2.0 / 3.0)


def tetra2_Qhat(n: int, m: int, xi: float, row: str = "first") -> float:
    """(2/pi) Q-hat at coth(xi): row 'first' is degree -3/4-m, 'second' is
    degree -1/4+m, both at order -1/3-n."""
    if xi <= 0.0:
        raise ValueError("tetra2_Qhat needs xi > 0")
    pair = trig_pair("A", xi)
    expo = 0.25 + 3.0 * m + 3.0 * n
    common = 2.0 ** (2.75 - 2 * m - 3 * n) * 3.0 ** -0.375 * _tetra2_common(
        n, m, "sum"
    )
    sh = math.sinh(xi) ** (0.25 - m)
    if row == "first":
        bracket = (
            -((-1.0) ** n)
            * SQRT_SQRT3_PLUS_1
            * pair.plus ** expo
            * octahedral.generate(n, m).eval(-pair.ratio_minus_over_plus)
        )
    elif row == "second":
        bracket = (
            (-1.0) ** m
            * SQRT_SQRT3_MINUS_1
            * pair.minus ** expo
            * octahedral.generate(n, m).eval(-pair.ratio_plus_over_minus)
        )
    else:
        raise ValueError("row must be 'first' or 'second'")
    return common * sh * bracket


def tetra2_P_legendre(n: int, m: int, xi: float, sign: int = -1) -> float:
    """First-kind Legendre value at coth(xi), degree -3/4-m, order +-(1/3+n)."""
    if xi <= 0.0:
        raise ValueError("tetra2_P_legendre needs xi > 0")
    pair = trig_pair("A", xi)
    expo = 0.25 + 3.0 * m + 3.0 * n
    sh = math.sinh(xi) ** (0.25 - m)
    r_plus = octahedral.generate(n, m).eval(-pair.ratio_minus_over_plus)
    r_minus = octahedral.generate(n, m).eval(-pair.ratio_plus_over_minus)
    if sign < 0:
        common = (
            (-1.0) ** n
            * 2.0 ** (1.25 - 2 * m - 3 * n)
            * 3.0 ** -0.375
            * _tetra2_common(n, m, "sum")
        )
        bracket = (
            (-1.0) ** n * SQRT_SQRT3_MINUS_1 * pair.plus ** expo * r_plus
            - (-1.0) ** m * SQRT_SQRT3_PLUS_1 * pair.minus ** expo * r_minus
        )
    else:
        common = (
            (-1.0) ** n
            * 2.0 ** (-0.25 - 2 * m - 3 * n)
            * 3.0 ** -0.375
            * _tetra2_common(n, m, "diff")
        )
        bracket = (
            (-1.0) ** n * SQRT_SQRT3_PLUS_1 * pair.plus ** expo * r_plus
            + (-1.0) ** m * SQRT_SQRT3_MINUS_1 * pair.minus ** expo * r_minus
        )
    return common * sh * bracket


def tetra2_P_ferrers(n: int, m: int, xi: float, sign: int = -1) -> float:
    """First-kind Ferrers value at tanh(xi), degree -3/4-m, order +-(1/3+n)."""
    pair = trig_pair("C", xi)
    expo = 0.25 + 3.0 * m + 3.0 * n
    ch = math.cosh(xi) ** (0.25 - m)
    r_plus = octahedral.generate(n, m).eval(-pair.ratio_minus_over_plus)
    r_minus = octahedral.generate(n, m).eval(-pair.ratio_plus_over_minus)
    if sign < 0:
        common = 2.0 ** (1.25 - 2 * m - 3 * n) * 3.0 ** -0.375 * _tetra2_common(
            n, m, "sum"
        )
        bracket = (
            -((-1.0) ** n) * SQRT_SQRT3_MINUS_1 * pair.plus ** expo * r_plus
            + (-1.0) ** m * SQRT_SQRT3_PLUS_1 * pair.minus ** expo * r_minus
        )
    else:
        common = (
            (-1.0) ** n
            * 2.0 ** (-0.25 - 2 * m - 3 * n)
            * 3.0 ** -0.375
            * _tetra2_common(n, m, "diff")
        )
        bracket = (
            (-1.0) ** n * SQRT_SQRT3_PLUS_1 * pair.plus ** expo * r_plus
            + (-1.0) ** m * SQRT_SQRT3_MINUS_1 * pair.minus ** expo * r_minus
        )
    return common * ch * bracket


def tetra3_eval(n: int, xi: float, which: str, sign: int = -1) -> float:
    """Class-III values, reduced to the class-II degree -3/4 row (m = 0).

    which = 'ferrers':  Ferrers P at sqrt(1 - e^{-2 xi}), xi > 0
    which = 'legendre': Legendre P at sqrt(1 + e^{-2 xi}), any xi
    which = 'qhat':     (2/pi) Q-hat at sqrt(1 + e^{2 xi}), any xi
    sign < 0 selects order -1/3-n (degree -1/6+n); sign >= 0 selects order
    +1/3+n (degree -5/6-n).
    """
    two_pow = 2.0 ** (-(1.0 / 3.0) - n) if sign < 0 else 2.0 ** ((1.0 / 3.0) + n)
    if which == "ferrers":
        if xi <= 0.0:
            raise ValueError("the sqrt(1 - e^{-2 xi}) form needs xi > 0")
        scale = (1.0 - math.exp(-2.0 * xi)) ** -0.25
        return two_pow * scale * tetra2_P_legendre(n, 0, xi, sign)
    if which == "legendre":
        scale = (1.0 + math.exp(-2.0 * xi)) ** -0.25
        return two_pow * scale * tetra2_P_ferrers(n, 0, xi, sign)
    if which == "qhat":
        scale = (1.0 + math.exp(2.0 * xi)) ** -0.25
        return two_pow * scale * math.sqrt(2.0) * tetra2_P_ferrers(n, 0, xi, sign)
    raise ValueError("which must be 'ferrers', 'legendre', or 'qhat'")


def cyclic_P(n: int, mu: float, z: float, kind: str = "legendre") -> float:
    """Integer-degree first-kind value via a Jacobi polynomial.

    The degree is n (equivalently -1-n); z is the function argument
    (z > 1 for Legendre, |z| < 1 for Ferrers).  When mu - n is a positive
    integer the function is identically zero and 0.0 is returned.
    """
    if n < 0:
        raise ValueError("cyclic_P needs n >= 0")
    if kind == "legendre":
        if z <= 1.0:
            raise ValueError("legendre kind needs z > 1")
        pref = ((z + 1.0) / (z - 1.0)) ** (mu / 2.0)
    elif kind == "ferrers":
        if not -1.0 < z < 1.0:
            raise ValueError("ferrers kind needs -1 < z < 1")
        pref = ((1.0 + z) / (1.0 - z)) ** (mu / 2.0)
    else:
        raise ValueError("kind must be 'legendre' or 'ferrers'")
    head = math.factorial(n) * inv_gamma(n - mu + 1.0)
    if head == 0.0:
        return 0.0
    return head * pref * jacobi_P(n, -mu, mu, z)


def _is_degenerate_alpha(alpha: float, m: int) -> bool:
    return abs(alpha - round(alpha)) < 1e-9 and abs(round(alpha)) <= m


def _even_odd(value_plus: complex, value_minus: complex, parity: int) -> complex:
    if parity >= 0:
        return (value_plus + value_minus) / 2.0
    return (value_plus - value_minus) / 2.0


_I_CYCLE = (1.0, 1j, -1.0, -1j)


def _ipow(k: int) -> complex:
    """i**k without the rounding of complex exponentiation."""
    return _I_CYCLE[k % 4]


def _require_real(value: complex, where: str) -> float:
    if abs(value.imag) > 1e-12 * (1.0 + abs(value.real)):
        raise ArithmeticError(f"{where}: non-negligible imaginary residue")
    return value.real


def dihedral_eval(
    m: int, alpha: float, var: float, which: str, sign: int = 1
) -> float:
    """Half-odd-order values from Jacobi polynomials, order +-(1/2+m).

    which = 'qhat':      Q-hat_{-1/2+alpha}(cosh xi), xi > 0
    which = 'legendre':  P_{-1/2+alpha}(cosh xi), xi > 0
    which = 'ferrers_p': Ferrers P_{-1/2+alpha}(cos theta), 0 < theta < pi
    which = 'ferrers_q': Ferrers Q_{-1/2+alpha}(cos theta), 0 < theta < pi

    Minus-order cases with integer alpha in [-m, m]: 'qhat' and 'ferrers_q'
    are undefined (ValueError); the P forms require a limit that is out of
    scope here (NotImplementedError).
    """
    if m < 0:
        raise ValueError("dihedral_eval needs m >= 0")
    fact = math.factorial(m)
    degenerate = _is_degenerate_alpha(alpha, m)
    if sign < 0 and degenerate:
        if which in ("qhat", "ferrers_q"):
            raise ValueError(
                "second-kind dihedral function undefined for integer alpha in [-m, m]"
            )
        raise NotImplementedError(
            "minus-order first-kind limit case (integer alpha in [-m, m])"
        )
    poch = None if sign >= 0 else poch_f(alpha - m, 2 * m + 1)

    if which == "qhat":
        if var <= 0.0:
            raise ValueError("qhat form needs xi > 0")
        xi = var
        core = math.exp(-alpha * xi) * jacobi_P(
            m, alpha, -alpha, 1.0 / math.tanh(xi)
        )
        bracket = 1.0 if sign >= 0 else 1.0 / poch
        return (
            math.sqrt(math.pi / 2.0)
            * fact
            * bracket
            * math.sinh(xi) ** -0.5
            * core
        )

    if which == "legendre":
        if var <= 0.0:
            raise ValueError("legendre form needs xi > 0")
        xi = var
        c_plus = math.exp(-alpha * xi) * jacobi_P(m, alpha, -alpha, 1.0 / math.tanh(xi))
        c_minus = math.exp(alpha * xi) * jacobi_P(m, -alpha, alpha, 1.0 / math.tanh(xi))
        if sign >= 0:
            pref = math.sqrt(2.0 / math.pi) * fact * (-1.0) ** m
            part = (c_plus + c_minus) / 2.0
        else:
            pref = math.sqrt(2.0 / math.pi) * fact * (-1.0) ** (m + 1) / poch
            part = (c_plus - c_minus) / 2.0
        return pref * math.sinh(xi) ** -0.5 * part

    if which in ("ferrers_p", "ferrers_q"):
        if not 0.0 < var < math.pi:
            raise ValueError("ferrers forms need 0 < theta < pi")
        theta = var
        zc = 1j / math.tan(theta)
        c_plus = cmath.exp(1j * alpha * theta) * jacobi_P(m, alpha, -alpha, zc)
        c_minus = cmath.exp(-1j * alpha * theta) * jacobi_P(m, -alpha, alpha, zc)
        if which == "ferrers_p":
            if sign >= 0:
                pref = math.sqrt(2.0 / math.pi) * fact * _ipow(m)
                part = _even_odd(c_plus, c_minus, +1)
            else:
                pref = math.sqrt(2.0 / math.pi) * fact * _ipow(-m - 1) / poch
                part = _even_odd(c_plus, c_minus, -1)
        else:
            # second kind takes the opposite parity from the order sign
            if sign >= 0:
                pref = math.sqrt(math.pi / 2.0) * fact * _ipow(m + 1)
                part = _even_odd(c_plus, c_minus, -1)
            else:
                pref = math.sqrt(math.pi / 2.0) * fact * _ipow(-m) / poch
                part = _even_odd(c_plus, c_minus, +1)
        return _require_real(
            pref * math.sin(theta) ** -0.5 * part, f"dihedral_eval[{which}]"
        )

    raise ValueError("which must be 'qhat', 'legendre', 'ferrers_p', or 'ferrers_q'")
