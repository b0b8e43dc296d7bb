"""Numerical Gauss hypergeometric oracle and Legendre/Ferrers evaluators.

Everything here is float (or complex, for the Jacobi helpers) and built on
the Maclaurin series of 2F1.  The series is only summed where it converges
comfortably (|x| <= 0.8, or a terminating parameter), so each evaluator
routes through a connection formula when its natural argument leaves that
window.  These routines are deliberately independent of the exact rational
machinery in :mod:`fraclegendre.octahedral`; the test suite plays the two
against each other.
"""

from __future__ import annotations

import math

__all__ = [
    "gauss_2f1",
    "poch_f",
    "gamma_ratio",
    "inv_gamma",
    "ferrers_P",
    "ferrers_Q",
    "legendre_P",
    "legendre_Qhat",
    "jacobi_P",
    "jacobi_P_rodrigues",
    "whipple_residual",
]

SERIES_GUARD = 0.8
_INT_TOL = 1e-9
_MAX_TERMS = 10 ** 6


def _near_int(x) -> bool:
    if isinstance(x, complex):
        return abs(x.imag) < _INT_TOL and abs(x.real - round(x.real)) < _INT_TOL
    return abs(x - round(x)) < _INT_TOL


def _as_int(x) -> int:
    if isinstance(x, complex):
        return round(x.real)
    return round(x)


def poch_f(d, k: int):
    """Rising factorial (d)_k for integer k >= 0, float or complex d."""
    if k < 0:
        raise ValueError("poch_f needs k >= 0")
    out = 1.0
    for j in range(k):
        out *= d + j
    return out


def _falling(d, k: int):
    out = 1.0
    for j in range(k):
        out *= d - j
    return out


def inv_gamma(x: float) -> float:
    """1/Gamma(x), returning 0.0 at the poles x = 0, -1, -2, ..."""
    if _near_int(x) and _as_int(x) <= 0:
        return 0.0
    return 1.0 / math.gamma(x)


def gamma_ratio(a: float, b: float) -> float:
    """Gamma(a)/Gamma(b), cancelling the poles when a - b is an integer.

    For integer a - b the ratio is a finite product even when both gammas
    blow up; that case is evaluated symbolically.  Otherwise both gammas
    must be finite (math.gamma raises at its poles, which is the correct
    "undefined" signal).
    """
    diff = a - b
    if _near_int(diff):
        k = _as_int(diff)
        if k >= 0:
            # Gamma(b+k)/Gamma(b) = (b)_k; a zero factor means Gamma(b)
            # has a pole that Gamma(a) does not cure, so the ratio is 0.
            return poch_f(b, k)
        val = poch_f(a, -k)
        if val == 0.0:
            raise ValueError("gamma_ratio: pole in numerator only")
        return 1.0 / val
    return math.gamma(a) / math.gamma(b)


def _terminating_k(a, b):
    """Smallest series cutoff if a or b is a nonpositive integer, else None."""
    cand = []
    for p in (a, b):
        if _near_int(p) and _as_int(p) <= 0:
            cand.append(-_as_int(p))
    if not cand:
        return None
    return min(cand)


def gauss_2f1(a, b, c, x):
    """Gauss 2F1(a, b; c; x) by direct Maclaurin summation.

    Terminating cases (a or b a nonpositive integer) are summed exactly for
    any x.  Non-terminating cases require |x| <= 0.8 and c not a
    nonpositive integer; anything else raises ValueError rather than
    returning a wrong number.
    """
    if x == 0:
        return 1.0
    kmax = _terminating_k(a, b)
    if kmax is None:
        if _near_int(c) and _as_int(c) <= 0:
            raise ValueError("gauss_2f1: c is a nonpositive integer")
        if abs(x) > SERIES_GUARD:
            raise ValueError(
                "gauss_2f1: |x| = %.3f exceeds the series guard %.1f"
                % (abs(x), SERIES_GUARD)
            )
    term = 1.0
    total = 1.0
    k = 0
    while True:
        if kmax is not None and k >= kmax:
            return total
        denom = (c + k) * (k + 1)
        if denom == 0:
            raise ValueError("gauss_2f1: c hits a nonpositive integer mid-series")
        term = term * (a + k) * (b + k) * x / denom
        total += term
        k += 1
        if kmax is None:
            if abs(term) <= 1e-17 * (abs(total) + 1.0):
                return total
            if k > _MAX_TERMS:
                raise ValueError("gauss_2f1: series failed to converge")


def _series_P_over_gamma(a: float, b: float, mu: float, x: float) -> float:
    """2F1(a, b; 1-mu; x) / Gamma(1-mu), valid for every real mu.

    For integer mu >= 1 the quotient is a 0/inf limit; the standard
    reduction shifts the series by mu terms:

        2F1(a,b;1-m;x)/Gamma(1-m) = (a)_m (b)_m / m! * x^m
                                     * 2F1(a+m, b+m; 1+m; x).
    """
    if _near_int(mu) and _as_int(mu) >= 1:
        m = _as_int(mu)
        head = poch_f(a, m) * poch_f(b, m) / math.factorial(m) * x ** m
        if head == 0.0:
            return 0.0
        return head * gauss_2f1(a + m, b + m, 1 + m, x)
    return gauss_2f1(a, b, 1.0 - mu, x) * inv_gamma(1.0 - mu)


def _ferrers_P_direct(nu: float, mu: float, z: float) -> float:
    x = (1.0 - z) / 2.0
    pref = ((1.0 + z) / (1.0 - z)) ** (mu / 2.0)
    return pref * _series_P_over_gamma(-nu, nu + 1.0, mu, x)


def ferrers_P(nu: float, mu: float, z: float) -> float:
    """Ferrers function of the first kind P_nu^mu(z) on -1 < z < 1."""
    if not -1.0 < z < 1.0:
        raise ValueError("ferrers_P needs -1 < z < 1")
    x = (1.0 - z) / 2.0
    if abs(x) <= SERIES_GUARD or _near_int(nu):
        return _ferrers_P_direct(nu, mu, z)
    # z < -0.6: reflect to -z and reuse the direct series there.
    # P(-z) enters through both kinds; with Q eliminated in favour of P the
    # reflection needs non-integer order.
    if _near_int(mu):
        raise ValueError("ferrers_P: z < -0.6 with integer order not supported")
    s = nu + mu
    cos_f = math.cos(s * math.pi)
    sin_f = math.sin(s * math.pi)
    p_plus = _ferrers_P_direct(nu, mu, -z)
    p_minus = _ferrers_P_direct(nu, -mu, -z)
    ratio = gamma_ratio(nu + mu + 1.0, nu - mu + 1.0)
    q_part = (
        1.0 / math.tan(mu * math.pi) * p_plus
        - ratio / math.sin(mu * math.pi) * p_minus
    )
    return cos_f * p_plus - sin_f * q_part


def ferrers_Q(nu: float, mu: float, z: float) -> float:
    """Ferrers function of the second kind, non-integer order only."""
    if not -1.0 < z < 1.0:
        raise ValueError("ferrers_Q needs -1 < z < 1")
    if _near_int(mu):
        raise ValueError("ferrers_Q: integer order not supported")
    ratio = gamma_ratio(nu + mu + 1.0, nu - mu + 1.0)
    p_plus = ferrers_P(nu, mu, z)
    p_minus = ferrers_P(nu, -mu, z)
    return (math.pi / 2.0) * (
        p_plus / math.tan(mu * math.pi) - ratio * p_minus / math.sin(mu * math.pi)
    )


_ALT_P_GUARD = 2.6  # primary series works up to z = 2.6 (x = -0.8)
_Q_NEAR_ONE = math.sqrt(5.0)  # 1/z^2 <= 0.8 once z >= sqrt(5)/2; margin below


def _legendre_P_direct(nu: float, mu: float, z: float) -> float:
    x = (1.0 - z) / 2.0
    pref = ((z + 1.0) / (z - 1.0)) ** (mu / 2.0)
    return pref * _series_P_over_gamma(-nu, nu + 1.0, mu, x)


def _legendre_P_alt(nu: float, mu: float, z: float) -> float:
    """Large-z representation with argument 1 - 1/z^2."""
    arg = 1.0 - 1.0 / (z * z)
    pref = 2.0 ** mu * z ** (nu + mu) * (z * z - 1.0) ** (-mu / 2.0)
    return pref * _series_P_over_gamma(
        -(nu + mu) / 2.0, (1.0 - nu - mu) / 2.0, mu, arg
    )


def legendre_P(nu: float, mu: float, z: float) -> float:
    """Associated Legendre P_nu^mu(z) on z > 1 (real branch)."""
    if not z > 1.0:
        raise ValueError("legendre_P needs z > 1")
    x = (1.0 - z) / 2.0
    if abs(x) <= SERIES_GUARD or _near_int(nu):
        return _legendre_P_direct(nu, mu, z)
    arg = 1.0 - 1.0 / (z * z)
    if arg <= SERIES_GUARD:
        return _legendre_P_alt(nu, mu, z)
    # Far zone: express P through the second kind at negated order/degree.
    if _near_int(nu + 0.5):
        raise ValueError("legendre_P: half-odd degree pole in far-zone formula")
    sec = 1.0 / math.cos(nu * math.pi)
    g1 = inv_gamma(nu - mu + 1.0)
    g2 = inv_gamma(-mu - nu)
    if g1 == 0.0 or g2 == 0.0:
        return 0.0
    q_a = legendre_Qhat(-nu - 1.0, -mu, z)
    q_b = legendre_Qhat(nu, -mu, z)
    return sec * g1 * g2 * (q_a - q_b)


def _qhat_exception(nu: float, mu: float, z: float) -> float:
    """Q-hat for half-odd nu <= -3/2 with nu+mu a negative integer.

    On this ladder the order window nu+1 <= mu <= -(nu+1) survives, as the
    limit of Q-hat in the degree at fixed order.  The value has an exact
    elementary form: with alpha = nu + 1/2 and |mu| = 1/2 + m,

        Q-hat = sqrt(pi/2) m! B (z^2-1)^{-1/4} (z+s)^{-alpha}
                 * P_m^{(alpha,-alpha)}(z/s),     s = sqrt(z^2-1),

    where B = 1 for mu > 0 and B = 1/(alpha-m)_{2m+1} for mu < 0.
    """
    K = _as_int(-(nu + 1.5))
    m = _as_int(abs(mu) - 0.5)
    if not (_near_int(abs(mu) - 0.5) and 0 <= m <= K):
        raise ValueError("legendre_Qhat undefined at this degree/order")
    alpha = nu + 0.5
    if mu > 0:
        bracket = 1.0
    else:
        bracket = 1.0 / poch_f(alpha - m, 2 * m + 1)
    s = math.sqrt(z * z - 1.0)
    return (
        math.sqrt(math.pi / 2.0)
        * math.factorial(m)
        * bracket
        * (z * z - 1.0) ** -0.25
        * (z + s) ** -alpha
        * jacobi_P(m, alpha, -alpha, z / s)
    )


def legendre_Qhat(nu: float, mu: float, z: float) -> float:
    """Real second-kind function Q-hat_nu^mu(z) = e^{-mu pi i} Q_nu^mu(z), z > 1.

    Undefined when nu + mu is a negative integer, except on the half-odd
    ladder nu = -3/2, -5/2, ... where orders nu+1 <= mu <= -(nu+1) survive.
    """
    if not z > 1.0:
        raise ValueError("legendre_Qhat needs z > 1")
    deg_sum = nu + mu
    if _near_int(deg_sum) and _as_int(deg_sum) <= -1:
        if _near_int(nu + 0.5) and nu <= -1.5 + _INT_TOL:
            return _qhat_exception(nu, mu, z)
        raise ValueError("legendre_Qhat undefined: nu + mu is a negative integer")
    arg = 1.0 / (z * z)
    if arg <= SERIES_GUARD:
        if _near_int(nu + 1.5) and _as_int(nu + 1.5) <= 0:
            raise ValueError("legendre_Qhat: series parameter pole at this degree")
        pref = (
            math.sqrt(math.pi)
            * 2.0 ** (-nu - 1.0)
            * gamma_ratio(nu + mu + 1.0, nu + 1.5)
            * (z * z - 1.0) ** (mu / 2.0)
            * z ** (-nu - mu - 1.0)
        )
        a = (nu + mu) / 2.0 + 0.5
        b = (nu + mu) / 2.0 + 1.0
        return pref * gauss_2f1(a, b, nu + 1.5, arg)
    # Near z = 1: convert to first-kind values (needs non-integer order).
    if _near_int(mu):
        raise ValueError("legendre_Qhat: near-1 route needs non-integer order")
    p_plus = legendre_P(nu, mu, z)
    p_minus = legendre_P(nu, -mu, z)
    ratio = gamma_ratio(nu + mu + 1.0, nu - mu + 1.0)
    return (math.pi / 2.0) / math.sin(mu * math.pi) * (p_plus - ratio * p_minus)


def jacobi_P(n: int, alpha, beta, z):
    """Jacobi polynomial P_n^(alpha,beta)(z); parameters may be complex.

    The hypergeometric sum is arranged so no intermediate Pochhammer sits
    in a denominator: c_k = (-n)_k (n+a+b+1)_k (a+1+k)_{n-k} / (k! n!).
    """
    if n < 0 or n != int(n):
        raise ValueError("jacobi_P needs integer n >= 0")
    n = int(n)
    x = (1.0 - z) / 2.0
    total = 0.0 + 0.0j if isinstance(z, complex) or isinstance(alpha, complex) else 0.0
    for k in range(n + 1):
        c = (
            poch_f(-n, k)
            * poch_f(n + alpha + beta + 1, k)
            * poch_f(alpha + 1 + k, n - k)
            / (math.factorial(k) * math.factorial(n))
        )
        total += c * x ** k
    return total


def jacobi_P_rodrigues(n: int, alpha, beta, z):
    """Jacobi polynomial via the Rodrigues/Leibniz expansion (cross-check)."""
    if n < 0 or n != int(n):
        raise ValueError("jacobi_P_rodrigues needs integer n >= 0")
    n = int(n)
    total = 0.0 + 0.0j if isinstance(z, complex) or isinstance(alpha, complex) else 0.0
    for k in range(n + 1):
        total += (
            math.comb(n, k)
            * (-1.0) ** k
            * _falling(alpha + n, k)
            * _falling(beta + n, n - k)
            * (1.0 - z) ** (n - k)
            * (1.0 + z) ** k
        )
    return (-1.0) ** n / (2.0 ** n * math.factorial(n)) * total


def whipple_residual(nu: float, mu: float, xi: float) -> float:
    """Q-hat_nu^mu(coth xi) minus its Whipple image; zero when both sides exist.

    Raises ValueError when the gamma factor (or either function) is
    undefined at this degree/order.
    """
    if xi <= 0.0:
        raise ValueError("whipple_residual needs xi > 0")
    try:
        gam = math.gamma(nu + mu + 1.0)
    except ValueError as exc:
        raise ValueError("whipple relation undefined: gamma pole") from exc
    lhs = legendre_Qhat(nu, mu, 1.0 / math.tanh(xi))
    rhs = (
        math.sqrt(math.pi / 2.0)
        * gam
        * math.sqrt(math.sinh(xi))
        * legendre_P(-mu - 0.5, -nu - 0.5, math.cosh(xi))
    )
    return lhs - rhs
