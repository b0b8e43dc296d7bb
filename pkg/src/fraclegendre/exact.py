"""Exact rational arithmetic: Pochhammer symbols, dense polynomials over
Fraction, canonical rational functions, and the octahedral invariant
polynomials with their degree-24 rational maps."""

from __future__ import annotations

import math
from fractions import Fraction


def as_fraction(x):
    """Coerce an int, Fraction, or 'p/q' string to Fraction. Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational required, got {type(x).__name__}")


def pochhammer(d, k):
    """Rising factorial (d)_k for rational d and integer k of either sign.

    Negative k is defined through (d)_k = 1/(d+k)_{-k}, which needs
    d-1, d-2, ..., d+k all nonzero; a zero factor raises ZeroDivisionError.
    """
    d = as_fraction(d)
    if not isinstance(k, int):
        raise TypeError("pochhammer index k must be an integer")
    if k >= 0:
        out = Fraction(1)
        for j in range(k):
            out *= d + j
        return out
    denom = Fraction(1)
    for j in range(-k):
        factor = d + k + j
        if factor == 0:
            raise ZeroDivisionError(f"pochhammer({d}, {k}) crosses a zero factor")
        denom *= factor
    return 1 / denom


class RationalPoly:
    """Dense univariate polynomial over Fraction, coefficients low degree first.

    Treat instances as immutable; all operations return new objects.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly((other,))
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly((other,))
        if not isinstance(other, RationalPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, RationalPoly) else RationalPoly((other,)).__neg__())

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        out = RationalPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other):
        """Euclidean division; other must be nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RationalPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return RationalPoly(tuple(quot)), RationalPoly(tuple(rem))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        """Division that must leave no remainder; raises ZeroDivisionError otherwise."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ZeroDivisionError("inexact polynomial division")
        return q

    def gcd(self, other):
        """Monic greatest common divisor by the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a * (1 / a.coeffs[-1])

    def derivative(self):
        return RationalPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def reverse(self):
        """Coefficient reversal: u^deg * p(1/u)."""
        return RationalPoly(self.coeffs[::-1])

    def shift(self, k):
        """Multiply by u^k, k >= 0."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        return RationalPoly((Fraction(0),) * k + self.coeffs)

    def eval(self, x):
        """Horner evaluation; x may be Fraction, int, float, or complex."""
        if isinstance(x, (Fraction, int)):
            out = Fraction(0)
            for c in reversed(self.coeffs):
                out = out * x + c
            return out
        out = 0.0 * x
        for c in reversed(self.coeffs):
            out = out * x + float(c)
        return out

    def __call__(self, x):
        return self.eval(x)

    def __repr__(self):
        return f"RationalPoly({[str(c) for c in self.coeffs]})"


_ONE = RationalPoly((1,))


class RationalFunction:
    """Quotient of two RationalPolys kept canonical: gcd cancelled, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_ONE):
        if isinstance(num, (int, Fraction)):
            num = RationalPoly((num,))
        if isinstance(den, (int, Fraction)):
            den = RationalPoly((den,))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = RationalPoly(), _ONE
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.coeffs[-1]
            if lc != 1:
                num, den = num * (1 / lc), den * (1 / lc)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p):
        return cls(p, _ONE)

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den == _ONE

    def __eq__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_rf(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("rational function power must be an integer")
        if k < 0:
            return (RationalFunction(_ONE) / self) ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def derivative(self):
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)

    def substitute_inverse(self):
        """The rational function f(1/u), recanonicalized."""
        dn, dd = self.num.degree, self.den.degree
        d = max(dn, dd)
        if d < 0:
            return RationalFunction(RationalPoly())
        return RationalFunction(self.num.reverse().shift(d - dn),
                                self.den.reverse().shift(d - dd))

    def mul_monomial(self, k):
        """Multiply by u^k, k of either sign."""
        if k >= 0:
            return RationalFunction(self.num.shift(k), self.den)
        return RationalFunction(self.num, self.den.shift(-k))

    def eval(self, x):
        den = self.den.eval(x)
        if den == 0:
            raise ZeroDivisionError(f"rational function pole at {x}")
        return self.num.eval(x) / den

    def __call__(self, x):
        return self.eval(x)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def _coerce_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, RationalPoly):
        return RationalFunction(x)
    if isinstance(x, (int, Fraction)):
        return RationalFunction(RationalPoly((x,)))
    return NotImplemented


# Octahedral invariant polynomials in u: vertex, edge, face.
_P_V = RationalPoly((0, 1, -4, 6, -4, 1))        # u(1-u)^4
_P_E = RationalPoly((1, -33, -33, 1))            # (1+u)(1-34u+u^2)
_P_F = RationalPoly((1, 14, 1))


def invariant_polys():
    """The (p_v, p_e, p_f) triple of degrees 5, 3, 2 satisfying p_e^2 - p_f^3 + 108 p_v = 0."""
    return _P_V, _P_E, _P_F


def _is_exact(u):
    return isinstance(u, (int, Fraction))


def map_R(u):
    """Degree-24 invariant quotient -108 p_v / p_e^2.

    Exact for int/Fraction input, float for float input. Raises
    ZeroDivisionError at the poles, the zeros of p_e.
    """
    pe = _P_E.eval(u)
    if pe == 0:
        raise ZeroDivisionError(f"map_R pole: p_e({u}) = 0")
    pv = _P_V.eval(u)
    if _is_exact(u):
        return Fraction(-108) * pv / (pe * pe)
    return -108.0 * pv / (pe * pe)


def map_T(u):
    """Degree-2 map -12u/(1+u)^2 with a pole at u = -1."""
    d = (1 + u) * (1 + u)
    if d == 0:
        raise ZeroDivisionError("map_T pole at u = -1")
    if _is_exact(u):
        return Fraction(-12) * u / d
    return -12.0 * u / d


def map_S(t):
    """Degree-6 map 36 t (1+3t^2)^2 / (1+6t-3t^2)^3."""
    den = 1 + 6 * t - 3 * t * t
    if den == 0:
        raise ZeroDivisionError(f"map_S pole: 1+6t-3t^2 = 0 at t = {t}")
    num = 36 * t * (1 + 3 * t * t) ** 2
    if _is_exact(t):
        return as_fraction(num) / as_fraction(den) ** 3
    return num / den ** 3


def gamma_fraction(x):
    """Gamma of a Fraction via math.gamma/lgamma, as float. Poles raise ValueError."""
    x = as_fraction(x)
    if x.denominator == 1 and x <= 0:
        raise ValueError(f"gamma pole at {x}")
    return math.gamma(float(x))
