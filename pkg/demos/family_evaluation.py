"""Evaluating the algebraic Legendre/Ferrers families.

Five families of fractional degree and order admit algebraic closed
forms: octahedral (degree -1/6 mod 1, order 1/4 mod 1), two tetrahedral
classes (degree -3/4 or -1/6 mod 1, order 1/3 mod 1), dihedral
(half-integer order), and cyclic (integer degree).  Each closed form is
checked here against the hypergeometric series oracle, which knows
nothing about the algebraic structure.
"""

import math

from fraclegendre import families, oracle


def rel(got, want):
    return abs(got - want) / max(1e-300, abs(want))


# Octahedral family on the hyperbolic side: P of degree -1/6 + n and
# order +-(1/4 + m) at cosh(xi), built from r_n^m under an algebraic
# change of variable.
xi = 0.8
z = math.cosh(xi)
print("octahedral Legendre closed form vs series oracle:")
for n, m in [(0, 0), (1, 0), (-1, 2), (2, -1)]:
    got = families.oct_legendre_P(n, m, xi, 1)
    want = oracle.legendre_P(-1.0 / 6.0 + n, 0.25 + m, z)
    print(f"  (n,m)=({n:+d},{m:+d}): {got:+.12e}  rel err {rel(got, want):.1e}")

# Same family on the circular side (Ferrers functions).
theta = 1.1
print("\noctahedral Ferrers closed form vs series oracle:")
for n, m in [(0, 0), (1, 1), (-2, 0)]:
    got = families.oct_ferrers_P(n, m, theta, -1)
    want = oracle.ferrers_P(-1.0 / 6.0 + n, -(0.25 + m), math.cos(theta))
    print(f"  (n,m)=({n:+d},{m:+d}): {got:+.12e}  rel err {rel(got, want):.1e}")

# The tetrahedral families change variable through tanh/coth and carry
# degree -3/4 (second class) or an entangled degree-order pair (third
# class).
print("\ntetrahedral closed forms vs series oracle:")
got = families.tetra2_Qhat(1, 0, 0.9, "first")
want = (2.0 / math.pi) * oracle.legendre_Qhat(-0.75, -4.0 / 3.0, 1.0 / math.tanh(0.9))
print(f"  second class Qhat row 1: rel err {rel(got, want):.1e}")
got = families.tetra3_eval(1, 0.7, "ferrers", -1)
want = oracle.ferrers_P(-1.0 / 6.0 + 1, -1.0 / 3.0 - 1, math.sqrt(1.0 - math.exp(-1.4)))
print(f"  third class Ferrers:     rel err {rel(got, want):.1e}")

# Dihedral functions reduce to elementary trig/algebraic expressions; the
# order is a half-integer and the degree stays free.
alpha, th = 0.7, 1.3
got = families.dihedral_eval(0, alpha, th, "ferrers_p", 1)
explicit = math.sqrt(2.0 / (math.pi * math.sin(th))) * math.cos(alpha * th)
print(f"\ndihedral P^(1/2) vs explicit cosine form: rel err {rel(got, explicit):.1e}")

# Gamma-product constants from the tetrahedral theory: two of the four
# closed forms for sqrt(sqrt(3) +- 1).
g = math.gamma
expr = math.sqrt(math.pi) * 2.0**0.25 * 3.0**-0.375 * g(1.0 / 12.0) / (g(0.25) * g(1.0 / 3.0))
print(f"\nsqrt(sqrt(3)+1) gamma product: rel err {rel(expr, families.SQRT_SQRT3_PLUS_1):.1e}")
expr = math.pi**-0.5 * 2.0**-0.25 * 3.0**0.125 * g(5.0 / 12.0) * g(1.0 / 3.0) / g(0.25)
print(f"sqrt(sqrt(3)-1) gamma product: rel err {rel(expr, families.SQRT_SQRT3_MINUS_1):.1e}")

# The integral representation with the algebraic endpoint kernel; the
# closed form is checked against direct singular quadrature elsewhere
# (tests and the `fraclegendre mehler --check` subcommand).
val = families.mehler_integral(0, 0, 1.1, "circular")
print(f"\nintegral-representation value at theta=1.1: {val:+.12e}")
