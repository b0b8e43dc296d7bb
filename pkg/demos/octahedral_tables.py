"""Exact octahedral rational functions, end to end.

The family r_n^m(u) carries all the algebraic Legendre functions of the
octahedral class.  Every member is produced in exact rational arithmetic,
so this walkthrough prints Fractions, not floats: quadrant structure,
seed polynomials, values at the corner u = 1, the reversal conjugate, and
the agreement of the three independent construction routes.
"""

from fractions import Fraction

from fraclegendre import octahedral

# The four seeds generate everything else through three-term recurrences.
print("seed numerators (coefficients low order first):")
for index, fn in sorted(octahedral.seed_functions().items()):
    print(f"  r_{index[0]}^{index[1]}: {[str(c) for c in fn.numer.coeffs]}")

# Outside the first quadrant the family keeps a rational closed form:
# a numerator polynomial over (1-u)^a * p_f(u)^b with quadrant-determined
# exponents.  The constructor verifies the structure on every call.
print("\nquadrant structure (a, b, numerator degree):")
for n, m in [(2, 3), (2, -3), (-2, 3), (-2, -3)]:
    fn = octahedral.generate(n, m)
    print(f"  r_{n}^{m}: a={fn.pow_one_minus_u} b={fn.pow_pf} deg={fn.numer.degree}")

# u = 1 is the image of the cube's edge midpoints; the value there is a
# pure power of -64 throughout the first quadrant.
print("\nvalues at u = 1:")
for n, m in [(0, 0), (1, 0), (0, 1), (2, 2)]:
    val = octahedral.generate(n, m).eval(Fraction(1))
    print(f"  r_{n}^{m}(1) = {val} = (-64)^{m + n}")

# The leading coefficient has a gamma-quotient closed form, exact in
# rationals.
print("\nleading coefficients d_n^m:")
for n, m in [(0, 1), (1, 0), (1, 1), (2, 1)]:
    print(f"  d_{n}^{m} = {octahedral.d_coeff(n, m)}")

# Reversing the coefficient order and rescaling produces the conjugate
# function; applying the transform twice returns the original.
cbar = octahedral.conjugate(1, 1)
print(f"\nconjugate of r_1^1 (numerator coefficients): "
      f"{[str(c) for c in cbar.num.coeffs]}")

# Route agreement: the coefficient recurrence, the second-order recurrence
# available on the m = 0 row, and the terminating hypergeometric series on
# the n = 0 row all rebuild the same exact objects.
via_rec = octahedral.coeffs_via_recurrence(2, 0)
via_heun = octahedral.coeffs_via_heun(2)
print(f"\nr_2^0 via third-order recurrence == via second-order recurrence: "
      f"{via_rec == via_heun}")
row = octahedral.hypergeometric_row(2)
same = row.as_rational_function() == octahedral.generate(0, 2).as_rational_function()
print(f"r_0^2 via terminating series == via recurrence: {same}")

# The differential shift operators move one lattice step and re-derive the
# neighbor; each call cross-checks itself against the recurrence route.
shifted = octahedral.apply_diff_recurrence(1, 1, (1, 1))
print(f"differential shift (1,1) from r_1^1 lands on index {shifted.index}")
