"""Recurrence ladders on the degree-order lattice.

Legendre and Ferrers functions whose parameters differ by integers are
connected by first-order differential recurrences (one per lattice
direction, eight in all) and by algebraic three-term recurrences.  This
walkthrough measures their residuals at fractional parameters and then
uses them constructively: filling a whole lattice of values from just two
seeds.
"""

import math
import random

from fraclegendre import ladders

# The eight differential recurrences, evaluated with a central finite
# difference (so ~1e-10 is the expected noise floor, not machine epsilon).
nu, mu, theta = -1.0 / 6.0, 0.25, 1.05
print("differential recurrence residuals (circular P, finite difference):")
for delta, step in ladders.TABLE2.items():
    res = ladders.diff_recurrence_check("ferrers_p", nu, mu, theta, step)
    print(f"  shift {delta}: {res:.2e}")

# Three-term recurrences are purely algebraic, so their residuals sit at
# rounding level; four relations, checked across all four function kinds.
print("\nthree-term recurrence residuals:")
rng = random.Random(3)
for kind, z in [("ferrers_p", 0.4), ("ferrers_q", -0.3),
                ("legendre_p", 1.6), ("legendre_qhat", 1.9)]:
    nu = rng.uniform(-0.9, 1.5)
    mu = rng.uniform(-1.2, 1.2)
    worst = max(ladders.three_term_check(kind, nu, mu, z, which)
                for which in ("order", "degree", "diag+", "diag-"))
    print(f"  {kind:13s} at nu={nu:+.3f} mu={mu:+.3f}: worst {worst:.2e}")

# Constructive use: from the two seed values (nu0, mu0) and (nu0, mu0+1),
# the recurrences propagate through a window of integer shifts.  Entries
# whose every route crosses a vanishing coefficient stay None.
nu0, mu0, z = -1.0 / 6.0, 0.25, 0.55
targets = [(n, m) for n in range(-2, 3) for m in range(-2, 3)]
table = ladders.propagate("ferrers_p", nu0, mu0, z, targets)
print(f"\npropagated Ferrers P values at z={z} from two seeds:")
for n in range(-2, 3):
    row = []
    for m in range(-2, 3):
        v = table[(n, m)]
        row.append("   none   " if v is None else f"{v:+.3e}")
    print("  " + "  ".join(row))

# Spot check one propagated corner against a direct evaluation.
from fraclegendre import oracle

direct = oracle.ferrers_P(nu0 + 2, mu0 - 2, z)
print(f"\ncorner (2,-2): propagated {table[(2, -2)]:+.12e}, "
      f"direct {direct:+.12e}")
