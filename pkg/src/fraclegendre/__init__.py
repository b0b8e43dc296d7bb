"""Legendre and Ferrers functions of fractional degree and order.

Exact octahedral rational functions, hypergeometric series oracles,
closed-form Schwarz-class families, recurrence ladders, so(5,C)
representations, and biorthogonal expansions.
"""

__version__ = "0.1.0"
