"""Biorthogonal inner products and expansion machinery on (-1, 1).

Three layers live here.  ``singular_quad`` is a double-exponential
quadrature that tolerates algebraic endpoint singularities; everything
else feeds it integrands.  ``love_hunter_inner`` and
``octahedral_biorthog`` compute the two biorthogonality pairings: the
Ferrers-function pairing with reflected argument and negated order, and
the rational-function pairing on the unit s-interval that the octahedral
family satisfies at orders 0 and -1.  ``lh_coefficients`` and
``w_expansion`` build truncated expansions of a user function: the former
in a bilateral Ferrers basis (with a trigonometric fast path at order
-1/2), the latter in fourth-kind Chebyshev polynomials, whose
half-integer-degree limit it is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple

from . import octahedral
from .oracle import ferrers_P, gauss_2f1

__all__ = [
    "QuadResult",
    "singular_quad",
    "love_hunter_inner",
    "lh_normalization",
    "octahedral_biorthog",
    "ExpansionSpec",
    "LHExpansion",
    "lh_coefficients",
    "chebyshev_w",
    "pinsky_basis",
    "WExpansion",
    "w_expansion",
]

# Double-exponential mesh: halving step sizes, fixed t-range, global
# evaluation budget shared by all levels of one integral.
_QUAD_LEVELS = (0.5, 0.25, 0.125, 0.0625)
_QUAD_TMAX = 4.0
_QUAD_CAP = 2 ** 13


@dataclass(frozen=True)
class QuadResult:
    """Value, error estimate (difference of the last two refinement levels,
    always >= 0), and number of integrand evaluations."""

    value: float
    err_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.err_estimate < 0:
            raise ValueError("err_estimate must be nonnegative")


def singular_quad(
    f: Callable[[float], float],
    a: float,
    b: float,
    exponents: Tuple[float, float] = (0.0, 0.0),
) -> QuadResult:
    """Integrate f over (a, b) by tanh-sinh quadrature.

    ``exponents = (p, q)`` declare the algebraic behavior (x-a)^p near a
    and (b-x)^q near b; either <= -1 means the integral does not exist and
    is rejected up front.  The transform itself never uses them beyond
    that check: its nodes cluster doubly-exponentially at both endpoints,
    which absorbs any integrable power.  Nodes are computed as offsets
    from the nearest endpoint so that the singular factor is evaluated
    without cancellation, and nodes that round onto a or b are skipped.
    """
    p, q = exponents
    if p <= -1.0 or q <= -1.0:
        raise ValueError(f"endpoint exponents {exponents} make the integral non-integrable")
    if not b > a:
        raise ValueError("need a < b")
    d = 0.5 * (b - a)
    evaluations = 0
    estimates = []
    for h in _QUAD_LEVELS:
        total, count = _level_sum(f, a, b, d, h)
        evaluations += count
        estimates.append(h * d * (math.pi / 2) * total)
        if evaluations >= _QUAD_CAP and len(estimates) >= 2:
            break
    err = abs(estimates[-1] - estimates[-2]) if len(estimates) >= 2 else abs(estimates[-1])
    return QuadResult(estimates[-1], err, evaluations)


def _level_sum(f, a, b, d, h):
    """Sum f(x_k) * w_k over the tanh-sinh mesh of step h (weights without
    the common h*d*pi/2 factor), plus the evaluation count."""
    terms = []
    n_max = int(_QUAD_TMAX / h)
    for k in range(-n_max, n_max + 1):
        t = k * h
        y = (math.pi / 2) * math.sinh(t)
        # x = c + d*tanh(y), but formed as an offset from the nearest
        # endpoint: tanh(y) = 1 - 2/(e^{2y}+1), so the distance to the
        # endpoint is exact even when tanh(y) rounds to +-1.
        off = 2.0 * d / (math.exp(2.0 * abs(y)) + 1.0)
        x = b - off if y >= 0 else a + off
        if not a < x < b:
            continue
        w = math.cosh(t) / math.cosh(y) ** 2
        terms.append(f(x) * w)
    return math.fsum(terms), len(terms)


def _piecewise_quad(f, cuts: Sequence[float], exponents: Tuple[float, float]) -> QuadResult:
    """Sum singular_quad over consecutive panels [cuts[i], cuts[i+1]].

    The declared endpoint exponents apply to the outermost edges only;
    interior panel boundaries are regular points.
    """
    p, q = exponents
    vals, errs, evals = [], [], 0
    last = len(cuts) - 2
    for i in range(len(cuts) - 1):
        pe = (p if i == 0 else 0.0, q if i == last else 0.0)
        r = singular_quad(f, cuts[i], cuts[i + 1], pe)
        vals.append(r.value)
        errs.append(r.err_estimate)
        evals += r.evaluations
    return QuadResult(math.fsum(vals), math.fsum(errs), evals)


def _theta_cuts(nu_scale: float, extra_z: Sequence[float] = ()) -> list:
    """Panel boundaries for a z-integral whose integrand oscillates like a
    Ferrers function of degree ~nu_scale: uniform in theta = arccos z,
    about one panel per three oscillations, plus caller-supplied z cuts."""
    count = max(1, math.ceil((abs(nu_scale) + 1.0) / 3.0))
    cuts = {math.cos(math.pi * i / count) for i in range(count + 1)}
    cuts.update(z for z in extra_z if -1.0 < z < 1.0)
    return sorted(cuts)


def _half_odd(x: float) -> bool:
    two = 2.0 * x
    return abs(two - round(two)) < 1e-12 and round(two) % 2 != 0


def love_hunter_inner(nu: float, nup: float, mu: float) -> QuadResult:
    """Inner product of two Ferrers functions under the reflection pairing:
    the degree-nu function of order mu at z against the degree-nup function
    of order -mu at -z, integrated over (-1, 1).

    Vanishes whenever nu - nup is a nonzero even integer, which is what
    makes the bilateral expansion work.  Requires -1 < mu < 1 (the product
    behaves like (1 -+ z)^{-|mu|} at one endpoint, integrable only there)
    and degrees that are not half-odd integers (those make the paired
    function vanish identically against its own family).
    """
    if not -1.0 < mu < 1.0:
        raise ValueError(f"order mu={mu} outside (-1, 1)")
    for deg in (nu, nup):
        if _half_odd(deg):
            raise ValueError(f"degree {deg} is a half-odd integer; the pairing degenerates")

    def integrand(theta: float) -> float:
        # clamping theta (not just cos theta) keeps the sin factor
        # consistent with the clamped argument, so nodes inside the
        # rounding window take the integrand's limiting value instead of
        # a broken mixture of clamped and unclamped factors
        theta = min(max(theta, _THETA_FLOOR), math.pi - _THETA_FLOOR)
        z = _interior_cos(theta)
        return ferrers_P(nu, mu, z) * ferrers_P(nup, -mu, -z) * math.sin(theta)

    # Integrated in theta = arccos z.  At the end where one factor meets
    # its own singular argument, its (1 -+ z)^{-|mu|/2} branch multiplies
    # the other factor's subdominant branch of the same power, so the
    # z-integrand reaches (1 -+ z)^{-|mu|}; with the Jacobian that becomes
    # theta^(1 - 2|mu|), integrable (and bounded for |mu| <= 1/2) instead
    # of a root singularity whose mass hides inside the last float gap
    # below z = +-1.  Accuracy degrades gradually as |mu| -> 1, where the
    # remaining theta singularity sharpens.
    s = 1.0 - 2.0 * abs(mu)
    count = max(1, math.ceil((max(abs(nu), abs(nup)) + 1.0) / 3.0))
    cuts = [math.pi * i / count for i in range(count + 1)]
    return _piecewise_quad(integrand, cuts, (s, s))


def lh_normalization(nu: float) -> float:
    """Diagonal value of the reflection pairing, 2 cos(nu pi) / (2 nu + 1).

    Independent of the order; verified against high-precision quadrature
    over a spread of degrees and orders.  Vanishes exactly at half-odd
    degrees, which is why those are excluded from the expansion families.
    """
    return 2.0 * math.cos(nu * math.pi) / (2.0 * nu + 1.0)


# ---------------------------------------------------------------------------
# Octahedral biorthogonality on the s-interval.

def _q_v(s: float) -> float:
    return s * (1.0 - s ** 4)


def _q_f(s: float) -> float:
    return 1.0 + 14.0 * s ** 4 + s ** 8


def _rotated_factor(np_: int, m: int, s: float) -> float:
    """The reflected partner in the s-interval pairing: the index-np_
    rational function evaluated at ((1+s)/(1-s))^4, times
    (1-s)^{1 + 12 m + 12 np_}, assembled without forming the large
    argument (all powers of (1-s) cancel analytically first).
    """
    fn = octahedral.generate(np_, m)
    deg = fn.numer.degree
    a = fn.pow_one_minus_u
    b = fn.pow_pf
    e4 = (1 + 12 * m + 12 * np_) - 4 * deg + 4 * a + 8 * b
    om = 1.0 - s
    op = 1.0 + s
    num = math.fsum(
        float(c) * op ** (4 * k) * om ** (4 * (deg - k))
        for k, c in enumerate(fn.numer.coeffs)
    )
    # (1 - x^4) = -8 s (1+s^2) / (1-s)^4 and p_f(x^4) = 16 q_f(s) / (1-s)^8
    # for x = (1+s)/(1-s); the (1-s) powers are already folded into e4.
    if a:
        num /= (-8.0 * s * (1.0 + s * s)) ** a
    if b:
        num /= (16.0 * _q_f(s)) ** b
    return num * om ** e4


def octahedral_biorthog(n: int, np_: int, m: int) -> QuadResult:
    """Pairing of the index-n and index-np_ octahedral rational functions
    on (0, 1), at common order m in {0, -1}.

    Vanishes for n != np_; for other orders the weight's endpoint behavior
    is non-integrable and the request is rejected.
    """
    if m not in (0, -1):
        raise ValueError("integral diverges unless m is 0 or -1")
    fn = octahedral.generate(n, m)

    def integrand(s: float) -> float:
        u = s ** 4
        qv = _q_v(s)
        qf = _q_f(s)
        left = qv ** (-2 * m) * qf ** (-1.5 * n) * fn.eval(u)
        right = qv ** (-2 * m) * qf ** (-1.5 * np_) * _rotated_factor(np_, m, s)
        return left * right * qv ** 2 / qf ** 2

    # Net endpoint powers of s at 0 and (1-s) at 1 for the whole integrand;
    # nonnegative in both allowed orders, so the integrand is bounded.
    exponents = (2.0, 3.0) if m == 0 else (3.0, 0.0)
    # The two brackets cancel to ~1e-13 of their own size, so the panels
    # must each converge to near machine precision; more panels for the
    # sharper peaks that come with larger indices.
    count = max(2, 1 + max(abs(n), abs(np_)))
    cuts = [i / count for i in range(count + 1)]
    return _piecewise_quad(integrand, cuts, exponents)


# ---------------------------------------------------------------------------
# Bilateral expansions in a fractional-degree Ferrers basis.

@dataclass(frozen=True)
class ExpansionSpec:
    """Truncated bilateral expansion request: base degree nu0, common order
    mu, truncation N (terms n = -N..N, degrees nu0 + 2n), and the function
    to expand."""

    nu0: float
    mu: float
    N: int
    f: Callable[[float], float]

    def __post_init__(self):
        if not -1.0 < self.mu < 1.0:
            raise ValueError(f"order mu={self.mu} outside (-1, 1)")
        if self.N < 0:
            raise ValueError("truncation N must be >= 0")
        # nu0 + 2n is half-odd for some n iff nu0 itself is.
        if _half_odd(self.nu0):
            raise ValueError(f"base degree {self.nu0} is a half-odd integer")

    def degree(self, n: int) -> float:
        return self.nu0 + 2 * n


@dataclass(frozen=True)
class LHExpansion:
    """Computed bilateral expansion: coefficient, numerator and denominator
    per index, the basis evaluator, and partial sums."""

    spec: ExpansionSpec
    basis: str
    coefficients: Dict[int, float]
    numerators: Dict[int, QuadResult]
    denominators: Dict[int, QuadResult]
    _basis_fn: Callable[[int, float], float] = field(repr=False)

    def basis_function(self, n: int, z: float) -> float:
        return self._basis_fn(n, z)

    def partial_sum(self, z: float, upto: Optional[int] = None) -> float:
        """Sum of coefficient * basis over |n| <= upto (default: all)."""
        limit = self.spec.N if upto is None else min(upto, self.spec.N)
        return math.fsum(
            self.coefficients[n] * self._basis_fn(n, z)
            for n in range(-limit, limit + 1)
        )


def _dihedral_alpha(nu0: float) -> float:
    return nu0 + 0.5


def lh_coefficients(spec: ExpansionSpec, breakpoints: Sequence[float] = ()) -> LHExpansion:
    """Compute the 2N+1 expansion coefficients of spec.f.

    Each coefficient is the reflection-pairing inner product of f with the
    paired basis element, divided by the diagonal pairing of the basis
    element itself.  ``breakpoints`` lists interior z-values where f is
    allowed to jump; they become quadrature panel boundaries.

    At order exactly -1/2 the basis collapses to sines and cosines over
    sqrt(sin theta) and everything is computed in theta-space, which is
    both faster and exact-friendly; the coefficients returned are for the
    rescaled sine basis sin((2n + alpha) theta) / sin(theta / 2) with
    alpha = nu0 + 1/2, whose diagonal pairing is the constant
    (pi / 2) sin(alpha pi).
    """
    if spec.mu == -0.5:
        return _lh_dihedral(spec, breakpoints)
    return _lh_ferrers(spec, breakpoints)


def _lh_ferrers(spec: ExpansionSpec, breakpoints: Sequence[float]) -> LHExpansion:
    mu = spec.mu
    exponents = (-abs(mu) / 2.0, -abs(mu) / 2.0)
    numerators: Dict[int, QuadResult] = {}
    denominators: Dict[int, QuadResult] = {}
    coefficients: Dict[int, float] = {}
    for n in range(-spec.N, spec.N + 1):
        nu = spec.degree(n)

        def paired(z: float, nu=nu) -> float:
            return ferrers_P(nu, -mu, -z)

        cuts = _theta_cuts(abs(nu), breakpoints)
        num = _piecewise_quad(lambda z: spec.f(z) * paired(z), cuts, exponents)
        den = _piecewise_quad(lambda z: ferrers_P(nu, mu, z) * paired(z), cuts, exponents)
        if abs(den.value) <= max(1e-8, 100.0 * den.err_estimate):
            raise ValueError(
                f"degenerate diagonal pairing at degree {nu}: {den.value}")
        numerators[n] = num
        denominators[n] = den
        coefficients[n] = num.value / den.value

    def basis_fn(n: int, z: float) -> float:
        return ferrers_P(spec.degree(n), mu, z)

    return LHExpansion(spec, "ferrers", coefficients, numerators, denominators, basis_fn)


def _lh_dihedral(spec: ExpansionSpec, breakpoints: Sequence[float]) -> LHExpansion:
    alpha = _dihedral_alpha(spec.nu0)
    den_value = (math.pi / 2.0) * math.sin(alpha * math.pi)
    if abs(den_value) <= 1e-8:
        raise ValueError(
            f"degenerate diagonal pairing: alpha={alpha} is an integer")
    theta_cuts = sorted({0.0, math.pi}
                        | {math.acos(z) for z in breakpoints if -1.0 < z < 1.0})
    numerators: Dict[int, QuadResult] = {}
    denominators: Dict[int, QuadResult] = {}
    coefficients: Dict[int, float] = {}
    for n in range(-spec.N, spec.N + 1):
        beta = 2 * n + alpha

        def integrand(theta: float, beta=beta) -> float:
            # f against the cosine partner of the rescaled pair times the
            # sin^2(theta/2) weight; one sin(theta/2) cancels into the
            # partner's denominator.
            return (spec.f(_interior_cos(theta))
                    * math.cos(beta * (math.pi - theta))
                    * math.sin(0.5 * theta))

        freq = abs(beta) + 1.0
        cuts = _refine_cuts(theta_cuts, max(1, math.ceil(freq / 3.0)))
        num = _piecewise_quad(integrand, cuts, (0.0, 0.0))
        numerators[n] = num
        denominators[n] = QuadResult(den_value, 0.0, 0)
        coefficients[n] = num.value / den_value

    def basis_fn(n: int, z: float) -> float:
        beta = 2 * n + alpha
        if abs(z) > 1.0:
            if abs(z) > 1.0 + 1e-12:
                raise ValueError(f"argument {z} outside [-1, 1]")
            z = math.copysign(1.0, z)
        if z == 1.0:
            return 2.0 * beta
        if z == -1.0:
            return math.sin(beta * math.pi)
        theta = math.acos(z)
        return math.sin(beta * theta) / math.sin(0.5 * theta)

    return LHExpansion(spec, "dihedral-trig", coefficients, numerators,
                       denominators, basis_fn)


def _interior_cos(theta: float) -> float:
    """cos(theta) nudged into the open interval (-1, 1).

    For theta below ~1.5e-8 the cosine rounds onto 1.0 exactly; mesh nodes
    that deep still carry weight near 1e-8, so the functions being
    expanded are evaluated at the adjacent interior float instead (they
    are continuous up to the closed endpoints, so the substitution is
    below float resolution).
    """
    z = math.cos(theta)
    if z >= 1.0:
        return _BELOW_ONE
    if z <= -1.0:
        return -_BELOW_ONE
    return z


_BELOW_ONE = math.nextafter(1.0, 0.0)

# Angles closer than this to 0 or pi have a cosine that rounds onto +-1.
_THETA_FLOOR = 1.5e-8


def _refine_cuts(cuts: Sequence[float], pieces: int) -> list:
    """Split every [cuts[i], cuts[i+1]] into `pieces` equal panels."""
    out = set()
    for i in range(len(cuts) - 1):
        a, b = cuts[i], cuts[i + 1]
        out.update(a + (b - a) * j / pieces for j in range(pieces + 1))
    return sorted(out)


# ---------------------------------------------------------------------------
# Fourth-kind Chebyshev polynomials and their bilateral expansions.

def chebyshev_w(j: int, z: float) -> float:
    """Fourth-kind Chebyshev polynomial W_j(z) = sin((j + 1/2) theta) /
    sin(theta / 2) with z = cos theta, for j >= 0 on [-1, 1]."""
    if j < 0:
        raise ValueError("degree j must be >= 0")
    if abs(z) > 1.0:
        if abs(z) > 1.0 + 1e-12:
            raise ValueError(f"argument {z} outside [-1, 1]")
        z = math.copysign(1.0, z)
    if z == 1.0:
        return 2.0 * j + 1.0
    if z == -1.0:
        return float((-1) ** j)
    theta = math.acos(z)
    return math.sin((j + 0.5) * theta) / math.sin(0.5 * theta)


def pinsky_basis(n: int, alpha: float, theta: float) -> Tuple[float, float]:
    """The rescaled dihedral pair at angle theta in (0, pi):
    sin((2n + alpha) theta) / sin(theta / 2) and its cosine partner
    cos((2n + alpha) (pi - theta)) / sin(theta / 2).

    At alpha = 1/2 both reduce to fourth-kind Chebyshev polynomials of
    even degree in cos theta (up to sign for n < 0).
    """
    if not 0.0 < theta < math.pi:
        raise ValueError(f"theta={theta} outside (0, pi)")
    beta = 2 * n + alpha
    s = math.sin(0.5 * theta)
    return (math.sin(beta * theta) / s,
            math.cos(beta * (math.pi - theta)) / s)


@dataclass(frozen=True)
class WExpansion:
    """Truncated fourth-kind Chebyshev expansion: bilateral coefficients
    indexed by n in [-N, N], the equivalent unilateral coefficients of
    W_0..W_2N, and a reconstruction evaluator."""

    N: int
    bilateral: Dict[int, float]
    unilateral: Tuple[float, ...]

    def reconstruct(self, z: float) -> float:
        return math.fsum(
            b * chebyshev_w(j, z) for j, b in enumerate(self.unilateral) if b
        )


def w_expansion(f: Callable[[float], float], N: int,
                breakpoints: Sequence[float] = ()) -> WExpansion:
    """Expand f over [-1, 1] in fourth-kind Chebyshev polynomials through
    degree 2N, computed as the alpha = 1/2 bilateral expansion.

    The bilateral coefficient at index n is a cosine-moment difference:
    the cosine partner times the sin^2(theta/2) weight collapses, by a
    product-to-sum identity at half-integer frequency, to
    (cos(2 n theta) - cos((2 n + 1) theta)) / 2, so with
    a_k = integral of f(cos theta) cos(k theta) over (0, pi) the
    coefficient is (a_{|2n|} - a_{|2n+1|}) / pi; the diagonal pairing is
    (pi / 2) sin(pi / 2) = pi / 2 exactly.  For piecewise-continuous f the
    reconstruction converges to f at every interior continuity point and
    to the average of the one-sided limits at a jump.
    """
    if N < 0:
        raise ValueError("truncation N must be >= 0")
    theta_cuts = sorted({0.0, math.pi}
                        | {math.acos(z) for z in breakpoints if -1.0 < z < 1.0})
    moments = []
    for k in range(2 * N + 2):
        def integrand(theta: float, k=k) -> float:
            return f(_interior_cos(theta)) * math.cos(k * theta)

        cuts = _refine_cuts(theta_cuts, max(1, (k + 7) // 8))
        moments.append(_piecewise_quad(integrand, cuts, (0.0, 0.0)).value)
    bilateral: Dict[int, float] = {}
    unilateral = [0.0] * (2 * N + 1)
    for n in range(-N, N + 1):
        c = (moments[abs(2 * n)] - moments[abs(2 * n + 1)]) / math.pi
        bilateral[n] = c
        if n >= 0:
            unilateral[2 * n] += c
        else:
            # At alpha = 1/2 the index -n basis element is -W_{-2n-1}.
            unilateral[-2 * n - 1] -= c
    return WExpansion(N, bilateral, tuple(unilateral))
