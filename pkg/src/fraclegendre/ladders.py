"""Differential and three-term recurrences on the (degree, order) lattice.

The eight differential ladder steps (four +- pairs) are tabulated as
:class:`LadderStep` records and checked numerically; the three-term
recurrences (order, degree, and the two diagonals) serve both as identity
checks and as propagators that fill an index window from two seed values.

Kinds name the function family being stepped: ``ferrers_p``, ``ferrers_q``,
``legendre_p``, ``legendre_qhat``.  Ferrers P and Q satisfy identical
recurrences; the Legendre forms pick up sign factors (powers of i that are
always real here) and replace 1-z^2 by z^2-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Optional, Tuple

from . import oracle

__all__ = [
    "LadderStep",
    "TABLE2",
    "ladder_step",
    "diff_recurrence_check",
    "three_term_check",
    "propagate",
]

KINDS = ("ferrers_p", "ferrers_q", "legendre_p", "legendre_qhat")

_PIVOT_TOL = 1e-9


def _eval(kind: str, nu: float, mu: float, z: float) -> float:
    if kind == "ferrers_p":
        return oracle.ferrers_P(nu, mu, z)
    if kind == "ferrers_q":
        return oracle.ferrers_Q(nu, mu, z)
    if kind == "legendre_p":
        return oracle.legendre_P(nu, mu, z)
    if kind == "legendre_qhat":
        return oracle.legendre_Qhat(nu, mu, z)
    raise ValueError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class LadderStep:
    """One differential recurrence: index shift, exponents, and prefactor.

    The step realizes  alpha * F_{nu+dnu}^{mu+dmu} =
    -direction * z^(-sigma0+eps0) W^((-sigma1+eps1)/2)
    d/dz [ z^sigma0 W^(sigma1/2) F ],  W = 1-z^2 (Ferrers) or z^2-1
    (Legendre, with an extra real power of i).
    """

    delta: Tuple[int, int]
    sigma0: Callable[[float, float], float]
    sigma1: Callable[[float, float], float]
    eps0: int
    eps1: int
    alpha: Callable[[float, float], float]
    direction: int


def _build_table() -> Dict[Tuple[int, int], LadderStep]:
    zero = lambda nu, mu: 0.0
    return {
        (0, 1): LadderStep(
            (0, 1), zero, lambda nu, mu: -mu, 0, 1, lambda nu, mu: 1.0, +1
        ),
        (0, -1): LadderStep(
            (0, -1), zero, lambda nu, mu: mu, 0, 1,
            lambda nu, mu: (nu + mu) * (nu - mu + 1.0), -1,
        ),
        (1, 0): LadderStep(
            (1, 0), zero, lambda nu, mu: nu + 1.0, 0, 2,
            lambda nu, mu: nu - mu + 1.0, +1,
        ),
        (-1, 0): LadderStep(
            (-1, 0), zero, lambda nu, mu: -nu, 0, 2,
            lambda nu, mu: nu + mu, -1,
        ),
        (1, 1): LadderStep(
            (1, 1), lambda nu, mu: nu + mu + 1.0, lambda nu, mu: -mu, 1, 1,
            lambda nu, mu: 1.0, +1,
        ),
        (-1, -1): LadderStep(
            (-1, -1), lambda nu, mu: -nu - mu, lambda nu, mu: mu, 1, 1,
            lambda nu, mu: (nu + mu) * (nu + mu - 1.0), -1,
        ),
        # sigma0 and the prefix sign of this pair are fixed by matching the
        # trigonometric forms of the same steps; the z-form as first written
        # down is inconsistent with them (checked numerically against both
        # first- and second-kind functions).
        (1, -1): LadderStep(
            (1, -1), lambda nu, mu: nu - mu + 1.0, lambda nu, mu: mu, 1, 1,
            lambda nu, mu: (nu - mu + 1.0) * (nu - mu + 2.0), -1,
        ),
        (-1, 1): LadderStep(
            (-1, 1), lambda nu, mu: mu - nu, lambda nu, mu: -mu, 1, 1,
            lambda nu, mu: 1.0, +1,
        ),
    }


TABLE2: Dict[Tuple[int, int], LadderStep] = _build_table()


def ladder_step(delta: Tuple[int, int]) -> LadderStep:
    try:
        return TABLE2[tuple(delta)]
    except KeyError:
        raise ValueError(f"no ladder step with shift {delta!r}") from None


def _is_circular(kind: str) -> bool:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    return kind.startswith("ferrers")


def _step_sign(kind: str, step: LadderStep) -> float:
    """The -direction prefix, folded with the Legendre power of i (real)."""
    sign = -float(step.direction)
    dmu = step.delta[1]
    if kind == "legendre_p":
        sign *= (-1.0) ** ((step.eps1 + dmu) // 2)
    elif kind == "legendre_qhat":
        sign *= (-1.0) ** ((step.eps1 - dmu) // 2)
    return sign


def diff_recurrence_check(
    kind: str, nu: float, mu: float, theta: float, step: LadderStep, h: float = 1e-5
) -> float:
    """Scaled residual of one differential recurrence at parameter theta.

    Ferrers kinds read theta as the circular angle (z = cos theta); Legendre
    kinds read it as the hyperbolic one (z = cosh theta).  The derivative is
    a central difference in theta, so the residual floor is ~h^2 relative.
    """
    circular = _is_circular(kind)
    zfun = math.cos if circular else math.cosh
    dz_dt = -math.sin(theta) if circular else math.sinh(theta)

    def F(t: float) -> float:
        return _eval(kind, nu, mu, zfun(t))

    z = zfun(theta)
    W = 1.0 - z * z if circular else z * z - 1.0
    f0 = F(theta)
    dF_dz = (F(theta + h) - F(theta - h)) / (2.0 * h) / dz_dt
    s0 = step.sigma0(nu, mu)
    s1 = step.sigma1(nu, mu)
    e0, e1 = step.eps0, step.eps1
    val = z**e0 * W ** (e1 / 2.0) * dF_dz
    if s0 != 0.0:
        # eps0 = 1 on every row with nonzero sigma0, so no 1/z appears
        val += s0 * z ** (e0 - 1) * W ** (e1 / 2.0) * f0
    wsign = -1.0 if circular else 1.0
    val += wsign * s1 * z ** (e0 + 1) * W ** (e1 / 2.0 - 1.0) * f0
    rhs = _step_sign(kind, step) * val
    lhs = step.alpha(nu, mu) * _eval(
        kind, nu + step.delta[0], mu + step.delta[1], z
    )
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def _kind_signs(kind: str) -> Tuple[float, float, float]:
    """(a, b, g): signs on the mu+1 term, the mu-1 term, and the middle
    (2 nu + 1) W part of the diagonal recurrences."""
    if kind in ("ferrers_p", "ferrers_q"):
        return 1.0, 1.0, 1.0
    if kind == "legendre_p":
        return 1.0, -1.0, -1.0
    if kind == "legendre_qhat":
        return -1.0, 1.0, -1.0
    raise ValueError(f"unknown kind {kind!r}")


def three_term_check(kind: str, nu: float, mu: float, z: float, which: str) -> float:
    """Scaled residual of one three-term recurrence at (nu, mu, z)."""
    circular = _is_circular(kind)
    W = 1.0 - z * z if circular else z * z - 1.0
    if W <= 0.0:
        raise ValueError("z outside the kind's natural domain")
    rt = math.sqrt(W)
    a, b, g = _kind_signs(kind)
    if which == "order":
        terms = (
            a * rt * _eval(kind, nu, mu + 1.0, z),
            2.0 * mu * z * _eval(kind, nu, mu, z),
            b * (nu + mu) * (nu - mu + 1.0) * rt * _eval(kind, nu, mu - 1.0, z),
        )
    elif which == "degree":
        terms = (
            (nu - mu + 1.0) * _eval(kind, nu + 1.0, mu, z),
            -(2.0 * nu + 1.0) * z * _eval(kind, nu, mu, z),
            (nu + mu) * _eval(kind, nu - 1.0, mu, z),
        )
    elif which in ("diag+", "diag-"):
        pm = 1.0 if which == "diag+" else -1.0
        c = ((nu + 0.5) + pm * (mu - 0.5)) * ((nu + 0.5) + pm * (mu - 1.5))
        terms = (
            a * rt * _eval(kind, nu + pm, mu + 1.0, z),
            (g * pm * (2.0 * nu + 1.0) * W + 2.0 * mu) * _eval(kind, nu, mu, z),
            b * c * rt * _eval(kind, nu - pm, mu - 1.0, z),
        )
    else:
        raise ValueError("which must be 'order', 'degree', 'diag+', or 'diag-'")
    return abs(sum(terms)) / max(1.0, *map(abs, terms))


def propagate(
    kind: str,
    nu0: float,
    mu0: float,
    z: float,
    targets: Iterable[Tuple[int, int]],
) -> Dict[Tuple[int, int], Optional[float]]:
    """Fill lattice entries (nu0+n, mu0+m) from the two seeds (0,0), (0,1).

    Values spread through the window by the three-term recurrences (order,
    degree, diagonals) plus single-row diagonal steps obtained from the
    differential ladder pairs.  An entry stays None when every route to it
    crosses a vanishing recurrence coefficient; such entries are genuinely
    outside the rational span of the seeds.
    """
    circular = _is_circular(kind)
    W = 1.0 - z * z if circular else z * z - 1.0
    if W <= 0.0:
        raise ValueError("z outside the kind's natural domain")
    rt = math.sqrt(W)
    a, b, g = _kind_signs(kind)
    # sign on the sqrt-W term of the one-row diagonal up-step
    e_up = 1.0 if kind == "legendre_p" else -1.0
    # sign on the sqrt-W term of the pivoted down-step
    q_dn = 1.0 if kind == "legendre_qhat" else -1.0
    refl_ok = kind in ("ferrers_p", "legendre_p")
    f_refl = 1.0 if kind == "ferrers_p" else -1.0

    target_list = {tuple(t) for t in targets}
    n_lo = min(0, *(n for n, _ in target_list))
    n_hi = max(0, *(n for n, _ in target_list))
    m_lo = min(0, *(m for _, m in target_list))
    m_hi = max(1, *(m for _, m in target_list))
    halo = (n_hi - n_lo) + 2
    rows = range(n_lo, n_hi + 1)
    cols = range(m_lo - halo, m_hi + halo + 1)

    vals: Dict[Tuple[int, int], float] = {
        (0, 0): _eval(kind, nu0, mu0, z),
        (0, 1): _eval(kind, nu0, mu0 + 1.0, z),
    }

    def known(*cells):
        return all(c in vals for c in cells)

    def attempt(cell: Tuple[int, int]) -> Optional[float]:
        n, m = cell
        nu = nu0 + n
        mu = mu0 + m
        # order recurrence, centered one column left
        if known((n, m - 1), (n, m - 2)):
            mc = mu - 1.0
            val = -(
                2.0 * mc * z * vals[(n, m - 1)]
                + b * (nu + mc) * (nu - mc + 1.0) * rt * vals[(n, m - 2)]
            ) / (a * rt)
            return val
        # order recurrence, centered one column right
        if known((n, m + 1), (n, m + 2)):
            mc = mu + 1.0
            pivot = b * (nu + mc) * (nu - mc + 1.0) * rt
            if abs((nu + mc) * (nu - mc + 1.0)) > _PIVOT_TOL:
                return -(
                    a * rt * vals[(n, m + 2)] + 2.0 * mc * z * vals[(n, m + 1)]
                ) / pivot
        # degree recurrence, centered one row below
        if known((n - 1, m), (n - 2, m)):
            nc = nu - 1.0
            if abs(nc - mu + 1.0) > _PIVOT_TOL:
                return (
                    (2.0 * nc + 1.0) * z * vals[(n - 1, m)]
                    - (nc + mu) * vals[(n - 2, m)]
                ) / (nc - mu + 1.0)
        # degree recurrence, centered one row above
        if known((n + 1, m), (n + 2, m)):
            nc = nu + 1.0
            if abs(nc + mu) > _PIVOT_TOL:
                return (
                    (2.0 * nc + 1.0) * z * vals[(n + 1, m)]
                    - (nc - mu + 1.0) * vals[(n + 2, m)]
                ) / (nc + mu)
        # one-row diagonal up-step (from the +(1,1) ladder), pivot-free
        if known((n - 1, m), (n - 1, m - 1)):
            nc, mc = nu - 1.0, mu - 1.0
            return z * vals[(n - 1, m)] + e_up * (nc + mc + 1.0) * rt * vals[
                (n - 1, m - 1)
            ]
        # one-row reflection down-step (first-kind functions only)
        if refl_ok and known((n + 1, m), (n + 1, m - 1)):
            nc, mc = nu + 1.0, mu - 1.0
            return z * vals[(n + 1, m)] + f_refl * (nc - mc) * rt * vals[
                (n + 1, m - 1)
            ]
        # pivoted down-step (from the -(1,1) ladder)
        if known((n + 1, m), (n + 1, m + 1)):
            nc, mc = nu + 1.0, mu + 1.0
            if abs(nc + mc) > _PIVOT_TOL and abs(nc + mc - 1.0) > _PIVOT_TOL:
                return (
                    (nc - mc + 1.0) * z * vals[(n + 1, m)]
                    + q_dn * rt * vals[(n + 1, m + 1)]
                ) / (nc + mc - 1.0)
        # printed diagonal recurrences solved for their upper corner
        if known((n - 1, m - 1), (n - 2, m - 2)):
            nc, mc = nu - 1.0, mu - 1.0
            cpl = ((nc + 0.5) + (mc - 0.5)) * ((nc + 0.5) + (mc - 1.5))
            return -(
                (g * (2.0 * nc + 1.0) * W + 2.0 * mc) * vals[(n - 1, m - 1)]
                + b * cpl * rt * vals[(n - 2, m - 2)]
            ) / (a * rt)
        if known((n + 1, m - 1), (n + 2, m - 2)):
            nc, mc = nu + 1.0, mu - 1.0
            cmi = ((nc + 0.5) - (mc - 0.5)) * ((nc + 0.5) - (mc - 1.5))
            return -(
                (-g * (2.0 * nc + 1.0) * W + 2.0 * mc) * vals[(n + 1, m - 1)]
                + b * cmi * rt * vals[(n + 2, m - 2)]
            ) / (a * rt)
        return None

    changed = True
    guard = 0
    while changed and guard < 10 * (len(rows) * len(cols) + 4):
        changed = False
        guard += 1
        for n in rows:
            for m in cols:
                if (n, m) in vals:
                    continue
                got = attempt((n, m))
                if got is not None:
                    vals[(n, m)] = got
                    changed = True
    return {t: vals.get(t) for t in target_list}
