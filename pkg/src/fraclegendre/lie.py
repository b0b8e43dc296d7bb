"""Ladder-operator matrices on a finite index window, and the Lie-algebraic
structure built on them: real-form tensor operators, Casimir invariants, and
the skew-Hermiticity report for the distinguished integer and half-odd bases.

Index cells are integer offsets (n, m) from a base (nu0, mu0); a cell stands
for the function of degree nu0 + n and order mu0 + m.  Matrices are sparse,
keyed (row_cell, col_cell).  Every matrix carries its reach (`bw`, how far a
single application moves an index) and a trust radius (`shrink`, how far a
column must sit from the window boundary for its entries to equal those of
the corresponding infinite matrix).  Products grow both, so a truncated
boundary column can never silently pollute an interior assertion.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import oracle

__all__ = [
    "LADDER_LABELS",
    "REAL_FORMS",
    "Window",
    "OpMatrix",
    "TensorOperator",
    "build_ladders",
    "commutator",
    "cartesian_basis",
    "build_real_form",
    "check_structure",
    "casimir2_matrix",
    "casimir2",
    "casimir2_ladder_matrix",
    "casimir4_vector",
    "casimir4",
    "cartan_weyl_residual",
    "scalar_matrix",
    "singleton_check",
    "solid_harmonic",
    "conformal_ops_check",
]

Cell = Tuple[int, int]

LADDER_LABELS = ("J+", "J-", "K+", "K-", "R+", "R-", "S+", "S-", "J3", "K3")

REAL_FORMS = ("so32-A", "so41", "so32-B", "so5R")

# index displacement delta(n, m) of each ladder
_DELTAS: Dict[str, Cell] = {
    "J+": (0, 1), "J-": (0, -1),
    "K+": (1, 0), "K-": (-1, 0),
    "R+": (1, 1), "R-": (-1, -1),
    "S+": (1, -1), "S-": (-1, 1),
    "J3": (0, 0), "K3": (0, 0),
}


@dataclass(frozen=True)
class Window:
    """Finite rectangle of index offsets with an interior trust margin."""

    nu0: float
    mu0: float
    n_range: Tuple[int, int]
    m_range: Tuple[int, int]
    margin: int = 2

    def __post_init__(self) -> None:
        if self.n_range[0] > self.n_range[1] or self.m_range[0] > self.m_range[1]:
            raise ValueError("empty index range")
        if self.margin < 2:
            raise ValueError("margin must be at least 2")

    def cells(self) -> Iterator[Cell]:
        for n in range(self.n_range[0], self.n_range[1] + 1):
            for m in range(self.m_range[0], self.m_range[1] + 1):
                yield (n, m)

    def contains(self, cell: Cell) -> bool:
        n, m = cell
        return (
            self.n_range[0] <= n <= self.n_range[1]
            and self.m_range[0] <= m <= self.m_range[1]
        )

    def distance(self, cell: Cell) -> int:
        """Chebyshev distance from the window boundary."""
        n, m = cell
        return min(
            n - self.n_range[0],
            self.n_range[1] - n,
            m - self.m_range[0],
            self.m_range[1] - m,
        )

    def interior(self, shrink: int = 0) -> List[Cell]:
        s = max(self.margin, shrink)
        return [c for c in self.cells() if self.distance(c) >= s]

    def params(self, cell: Cell) -> Tuple[float, float]:
        return self.nu0 + cell[0], self.mu0 + cell[1]


class OpMatrix:
    """Sparse operator matrix over a window's cells.

    Immutable by convention: arithmetic returns fresh instances and entries
    are never mutated after construction.
    """

    __slots__ = ("window", "entries", "label", "bw", "shrink", "delta")

    def __init__(
        self,
        window: Window,
        entries: Dict[Tuple[Cell, Cell], complex],
        label: str = "",
        bw: int = 0,
        shrink: int = 0,
        delta: Optional[Cell] = None,
    ) -> None:
        self.window = window
        self.entries = dict(entries)
        self.label = label
        self.bw = bw
        self.shrink = shrink
        self.delta = delta

    def _check_window(self, other: "OpMatrix") -> None:
        if self.window != other.window:
            raise ValueError("operator windows do not match")

    def entry(self, row: Cell, col: Cell) -> complex:
        return self.entries.get((row, col), 0.0 + 0.0j)

    def column(self, col: Cell) -> Dict[Cell, complex]:
        return {r: v for (r, c), v in self.entries.items() if c == col}

    def __add__(self, other: "OpMatrix") -> "OpMatrix":
        self._check_window(other)
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out.get(key, 0.0) + v
        return OpMatrix(
            self.window, out,
            bw=max(self.bw, other.bw), shrink=max(self.shrink, other.shrink),
        )

    def __sub__(self, other: "OpMatrix") -> "OpMatrix":
        return self + (-1.0) * other

    def __neg__(self) -> "OpMatrix":
        return (-1.0) * self

    def __mul__(self, scalar: complex) -> "OpMatrix":
        return OpMatrix(
            self.window,
            {k: scalar * v for k, v in self.entries.items()},
            bw=self.bw, shrink=self.shrink, delta=self.delta,
        )

    __rmul__ = __mul__

    def __matmul__(self, other: "OpMatrix") -> "OpMatrix":
        self._check_window(other)
        by_col: Dict[Cell, List[Tuple[Cell, complex]]] = {}
        for (r, c), v in self.entries.items():
            by_col.setdefault(c, []).append((r, v))
        out: Dict[Tuple[Cell, Cell], complex] = {}
        for (k, c), vb in other.entries.items():
            for r, va in by_col.get(k, ()):
                key = (r, c)
                out[key] = out.get(key, 0.0) + va * vb
        return OpMatrix(
            self.window, out,
            bw=self.bw + other.bw,
            shrink=max(self.shrink + other.bw, other.shrink + self.bw),
        )

    def dagger(self) -> "OpMatrix":
        return OpMatrix(
            self.window,
            {(c, r): v.conjugate() for (r, c), v in self.entries.items()},
            bw=self.bw, shrink=self.shrink,
        )

    def transpose(self) -> "OpMatrix":
        return OpMatrix(
            self.window,
            {(c, r): v for (r, c), v in self.entries.items()},
            bw=self.bw, shrink=self.shrink,
        )

    def restrict(self, cells: Iterable[Cell]) -> "OpMatrix":
        keep = set(cells)
        return OpMatrix(
            self.window,
            {(r, c): v for (r, c), v in self.entries.items()
             if r in keep and c in keep},
            bw=self.bw, shrink=self.shrink,
        )

    def max_on(self, cells: Iterable[Cell]) -> float:
        keep = set(cells)
        vals = [abs(v) for (r, c), v in self.entries.items()
                if r in keep and c in keep]
        return max(vals) if vals else 0.0

    def interior_cells(self) -> List[Cell]:
        cells = self.window.interior(self.shrink)
        if not cells:
            raise ValueError("window too small for a trusted interior")
        return cells

    def interior_max(self) -> float:
        return self.max_on(self.interior_cells())

    def diagonal(self) -> Dict[Cell, complex]:
        return {c: self.entry(c, c) for c in self.interior_cells()}


def _zero(w: Window) -> OpMatrix:
    return OpMatrix(w, {}, label="0")


def scalar_matrix(w: Window, value: complex) -> OpMatrix:
    """value times the identity on every window cell."""
    return OpMatrix(w, {(c, c): complex(value) for c in w.cells()})


def _untwisted_coeff(label: str) -> Callable[[float, float], complex]:
    return {
        "J+": lambda nu, mu: 1.0,
        "J-": lambda nu, mu: (nu + mu) * (nu - mu + 1.0),
        "K+": lambda nu, mu: nu - mu + 1.0,
        "K-": lambda nu, mu: nu + mu,
        "R+": lambda nu, mu: 1.0,
        "R-": lambda nu, mu: (nu + mu) * (nu + mu - 1.0),
        "S+": lambda nu, mu: (nu - mu + 1.0) * (nu - mu + 2.0),
        "S-": lambda nu, mu: 1.0,
        "J3": lambda nu, mu: mu,
        "K3": lambda nu, mu: nu + 0.5,
    }[label]


def _twisted_coeff(label: str) -> Callable[[float, float], complex]:
    # radicands of the square-root normalization; negative radicands take
    # the principal branch (positive imaginary part)
    radicands = {
        "J+": lambda nu, mu: (nu - mu) * (nu + mu + 1.0),
        "J-": lambda nu, mu: (nu - mu + 1.0) * (nu + mu),
        "K+": lambda nu, mu: (nu - mu + 1.0) * (nu + mu + 1.0),
        "K-": lambda nu, mu: (nu - mu) * (nu + mu),
        "R+": lambda nu, mu: (nu + mu + 1.0) * (nu + mu + 2.0),
        "R-": lambda nu, mu: (nu + mu) * (nu + mu - 1.0),
        "S+": lambda nu, mu: (nu - mu + 1.0) * (nu - mu + 2.0),
        "S-": lambda nu, mu: (nu - mu) * (nu - mu - 1.0),
    }
    if label in ("J3", "K3"):
        return _untwisted_coeff(label)
    rad = radicands[label]
    return lambda nu, mu: cmath.sqrt(complex(rad(nu, mu)))


def build_ladders(w: Window, twisted: bool = False) -> Dict[str, OpMatrix]:
    """The ten ladder matrices J+-, K+-, R+-, S+-, J3, K3 on the window."""
    out: Dict[str, OpMatrix] = {}
    for label in LADDER_LABELS:
        delta = _DELTAS[label]
        coeff = _twisted_coeff(label) if twisted else _untwisted_coeff(label)
        entries: Dict[Tuple[Cell, Cell], complex] = {}
        for cell in w.cells():
            target = (cell[0] + delta[0], cell[1] + delta[1])
            if not w.contains(target):
                continue
            nu, mu = w.params(cell)
            v = complex(coeff(nu, mu))
            if v != 0.0:
                entries[(target, cell)] = v
        bw = max(abs(delta[0]), abs(delta[1]))
        out[label] = OpMatrix(w, entries, label=label, bw=bw, shrink=bw, delta=delta)
    return out


def commutator(a: OpMatrix, b: OpMatrix) -> OpMatrix:
    return a @ b - b @ a


def cartesian_basis(lads: Dict[str, OpMatrix]) -> Dict[str, OpMatrix]:
    """Rotation, translation/conformal mixtures, and dilatation matrices.

    Keys: iJ1, iJ2, iJ3, PC1+, PC2+, PC3+, PC1-, PC2-, PC3-, D.  The PC
    combinations are the half-sum and half-difference of the translation
    and special-conformal triples, expressed in ladder terms.
    """
    jp, jm = lads["J+"], lads["J-"]
    kp, km = lads["K+"], lads["K-"]
    rp, rm = lads["R+"], lads["R-"]
    sp, sm = lads["S+"], lads["S-"]
    out = {
        "iJ1": 0.5j * (jp + jm),
        "iJ2": 0.5 * (jp - jm),
        "iJ3": 1j * lads["J3"],
        "D": lads["K3"],
    }
    for sign, tag in ((1.0, "+"), (-1.0, "-")):
        out[f"PC1{tag}"] = 0.25 * (-sign * rp - rm + sign * sp + sm)
        out[f"PC2{tag}"] = -0.25j * (-sign * rp + rm - sign * sp + sm)
        out[f"PC3{tag}"] = 0.5 * (sign * kp + km)
    return out


@dataclass(frozen=True)
class TensorOperator:
    """5x5 skew-symmetric array of operator matrices with a diagonal metric."""

    window: Window
    form: str
    m: Tuple[Tuple[OpMatrix, ...], ...]
    gamma: Tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        for a in range(5):
            for b in range(5):
                skew = self.m[a][b] + self.m[b][a]
                if skew.entries and max(abs(v) for v in skew.entries.values()) != 0.0:
                    raise ValueError("tensor operator is not skew-symmetric")


def build_real_form(w: Window, form: str) -> TensorOperator:
    """Assemble one of the four real-form tensor operators on the window."""
    if form not in REAL_FORMS:
        raise ValueError(f"unknown real form {form!r}")
    lads = build_ladders(w, twisted=False)
    bas = cartesian_basis(lads)
    dmat = bas["D"]

    if form == "so32-A":
        # all entries real: uses the half-sum/half-difference combinations
        # without i-factors
        jp, jm = lads["J+"], lads["J-"]
        j1, j2, j3 = 0.5 * (jp + jm), 0.5 * (jp - jm), lads["J3"]
        pc = {
            (i, tag): (1j * bas[f"PC2{tag}"] if i == 2 else bas[f"PC{i}{tag}"])
            for i in (1, 2, 3) for tag in ("+", "-")
        }
        rows = [
            [None, pc[(2, "-")], -pc[(1, "-")], -pc[(3, "-")], -dmat],
            [-pc[(2, "-")], None, j3, -j1, pc[(2, "+")]],
            [pc[(1, "-")], -j3, None, j2, -pc[(1, "+")]],
            [pc[(3, "-")], j1, -j2, None, -pc[(3, "+")]],
            [dmat, -pc[(2, "+")], pc[(1, "+")], pc[(3, "+")], None],
        ]
        gamma = (1, 1, -1, -1, -1)
    else:
        ij = {i: bas[f"iJ{i}"] for i in (1, 2, 3)}
        pc = {(i, tag): bas[f"PC{i}{tag}"] for i in (1, 2, 3) for tag in ("+", "-")}
        rows = [
            [None, -pc[(1, "-")], -pc[(2, "-")], -pc[(3, "-")], -dmat],
            [pc[(1, "-")], None, -ij[3], ij[2], -pc[(1, "+")]],
            [pc[(2, "-")], ij[3], None, -ij[1], -pc[(2, "+")]],
            [pc[(3, "-")], -ij[2], ij[1], None, -pc[(3, "+")]],
            [dmat, pc[(1, "+")], pc[(2, "+")], pc[(3, "+")], None],
        ]
        gamma = (1, -1, -1, -1, -1)
        if form == "so32-B":
            for a in range(4):
                rows[a][4] = 1j * rows[a][4]
                rows[4][a] = 1j * rows[4][a]
            gamma = (1, -1, -1, -1, 1)
        elif form == "so5R":
            for a in range(1, 5):
                rows[0][a] = 1j * rows[0][a]
                rows[a][0] = 1j * rows[a][0]
            gamma = (-1, -1, -1, -1, -1)

    zero = _zero(w)
    grid = tuple(
        tuple(zero if rows[a][b] is None else rows[a][b] for b in range(5))
        for a in range(5)
    )
    return TensorOperator(w, form, grid, gamma)


def check_structure(t: TensorOperator) -> float:
    """Max interior residual of the metric commutation relations."""
    g = t.gamma
    m = t.m
    worst = 0.0
    for a in range(5):
        for b in range(a + 1, 5):
            for c in range(5):
                for d in range(c + 1, 5):
                    rhs = _zero(t.window)
                    if a == d:
                        rhs = rhs + g[a] * m[b][c]
                    if b == c:
                        rhs = rhs + g[b] * m[a][d]
                    if a == c:
                        rhs = rhs - g[a] * m[b][d]
                    if b == d:
                        rhs = rhs - g[b] * m[a][c]
                    res = (commutator(m[a][b], m[c][d]) - rhs).interior_max()
                    worst = max(worst, res)
    return worst


def casimir2_matrix(t: TensorOperator) -> OpMatrix:
    g = t.gamma
    acc = _zero(t.window)
    for a in range(5):
        for b in range(5):
            if a != b:
                acc = acc + (g[a] * g[b]) * (t.m[a][b] @ t.m[a][b])
    return -0.5 * acc


def casimir2(t: TensorOperator) -> Dict[Cell, complex]:
    """Interior diagonal of the quadratic Casimir."""
    return casimir2_matrix(t).diagonal()


def casimir2_ladder_matrix(lads: Dict[str, OpMatrix]) -> OpMatrix:
    """Quadratic Casimir assembled from anticommutators of the ladders."""
    def anti(x: OpMatrix, y: OpMatrix) -> OpMatrix:
        return x @ y + y @ x

    j3, k3 = lads["J3"], lads["K3"]
    return (
        j3 @ j3 + k3 @ k3
        + 0.5 * anti(lads["J+"], lads["J-"])
        - 0.5 * anti(lads["K+"], lads["K-"])
        - 0.25 * anti(lads["R+"], lads["R-"])
        - 0.25 * anti(lads["S+"], lads["S-"])
    )


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    items = list(perm)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def casimir4_vector(t: TensorOperator) -> Tuple[OpMatrix, ...]:
    """The five quartic-invariant vector components (each should vanish)."""
    det_g = 1
    for ga in t.gamma:
        det_g *= ga
    comps: List[OpMatrix] = []
    for a in range(5):
        rest = [i for i in range(5) if i != a]
        acc = _zero(t.window)
        for b in rest:
            for c in rest:
                if c == b:
                    continue
                for d in rest:
                    if d in (b, c):
                        continue
                    e = [i for i in rest if i not in (b, c, d)][0]
                    sign = _perm_sign((a, b, c, d, e))
                    acc = acc + (det_g * sign / 8.0) * (t.m[b][c] @ t.m[d][e])
        comps.append(acc)
    return tuple(comps)


def casimir4(t: TensorOperator) -> float:
    """Max interior entry of the quartic Casimir (must vanish)."""
    if t.window.margin < 4:
        raise ValueError("quartic Casimir needs a window margin of at least 4")
    comps = casimir4_vector(t)
    acc = _zero(t.window)
    for a in range(5):
        acc = acc - t.gamma[a] * (comps[a] @ comps[a])
    return acc.interior_max()


def cartan_weyl_residual(lads: Dict[str, OpMatrix]) -> float:
    """Max interior residual of [H, E] = alpha * E over the eight roots.

    H runs over the two labeling operators; the root component paired with
    the order labeler is delta-m and with the degree labeler delta-n.
    """
    worst = 0.0
    for label in ("J+", "J-", "K+", "K-", "R+", "R-", "S+", "S-"):
        e = lads[label]
        dn, dm = _DELTAS[label]
        for h, alpha in ((lads["J3"], float(dm)), (lads["K3"], float(dn))):
            worst = max(worst, (commutator(h, e) - alpha * e).interior_max())
    return worst


_SINGLETON_OFFSETS = {"rac": (0.0, 0.0), "di": (0.5, 0.5)}

# basis of the compact-friendly real form: entries should all be
# skew-Hermitian on the triangular subspace for the two singleton bases
_SINGLETON_BASIS = (
    "iJ1", "iJ2", "iJ3", "iPC1+", "iPC2+", "iPC3+", "PC1-", "PC2-", "PC3-", "iD",
)


def singleton_check(which, size: int = 6, tol: float = 1e-12) -> Dict[str, object]:
    """Skew-Hermiticity report on the triangular subspace |order| <= degree.

    `which` is "rac", "di", or an explicit (nu0, mu0) pair (the latter for
    control cases that are expected to fail).  Matrices use the square-root
    normalized ladders; the triangle is intersected with an index window of
    the given size and assertions use columns a step away from its far edge.
    """
    if isinstance(which, str):
        try:
            nu0, mu0 = _SINGLETON_OFFSETS[which.lower()]
        except KeyError:
            raise ValueError(f"unknown singleton label {which!r}") from None
    else:
        nu0, mu0 = float(which[0]), float(which[1])

    w = Window(nu0, mu0, (0, size), (-size - 1, size), margin=2)
    lads = build_ladders(w, twisted=True)
    bas = cartesian_basis(lads)
    elements = {
        "iJ1": bas["iJ1"], "iJ2": bas["iJ2"], "iJ3": bas["iJ3"],
        "iPC1+": 1j * bas["PC1+"], "iPC2+": 1j * bas["PC2+"],
        "iPC3+": 1j * bas["PC3+"],
        "PC1-": bas["PC1-"], "PC2-": bas["PC2-"], "PC3-": bas["PC3-"],
        "iD": 1j * bas["D"],
    }

    geom = 1e-9
    triangle = set()
    for cell in w.cells():
        nu, mu = w.params(cell)
        if nu >= -geom and -nu - geom <= mu <= nu + geom:
            triangle.add(cell)
    # columns one application away from the truncation edge are complete
    trusted = {c for c in triangle if c[0] <= size - 1}

    per_element: Dict[str, float] = {}
    for label in _SINGLETON_BASIS:
        full = elements[label]
        x = full.restrict(triangle)
        skew = (x.dagger() + x).max_on(trusted)
        # skewness on the subspace presumes the subspace is invariant, so
        # anything mapped out of the triangle from a trusted column counts
        # against the residual (for generic offsets the boundary coefficients
        # do not vanish and the restriction is not a representation)
        leak = 0.0
        for (r, c), v in full.entries.items():
            if c in trusted and r not in triangle:
                leak = max(leak, abs(v))
        per_element[label] = max(skew, leak)
    max_skew = max(per_element.values())

    reality = 0.0
    pairing = 0.0
    for plus, minus in (("J+", "J-"), ("K+", "K-")):
        xp = lads[plus].restrict(triangle)
        xm = lads[minus].restrict(triangle)
        for x in (xp, xm):
            im = [abs(v.imag) for (r, c), v in x.entries.items()
                  if r in trusted and c in trusted]
            reality = max(reality, max(im) if im else 0.0)
        pairing = max(pairing, (xp.transpose() - xm).max_on(trusted))

    upper = {c for c in triangle
             if abs(w.params(c)[1] - w.params(c)[0]) <= geom}
    lower = {c for c in triangle
             if abs(w.params(c)[1] + w.params(c)[0]) <= geom}
    edge = 0.0
    for labels, cells in ((("J+", "K-", "S-"), upper), (("J-", "K-", "R-"), lower)):
        for label in labels:
            for (r, c), v in lads[label].entries.items():
                if c in cells and c[0] <= size - 1:
                    edge = max(edge, abs(v))

    return {
        "offsets": (nu0, mu0),
        "max_skew_residual": max_skew,
        "skew_hermitian": max_skew <= tol,
        "per_element": per_element,
        "ladder_reality_residual": reality,
        "transpose_pairing_residual": pairing,
        "edge_annihilation_residual": edge,
    }


def solid_harmonic(nu: float, mu: float, point: Sequence[float]) -> complex:
    """r^nu P_nu^mu(cos theta) e^(i mu phi) at a Cartesian point."""
    x1, x2, x3 = point
    r = math.sqrt(x1 * x1 + x2 * x2 + x3 * x3)
    if r == 0.0:
        raise ValueError("solid harmonic undefined at the origin")
    z = x3 / r
    if abs(z) >= 1.0:
        raise ValueError("point lies on the polar axis")
    phi = math.atan2(x2, x1)
    return r**nu * oracle.ferrers_P(nu, mu, z) * cmath.exp(1j * mu * phi)


def _check_point(point: Sequence[float], h: float) -> None:
    x1, x2, x3 = point
    r = math.sqrt(x1 * x1 + x2 * x2 + x3 * x3)
    rho = math.hypot(x1, x2)
    near_cut = x1 < 0.0 and abs(x2) < 0.01
    if r < 0.01 or rho < 0.01 or near_cut or rho < 20.0 * h:
        raise ValueError("sample point too close to a coordinate singularity")


def conformal_ops_check(
    points: Sequence[Sequence[float]],
    nu0: float = -1.0 / 6.0,
    mu0: float = 0.25,
    h: float = 1e-5,
) -> Dict[str, float]:
    """Residuals of the differential-operator realization at sample points.

    Each rotation, translation, special-conformal, and dilatation operator
    is applied to the base solid harmonic two ways: by central finite
    differences of its Cartesian differential form, and by the matrix
    column acting on neighboring harmonics.  Also reports the Laplacian
    residual (harmonicity) of the base function.
    """
    w = Window(nu0, mu0, (-2, 2), (-2, 2), margin=2)
    bas = cartesian_basis(build_ladders(w, twisted=False))
    mats = {
        "iJ1": bas["iJ1"], "iJ2": bas["iJ2"], "iJ3": bas["iJ3"], "D": bas["D"],
    }
    for i in (1, 2, 3):
        mats[f"P{i}"] = bas[f"PC{i}+"] + bas[f"PC{i}-"]
        mats[f"C{i}"] = bas[f"PC{i}+"] - bas[f"PC{i}-"]
    columns = {label: m.column((0, 0)) for label, m in mats.items()}

    def s_base(pt: Sequence[float]) -> complex:
        return solid_harmonic(nu0, mu0, pt)

    def grad(pt: Sequence[float]) -> Tuple[complex, complex, complex]:
        out = []
        for i in range(3):
            up = list(pt); up[i] += h
            dn = list(pt); dn[i] -= h
            out.append((s_base(up) - s_base(dn)) / (2.0 * h))
        return tuple(out)

    def apply_diff(label: str, pt: Sequence[float]) -> complex:
        x = tuple(pt)
        g = grad(pt)
        if label[0] == "P":
            return g[int(label[1]) - 1]
        if label == "D":
            return x[0] * g[0] + x[1] * g[1] + x[2] * g[2] + 0.5 * s_base(pt)
        if label[0] == "C":
            i = int(label[1]) - 1
            xx = x[0] * x[0] + x[1] * x[1] + x[2] * x[2]
            xdot = x[0] * g[0] + x[1] * g[1] + x[2] * g[2]
            return x[i] * s_base(pt) - xx * g[i] + 2.0 * x[i] * xdot
        # rotations: cyclic (i, j, k)
        i = int(label[2]) - 1
        j, k = (i + 1) % 3, (i + 2) % 3
        return x[j] * g[k] - x[k] * g[j]

    def apply_matrix(label: str, pt: Sequence[float]) -> complex:
        total = 0.0 + 0.0j
        for (n, m), v in columns[label].items():
            total += v * solid_harmonic(nu0 + n, mu0 + m, pt)
        return total

    residuals: Dict[str, float] = {label: 0.0 for label in mats}
    residuals["laplacian"] = 0.0
    h2 = 1e-4
    for pt in points:
        _check_point(pt, h)
        for label in mats:
            fd = apply_diff(label, pt)
            mv = apply_matrix(label, pt)
            scale = max(1.0, abs(fd), abs(mv))
            residuals[label] = max(residuals[label], abs(fd - mv) / scale)
        s0 = s_base(pt)
        lap = 0.0 + 0.0j
        for i in range(3):
            up = list(pt); up[i] += h2
            dn = list(pt); dn[i] -= h2
            lap += (s_base(up) - 2.0 * s0 + s_base(dn)) / (h2 * h2)
        residuals["laplacian"] = max(
            residuals["laplacian"], abs(lap) / max(1.0, abs(s0))
        )
    return residuals
