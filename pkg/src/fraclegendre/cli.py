"""Command-line front end.

Verbs: ``eval`` (tabulate any family on a grid), ``rnm`` (exact octahedral
rational function), ``table`` (octahedral structure/coefficient tables),
``expand`` (expansion demos), ``liealg`` (representation verification
report), ``mehler`` (closed form vs quadrature).  Numeric output goes to
stdout as CSV (header row, comma, '.' decimal) or JSON (one object per
row); every float is printed with 17 significant digits so a parse of the
emitted text recovers the exact binary value.

Exit codes: 0 success, 1 verification failed, 2 usage, 3 domain error,
4 configuration error.  Per-point domain failures inside a grid do not
abort the run; the row carries a status string instead of a value.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import re
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import expansions, families, lie, octahedral, oracle


class ConfigError(Exception):
    """Invalid configuration (exit code 4)."""


_DASH_VALUE = re.compile(r"^-\d[^ ]*[:/]")


def _num(text: str) -> float:
    """Parse a float or an exact 'p/q' rational."""
    if "/" in text:
        return float(Fraction(text))
    return float(text)


def _grid(text: str) -> List[float]:
    """Parse 'start:stop:count' (inclusive) or a single number."""
    if ":" not in text:
        return [_num(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid {text!r} is not start:stop:count")
    start, stop = _num(parts[0]), _num(parts[1])
    count = int(parts[2])
    if count < 1:
        raise argparse.ArgumentTypeError("grid count must be >= 1")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _json_scalar(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, float):
        return _fmt(v)
    if isinstance(v, (int, str)):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(
            f"{json.dumps(str(k))}: {_json_scalar(x)}" for k, x in v.items()) + "}"
    raise TypeError(f"cannot serialize {type(v)}")


def _emit(rows: List[Dict[str, object]], columns: Sequence[str], fmt: str,
          stream) -> None:
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            out = []
            for col in columns:
                v = row.get(col, "")
                out.append(_fmt(v) if isinstance(v, float) else str(v))
            writer.writerow(out)
    else:
        for row in rows:
            stream.write("{" + ", ".join(
                f"{json.dumps(col)}: {_json_scalar(row[col])}"
                for col in columns if col in row) + "}\n")


def _eval_rows(grid: Sequence[float], var: str,
               fn: Callable[[float], float]) -> List[Dict[str, object]]:
    rows: List[Dict[str, object]] = []
    for x in grid:
        row: Dict[str, object] = {var: x}
        try:
            row["value"] = float(fn(x))
            row["status"] = "ok"
        except (ValueError, ZeroDivisionError, NotImplementedError,
                OverflowError) as exc:
            row["status"] = str(exc) or type(exc).__name__
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# eval

def _need(args, parser, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            parser.error(f"--family {args.family} --kind {args.kind} needs --{name.replace('_', '-')}")


def _sign(order: str) -> int:
    return 1 if order == "+" else -1


def cmd_eval(args, parser) -> int:
    kind = args.kind
    fam = args.family
    if fam == "octahedral":
        _need(args, parser, "n", "m")
        if kind == "ferrers-P":
            _need(args, parser, "theta")
            grid, var = args.theta, "theta"
            fn = lambda t: families.oct_ferrers_P(args.n, args.m, t, _sign(args.order))
        elif kind == "legendre-P":
            _need(args, parser, "xi")
            grid, var = args.xi, "xi"
            fn = lambda x: families.oct_legendre_P(args.n, args.m, x, _sign(args.order))
        else:
            parser.error(f"octahedral kinds: ferrers-P, legendre-P (got {kind!r})")
    elif fam == "tetrahedral":
        _need(args, parser, "n", "xi")
        grid, var = args.xi, "xi"
        if args.variant == 3:
            which = {"ferrers-P": "ferrers", "legendre-P": "legendre",
                     "qhat": "qhat"}.get(kind)
            if which is None:
                parser.error(f"tetrahedral kinds: ferrers-P, legendre-P, qhat (got {kind!r})")
            fn = lambda x: families.tetra3_eval(args.n, x, which, _sign(args.order))
        else:
            _need(args, parser, "m")
            if kind == "qhat":
                row = "first" if args.order == "+" else "second"
                fn = lambda x: families.tetra2_Qhat(args.n, args.m, x, row)
            elif kind == "legendre-P":
                fn = lambda x: families.tetra2_P_legendre(args.n, args.m, x, _sign(args.order))
            elif kind == "ferrers-P":
                fn = lambda x: families.tetra2_P_ferrers(args.n, args.m, x, _sign(args.order))
            else:
                parser.error(f"tetrahedral kinds: ferrers-P, legendre-P, qhat (got {kind!r})")
    elif fam == "dihedral":
        _need(args, parser, "m", "alpha")
        which = {"ferrers-P": "ferrers_p", "ferrers-Q": "ferrers_q",
                 "legendre-P": "legendre", "qhat": "qhat"}.get(kind)
        if which is None:
            parser.error(f"dihedral kinds: ferrers-P, ferrers-Q, legendre-P, qhat (got {kind!r})")
        if which.startswith("ferrers"):
            _need(args, parser, "theta")
            grid, var = args.theta, "theta"
        else:
            _need(args, parser, "xi")
            grid, var = args.xi, "xi"
        fn = lambda x: families.dihedral_eval(args.m, args.alpha, x, which, _sign(args.order))
    elif fam == "cyclic":
        _need(args, parser, "n", "mu", "z")
        grid, var = args.z, "z"
        which = {"legendre-P": "legendre", "ferrers-P": "ferrers"}.get(kind)
        if which is None:
            parser.error(f"cyclic kinds: ferrers-P, legendre-P (got {kind!r})")
        fn = lambda x: families.cyclic_P(args.n, args.mu, x, which)
    elif fam == "ferrers":
        _need(args, parser, "nu", "mu", "z")
        grid, var = args.z, "z"
        if kind == "P":
            fn = lambda x: oracle.ferrers_P(args.nu, args.mu, x)
        elif kind == "Q":
            fn = lambda x: oracle.ferrers_Q(args.nu, args.mu, x)
        else:
            parser.error(f"ferrers kinds: P, Q (got {kind!r})")
    elif fam == "legendre":
        _need(args, parser, "nu", "mu", "z")
        grid, var = args.z, "z"
        if kind == "P":
            fn = lambda x: oracle.legendre_P(args.nu, args.mu, x)
        elif kind == "Qhat":
            fn = lambda x: oracle.legendre_Qhat(args.nu, args.mu, x)
        else:
            parser.error(f"legendre kinds: P, Qhat (got {kind!r})")
    else:  # pragma: no cover - argparse choices guard
        parser.error(f"unknown family {fam!r}")
    rows = _eval_rows(grid, var, fn)
    _emit(rows, (var, "value", "status"), args.format, sys.stdout)
    return 0


# ---------------------------------------------------------------------------
# rnm / table

def _coeff_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _poly_text(fn: octahedral.OctahedralFunction) -> str:
    terms = []
    for k, c in enumerate(fn.numer.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        coeff = "" if (mag == 1 and k > 0) else (
            _coeff_str(mag) if mag.denominator == 1 else f"({_coeff_str(mag)})")
        power = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
        body = f"{coeff}{power}" if (coeff and power) else (coeff or power)
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    poly = " ".join(terms) if terms else "0"
    prefix = ""
    if fn.pow_one_minus_u:
        prefix += f"(1-u)^(-{fn.pow_one_minus_u})"
    if fn.pow_pf:
        prefix += f"(1+14u+u^2)^(-{fn.pow_pf})"
    if prefix:
        return f"{prefix}({poly})"
    return poly


def cmd_rnm(args, parser) -> int:
    fn = octahedral.generate(args.n, args.m)
    d = octahedral.d_coeff(args.n, args.m)
    if args.format == "json":
        obj = {
            "n": args.n, "m": args.m,
            "pow_one_minus_u": fn.pow_one_minus_u, "pow_pf": fn.pow_pf,
            "degree": fn.numer.degree,
            "leading": _coeff_str(d),
            "coefficients": [_coeff_str(c) for c in fn.numer.coeffs],
            "text": _poly_text(fn),
        }
        sys.stdout.write(_json_scalar(obj) + "\n")
    else:
        sys.stdout.write(_poly_text(fn) + "\n")
        sys.stdout.write(
            f"structure: a={fn.pow_one_minus_u} b={fn.pow_pf} "
            f"degree={fn.numer.degree} d={_coeff_str(d)}\n")
    return 0


def cmd_table(args, parser) -> int:
    n_lo, n_hi = args.n_range
    m_lo, m_hi = args.m_range
    rows = []
    for n in range(n_lo, n_hi + 1):
        for m in range(m_lo, m_hi + 1):
            fn = octahedral.generate(n, m)
            rows.append({
                "n": n, "m": m,
                "a": fn.pow_one_minus_u, "b": fn.pow_pf,
                "degree": fn.numer.degree,
                "d": _coeff_str(octahedral.d_coeff(n, m)),
                "coefficients": ";".join(_coeff_str(c) for c in fn.numer.coeffs),
            })
    _emit(rows, ("n", "m", "a", "b", "degree", "d", "coefficients"),
          args.format, sys.stdout)
    return 0


# ---------------------------------------------------------------------------
# expand

_TARGETS: Dict[str, Tuple[Callable[[float], float], Tuple[float, ...]]] = {
    "one": (lambda z: 1.0, ()),
    "linear": (lambda z: z, ()),
    "abs": (abs, (0.0,)),
    "step": (lambda z: 0.0 if z < 0.0 else 1.0, (0.0,)),
}


def cmd_expand(args, parser) -> int:
    f, breaks = _TARGETS[args.f]
    if args.basis == "w":
        w = expansions.w_expansion(f, args.N, breakpoints=breaks)
        if args.z is None:
            rows = [{"j": j, "coefficient": c}
                    for j, c in enumerate(w.unilateral)]
            _emit(rows, ("j", "coefficient"), args.format, sys.stdout)
        else:
            rows = []
            for z in args.z:
                got = w.reconstruct(z)
                rows.append({"z": z, "target": f(z), "reconstruction": got,
                             "abs_error": abs(got - f(z))})
            _emit(rows, ("z", "target", "reconstruction", "abs_error"),
                  args.format, sys.stdout)
        return 0
    if args.nu0 is None or args.mu is None:
        parser.error("--basis lh needs --nu0 and --mu")
    spec = expansions.ExpansionSpec(nu0=args.nu0, mu=args.mu, N=args.N, f=f)
    exp = expansions.lh_coefficients(spec, breakpoints=breaks)
    if args.z is None:
        rows = [{
            "n": n, "degree": spec.degree(n),
            "coefficient": exp.coefficients[n],
            "numerator": exp.numerators[n].value,
            "denominator": exp.denominators[n].value,
            "den_err": exp.denominators[n].err_estimate,
        } for n in range(-args.N, args.N + 1)]
        _emit(rows, ("n", "degree", "coefficient", "numerator",
                     "denominator", "den_err"), args.format, sys.stdout)
    else:
        rows = []
        for z in args.z:
            got = exp.partial_sum(z)
            rows.append({"z": z, "target": f(z), "reconstruction": got,
                         "abs_error": abs(got - f(z))})
        _emit(rows, ("z", "target", "reconstruction", "abs_error"),
              args.format, sys.stdout)
    return 0


# ---------------------------------------------------------------------------
# liealg

_FORM_NAMES = {"so32A": "so32-A", "so32B": "so32-B", "so41": "so41",
               "so5R": "so5R"}
_SINGLETON_BASES = {(0.0, 0.0): "rac", (0.5, 0.5): "di"}


def cmd_liealg(args, parser) -> int:
    size = args.window
    try:
        window = lie.Window(args.base[0], args.base[1],
                            (-size, size), (-size, size), margin=args.margin)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if not window.interior():
        raise ConfigError(
            f"window half-width {size} leaves no interior at margin {args.margin}")
    form = _FORM_NAMES[args.form]
    tensor = lie.build_real_form(window, form)
    structure = lie.check_structure(tensor)
    c2 = lie.casimir2(tensor)
    c2_dev = max(abs(v + 1.25) for v in c2.values())
    c4_max = lie.casimir4(tensor) if args.margin >= 4 else None
    cw = lie.cartan_weyl_residual(lie.build_ladders(window, twisted=False))

    base = (args.base[0], args.base[1])
    which = _SINGLETON_BASES.get(base)
    singleton = lie.singleton_check(base, size=max(3, size))
    expected_skew = which is not None
    singleton_ok = bool(singleton["skew_hermitian"]) == expected_skew

    tol = args.tol
    passed = (structure <= tol and c2_dev <= tol
              and (c4_max is None or c4_max <= tol)
              and cw <= tol and singleton_ok)
    report = {
        "base": [base[0], base[1]],
        "form": args.form,
        "window": size,
        "margin": args.margin,
        "structure_residual": structure,
        "c2_expected": -1.25,
        "c2_max_deviation": c2_dev,
        "c4_max": c4_max,
        "cartan_weyl_residual": cw,
        "singleton": {
            "which": which,
            "expected_skew_hermitian": expected_skew,
            "skew_hermitian": bool(singleton["skew_hermitian"]),
            "max_skew_residual": float(singleton["max_skew_residual"]),
            "consistent": singleton_ok,
        },
        "tol": tol,
        "pass": passed,
    }
    sys.stdout.write(_json_scalar(report) + "\n")
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# mehler

def cmd_mehler(args, parser) -> int:
    if args.m < 0:
        raise ValueError("mehler needs m >= 0 (the kernel exponent m - 1/4 "
                         "is non-integrable below m = 0)")
    if args.kind == "circular":
        _need(args, parser, "theta")
        grid, var = args.theta, "theta"
    else:
        _need(args, parser, "xi")
        grid, var = args.xi, "xi"
    rows = []
    columns = [var, "value", "status"]
    if args.check:
        columns = [var, "value", "quadrature", "difference", "status"]
    for x in grid:
        row: Dict[str, object] = {var: x}
        try:
            closed = families.mehler_integral(args.n, args.m, x, args.kind)
            row["value"] = closed
            if args.check:
                q = _mehler_quad(args.n, args.m, x, args.kind)
                row["quadrature"] = q
                row["difference"] = abs(q - closed)
            row["status"] = "ok"
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            row["status"] = str(exc) or type(exc).__name__
        rows.append(row)
    _emit(rows, columns, args.format, sys.stdout)
    return 0


def _mehler_quad(n: int, m: int, var: float, kind: str) -> float:
    expo = m - 0.25
    # The kernel difference is formed by product identities: the direct
    # cos/cosh difference underflows to 0 at nodes within ~1e-17 of the
    # singular endpoint, while t - var stays exact there.
    if kind == "circular":
        fn = lambda t: math.cos((1.0 / 3.0 + n) * t) * (
            2.0 * math.sin(0.5 * (var + t)) * math.sin(0.5 * (var - t))) ** expo
    else:
        fn = lambda t: math.cosh((1.0 / 3.0 + n) * t) * (
            2.0 * math.sinh(0.5 * (var + t)) * math.sinh(0.5 * (var - t))) ** expo
    r = expansions.singular_quad(fn, 0.0, var, (0.0, expo))
    return r.value


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fraclegendre",
        description="Evaluate Legendre/Ferrers families of fractional degree "
                    "and order, emit octahedral tables, run expansion demos, "
                    "and verify the so(5) representation structure.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="tabulate a family on a grid")
    p.add_argument("--family", required=True,
                   choices=("octahedral", "tetrahedral", "dihedral", "cyclic",
                            "ferrers", "legendre"))
    p.add_argument("--kind", required=True,
                   help="octahedral: ferrers-P|legendre-P; tetrahedral: "
                        "ferrers-P|legendre-P|qhat; dihedral: ferrers-P|"
                        "ferrers-Q|legendre-P|qhat; cyclic: ferrers-P|"
                        "legendre-P; ferrers: P|Q; legendre: P|Qhat")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--nu", type=_num)
    p.add_argument("--mu", type=_num)
    p.add_argument("--alpha", type=_num)
    p.add_argument("--order", choices=("+", "-"), default="+",
                   help="sign of the order (tetrahedral qhat: first/second row)")
    p.add_argument("--variant", type=int, choices=(2, 3), default=2,
                   help="tetrahedral class (default 2)")
    p.add_argument("--theta", type=_grid, help="grid start:stop:count or single value")
    p.add_argument("--xi", type=_grid)
    p.add_argument("--z", type=_grid)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("rnm", help="print one octahedral rational function exactly")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_rnm)

    p = sub.add_parser("table", help="octahedral structure/coefficient table")
    p.add_argument("--n-range", type=_int_range, default=(-2, 2),
                   metavar="LO:HI")
    p.add_argument("--m-range", type=_int_range, default=(-2, 2),
                   metavar="LO:HI")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("expand", help="expansion demos")
    p.add_argument("--basis", choices=("w", "lh"), default="w")
    p.add_argument("--f", choices=sorted(_TARGETS), default="abs")
    p.add_argument("--N", type=int, default=16)
    p.add_argument("--nu0", type=_num, help="base degree (lh basis)")
    p.add_argument("--mu", type=_num, help="order (lh basis)")
    p.add_argument("--z", type=_grid,
                   help="emit a reconstruction table on this grid instead of "
                        "coefficients")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("liealg", help="so(5) representation verification report")
    p.add_argument("--base", nargs=2, type=_num, required=True,
                   metavar=("NU0", "MU0"), help="base offsets; 'p/q' accepted")
    p.add_argument("--window", type=int, default=6,
                   help="half-width of the index window (default 6)")
    p.add_argument("--margin", type=int, default=4,
                   help="interior trust margin (default 4; the quartic "
                        "Casimir needs at least 4)")
    p.add_argument("--form", choices=sorted(_FORM_NAMES), default="so32A")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_liealg)

    p = sub.add_parser("mehler", help="Mehler-Dirichlet closed form on a grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kind", choices=("circular", "hyperbolic"),
                   default="circular")
    p.add_argument("--theta", type=_grid)
    p.add_argument("--xi", type=_grid)
    p.add_argument("--check", action="store_true",
                   help="also integrate numerically and report the difference")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_mehler)

    return parser


def _int_range(text: str) -> Tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"range {text!r} is not LO:HI")
    lo, hi = int(parts[0]), int(parts[1])
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    # argparse treats "-1/6" or "-3:3" as unknown options; a leading space
    # marks them as values (the numeric parsers strip it).
    argv = [" " + t if _DASH_VALUE.match(t) else t for t in argv]
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, ZeroDivisionError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
