"""Command-line interface.

Every command is a thin wrapper over one library operation and writes CSV
(header always included) to stdout or --out; --json swaps stdout for a
machine-readable summary document.  Examples:

    melaplace transform --func exp:gamma=1 --kind laplace --z 1+0i
    melaplace invert --poles "[[-1,0,1,0]]" --kind laplace --contour rect --x -2
    melaplace roundtrip --func power:gamma=0.5 --kind mellin --grid 0.25:4:5 --strict
    melaplace delta-check --func exp:gamma=1 --x 1 --T 20,40,80
    melaplace sweep --func exp:gamma=1 --kind laplace --x -2 --deltas 0.1,0.5,1 --Ts 5,10,20
    melaplace cauchy-check --func exp:gamma=1 --kind laplace --z 1+0i

Exit codes: 0 success, 2 validation/parse error, 3 convergence failure
(only with --strict).  A JSON --config file may supply any long flag; flags
given on the command line win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .campaigns import (
    RECTANGLE_TOL,
    delta_check,
    invariance_sweep,
    parse_spec_string,
    roundtrip,
)
from .contours import bromwich_for, cauchy_reproduction, inverse_eval, rectangle_for
from .errors import MelaplaceError, ParseError
from .quadrature import QuadratureSpec
from .transforms import (
    InverseKind,
    TransformExpr,
    TransformKind,
    analytic_transform,
    eval_transform,
    transform_estimate,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 3

_TRANSFORM_KINDS = {
    "laplace": TransformKind.LAPLACE,
    "mellin": TransformKind.MOMENT,
    "mellin-transform": TransformKind.MELLIN,
}
_INVERSE_KINDS = {
    "laplace": InverseKind.LAPLACE_KERNEL,
    "mellin": InverseKind.MELLIN_KERNEL,
}


def _fmt(x) -> str:
    return format(float(x), ".17g")


def parse_complex(text: str) -> complex:
    """Complex CLI literal a+bi / a-bi (no spaces); plain reals also parse."""
    s = str(text).strip()
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise ParseError(f"bad complex literal {text!r}") from None


def parse_grid(text: str):
    """Inclusive linear grid start:stop:count."""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ParseError(f"grid must be start:stop:count, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise ParseError(f"bad grid literal {text!r}") from None
    if count < 1:
        raise ParseError("grid count must be at least 1")
    return [float(v) for v in np.linspace(start, stop, count)]


def _parse_reals(text: str):
    try:
        return [float(p) for p in str(text).split(",") if p != ""]
    except ValueError:
        raise ParseError(f"bad real list {text!r}") from None


def _parse_poles(text: str) -> TransformExpr:
    try:
        raw = json.loads(text)
        poles = [
            (complex(float(e[0]), float(e[1])), complex(float(e[2]), float(e[3])))
            for e in raw
        ]
    except (ValueError, TypeError, IndexError):
        raise ParseError(
            f"--poles expects JSON [[re,im,res_re,res_im],...], got {text!r}"
        ) from None
    try:
        return TransformExpr.rational(poles)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _build_transform(ns, inverse_kind: InverseKind) -> TransformExpr:
    if getattr(ns, "poles", None):
        return _parse_poles(ns.poles)
    if getattr(ns, "func", None):
        spec = parse_spec_string(ns.func)
        tkind = (
            TransformKind.LAPLACE
            if inverse_kind is InverseKind.LAPLACE_KERNEL
            else TransformKind.MOMENT
        )
        return analytic_transform(spec, tkind)
    raise ParseError("provide --func or --poles")


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def _emit(ns, header, rows, summary) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    text = buf.getvalue()
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if ns.json:
        doc = {
            "command": ns.command,
            "header": list(header),
            "rows": [list(r) for r in rows],
            "summary": summary,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif not ns.out:
        sys.stdout.write(text)


def _quad_from(ns) -> QuadratureSpec | None:
    if not ns.quad:
        return None
    try:
        return QuadratureSpec.from_json(json.loads(ns.quad))
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad --quad JSON: {exc}") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _cmd_transform(ns) -> int:
    spec = parse_spec_string(_require(ns, "func"))
    kind = _TRANSFORM_KINDS[_require(ns, "kind")]
    q = _quad_from(ns)
    rows = []
    all_converged = True
    for literal in _require(ns, "z"):
        z = parse_complex(literal)
        est = transform_estimate(spec, kind, z, q)
        all_converged = all_converged and est.converged
        rows.append(
            (
                _fmt(z.real),
                _fmt(z.imag),
                _fmt(est.value.real),
                _fmt(est.value.imag),
                _fmt(est.err_est),
            )
        )
    _emit(ns, ("re_z", "im_z", "re_val", "im_val", "err_est"), rows,
          {"converged": all_converged})
    if ns.strict and not all_converged:
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def _invert_args(ns):
    args = []
    if getattr(ns, "x", None):
        args.extend(float(v) for v in ns.x)
    if getattr(ns, "grid", None):
        args.extend(parse_grid(ns.grid))
    if not args:
        raise ParseError("provide --x or --grid")
    return args


def _cmd_invert(ns) -> int:
    kind = _INVERSE_KINDS[_require(ns, "kind")]
    t = _build_transform(ns, kind)
    q = _quad_from(ns)
    delta = ns.delta if ns.delta is not None else 0.5
    if ns.contour == "rect":
        contour = rectangle_for(t, delta, ns.T)
    else:
        contour = bromwich_for(t, delta, ns.T if ns.T is not None else 200.0)
    rows = []
    for arg in _invert_args(ns):
        val = inverse_eval(t, kind, contour, arg, q)
        rows.append((_fmt(arg), _fmt(val.real), _fmt(val.imag)))
    _emit(ns, ("arg", "re_val", "im_val"), rows,
          {"contour": contour.to_json()})
    return EXIT_OK


def _cmd_roundtrip(ns) -> int:
    spec = parse_spec_string(_require(ns, "func"))
    kind = _INVERSE_KINDS[_require(ns, "kind")]
    use_rect = ns.contour != "bromwich"
    report = roundtrip(
        spec,
        kind,
        parse_grid(_require(ns, "grid")),
        use_rectangle=use_rect,
        q=_quad_from(ns),
        tol=ns.tol,
        delta=ns.delta if ns.delta is not None else 0.5,
        half_height=ns.T,
    )
    rows = [
        (_fmt(r.arg), _fmt(r.truth), _fmt(r.recovered), _fmt(r.abs_err),
         _fmt(r.rel_err))
        for r in report.rows
    ]
    _emit(
        ns,
        ("arg", "truth", "recovered", "abs_err", "rel_err"),
        rows,
        {
            "passed": report.passed,
            "tolerance": report.tolerance,
            "max_abs_err": report.max_abs_err,
            "max_rel_err": report.max_rel_err,
            "wall_time": report.wall_time,
        },
    )
    if ns.strict and not report.passed:
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def _cmd_delta_check(ns) -> int:
    spec = parse_spec_string(_require(ns, "func"))
    table = delta_check(
        float(_require(ns, "x")), spec, _parse_reals(_require(ns, "T")),
        _quad_from(ns),
    )
    rows = [
        (_fmt(T), _fmt(val.real), _fmt(err))
        for T, val, err in zip(table.values, table.results, table.errors)
    ]
    _emit(ns, ("T", "value", "abs_err"), rows,
          {"reference": table.reference, "final_error": table.final_error})
    return EXIT_OK


def _cmd_sweep(ns) -> int:
    kind = _INVERSE_KINDS[_require(ns, "kind")]
    t = _build_transform(ns, kind)
    table = invariance_sweep(
        t,
        kind,
        float(_require(ns, "x")),
        _parse_reals(_require(ns, "deltas")),
        _parse_reals(_require(ns, "Ts")),
        _quad_from(ns),
    )
    rows = [
        (_fmt(d), _fmt(T), _fmt(val.real), _fmt(val.imag))
        for (d, T), val in zip(table.values, table.results)
    ]
    _emit(ns, ("delta", "half_height", "re_val", "im_val"), rows,
          {"max_spread": table.max_spread})
    tol = ns.tol if ns.tol is not None else 1e-7
    if ns.strict and table.max_spread > tol:
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def _cmd_cauchy_check(ns) -> int:
    kind = _INVERSE_KINDS[_require(ns, "kind")]
    t = _build_transform(ns, kind)
    q = _quad_from(ns)
    delta = ns.delta if ns.delta is not None else 0.5
    rect = rectangle_for(t, delta, ns.T)
    rows = []
    worst = 0.0
    for literal in _require(ns, "z"):
        z = parse_complex(literal)
        lhs = cauchy_reproduction(t, rect, z, q)
        rhs = eval_transform(t, z, q)
        err = abs(lhs - rhs)
        worst = max(worst, err)
        rows.append(
            (_fmt(z.real), _fmt(z.imag), _fmt(lhs.real), _fmt(lhs.imag),
             _fmt(rhs.real), _fmt(rhs.imag), _fmt(err))
        )
    _emit(
        ns,
        ("re_z", "im_z", "re_lhs", "im_lhs", "re_rhs", "im_rhs", "abs_err"),
        rows,
        {"max_abs_err": worst},
    )
    tol = ns.tol if ns.tol is not None else RECTANGLE_TOL
    if ns.strict and worst > tol:
        return EXIT_NOT_CONVERGED
    return EXIT_OK


_COMMANDS = {
    "transform": _cmd_transform,
    "invert": _cmd_invert,
    "roundtrip": _cmd_roundtrip,
    "delta-check": _cmd_delta_check,
    "sweep": _cmd_sweep,
    "cauchy-check": _cmd_cauchy_check,
}


def _require(ns, name):
    value = getattr(ns, name, None)
    if value is None or value == []:
        raise ParseError(f"missing required option --{name}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=None,
                        help="print a JSON summary instead of CSV on stdout")
    common.add_argument("--out", help="write CSV rows to this file")
    common.add_argument("--tol", type=float, help="override the pass tolerance")
    common.add_argument("--quad", help="QuadratureSpec as JSON")
    common.add_argument("--strict", action="store_true", default=None,
                        help="exit 3 on convergence or round-trip failure")
    common.add_argument("--config", help="JSON file of default option values")

    parser = argparse.ArgumentParser(
        prog="melaplace",
        description="Laplace/Mellin transforms and extended-domain inverses",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common],
                       help="direct transform at complex points")
    p.add_argument("--func", help="function spec string, e.g. exp:gamma=1")
    p.add_argument("--kind", choices=sorted(_TRANSFORM_KINDS))
    p.add_argument("--z", action="append", help="complex literal a+bi")

    p = sub.add_parser("invert", parents=[common],
                       help="inverse transform along a contour")
    p.add_argument("--func")
    p.add_argument("--poles", help="JSON [[re,im,res_re,res_im],...]")
    p.add_argument("--kind", choices=sorted(_INVERSE_KINDS))
    p.add_argument("--contour", choices=("rect", "bromwich"), default="rect")
    p.add_argument("--x", action="append", help="evaluation point (repeatable)")
    p.add_argument("--grid", help="start:stop:count")
    p.add_argument("--delta", type=float)
    p.add_argument("--T", type=float, help="half-height of the contour")

    p = sub.add_parser("roundtrip", parents=[common],
                       help="recover the function and report errors")
    p.add_argument("--func")
    p.add_argument("--kind", choices=sorted(_INVERSE_KINDS))
    p.add_argument("--contour", choices=("rect", "bromwich"), default="rect")
    p.add_argument("--grid", help="start:stop:count")
    p.add_argument("--delta", type=float)
    p.add_argument("--T", type=float)

    p = sub.add_parser("delta-check", parents=[common],
                       help="Dirichlet-kernel convergence table")
    p.add_argument("--func")
    p.add_argument("--x", help="probe point")
    p.add_argument("--T", help="comma-separated increasing cutoffs")

    p = sub.add_parser("sweep", parents=[common],
                       help="delta/T invariance of the rectangle inverse")
    p.add_argument("--func")
    p.add_argument("--poles")
    p.add_argument("--kind", choices=sorted(_INVERSE_KINDS))
    p.add_argument("--x", help="evaluation point")
    p.add_argument("--deltas", help="comma-separated offsets")
    p.add_argument("--Ts", help="comma-separated half-heights")

    p = sub.add_parser("cauchy-check", parents=[common],
                       help="closed-contour reproduction of the transform")
    p.add_argument("--func")
    p.add_argument("--poles")
    p.add_argument("--kind", choices=sorted(_INVERSE_KINDS))
    p.add_argument("--z", action="append", help="points right of the rectangle")
    p.add_argument("--delta", type=float)
    p.add_argument("--T", type=float)

    return parser


def _apply_config(ns) -> None:
    if not ns.config:
        return
    with open(ns.config, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ParseError("--config must hold a JSON object")
    for key, value in doc.items():
        attr = key.replace("-", "_")
        if not hasattr(ns, attr):
            continue
        if getattr(ns, attr) in (None, [], False):
            setattr(ns, attr, value)


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        _apply_config(ns)
        return _COMMANDS[ns.command](ns)
    except MelaplaceError as exc:
        print(f"melaplace {ns.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    console_main()
