"""Command-line interface for the separability toolkit.

Every command is a pure function of its flags: outputs carry no timestamps,
floats are printed with 17 significant digits, and grid commands produce
byte-identical files regardless of the worker count. Scalar commands emit a
JSON record tagged with the format version; grid and figure commands emit
plain CSV (comma separated, single header row, LF line endings).

Exit codes: 0 success, 2 usage error, 3 domain error (unphysical state or
invalid weights), 4 numerical failure (no bracket, eigensolver breakdown).
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import numpy as np

from .criticality import Q_MAX_DEFAULT, REFINE_TOL_DEFAULT, order_parameter
from .entropy import _cond_value, conditional_entropy_bell, tsallis_entropy
from .errors import NumericalError, UnphysicalStateError
from .linalg import EPS_SUPPORT, Spectrum
from .separability import (
    BOUNDARY_TOL_ANALYTIC,
    BOUNDARY_TOL_SCAN,
    ar_classify_asymptotic,
    classify_state,
    grid_points,
    threshold_x,
)
from .states import BellDiagonalState, bell_weights, is_physical

FORMAT_VERSION = "qsep/1"

_FIG1_Q_SET = (0.5, 2.0, 5.0)
_FIG1_DIRECTIONS = (
    ("x00", lambda v: BellDiagonalState(v, 0.0, 0.0)),
    ("xx0", lambda v: BellDiagonalState(v, v, 0.0)),
    ("xxx", lambda v: BellDiagonalState(v, v, v)),
)
_FIG2_FAMILIES = (
    ("x00", lambda v: BellDiagonalState(v, 0.0, 0.0)),
    ("xx0", lambda v: BellDiagonalState(v, v, 0.0)),
    ("xxx", lambda v: BellDiagonalState(v, v, v)),
    ("1x0", lambda v: BellDiagonalState(1.0, v, 0.0)),
    ("1xx", lambda v: BellDiagonalState(1.0, v, v)),
    ("11x", lambda v: BellDiagonalState(1.0, 1.0, v)),
)
_FIG2_X_VALUES = (0.25, 0.5, 0.75, 1.0)


# ---------------------------------------------------------------------------
# output rendering


def _f17(v: float) -> str:
    return format(float(v), ".17g")


def _json_scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        escaped = v.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v):
            return '"nan"'
        if math.isinf(v):
            return '"inf"' if v > 0 else '"-inf"'
        return _f17(v)
    raise TypeError(f"cannot render {type(v)!r} as JSON")


def _render_json(obj, indent: int) -> str:
    pad = " " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(
            f'{pad}  "{key}": {_render_json(value, indent + 2)}'
            for key, value in obj.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render_json(v, indent) for v in obj) + "]"
    return _json_scalar(obj)


def _json_document(command: dict, payload: dict) -> str:
    record = {"format": FORMAT_VERSION, "command": command, "payload": payload}
    return _render_json(record, 0) + "\n"


def _csv_field(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, str):
        return v
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return _f17(v)
    if isinstance(v, int):
        return str(v)
    raise TypeError(f"cannot render {type(v)!r} as CSV")


def _csv_document(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_csv_field(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _scalar_document(args, command: dict, payload: dict) -> str:
    if getattr(args, "format", "json") == "csv":
        return _csv_document(list(payload), [tuple(payload.values())])
    return _json_document(command, payload)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# flag parsing helpers


def _xyz_type(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected X,Y,Z, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three numbers, got {text!r}") from None


def _weights_type(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected W1,W2,W3,W4, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected four numbers, got {text!r}") from None


def _direction_type(text: str):
    if text in ("diag", "axis", "edge"):
        return text
    parts = text.split(",")
    if len(parts) == 3:
        try:
            return tuple(float(p) for p in parts)
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(
        f"expected diag, axis, edge, or DX,DY,DZ, got {text!r}"
    )


def _range_type(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected MIN:MAX:COUNT, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}") from None
    if count < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"degenerate range {text!r}")
    return lo, hi, count


# ---------------------------------------------------------------------------
# scalar commands


def _cmd_entropy(args) -> str:
    q = args.q
    if args.weights is not None:
        joint = Spectrum.from_values(args.weights, stochastic=True)
        source = {"weights": list(args.weights)}
    else:
        s = BellDiagonalState(*args.xyz)
        check = is_physical(s)
        if not check:
            raise UnphysicalStateError("; ".join(check.violations))
        joint = Spectrum.from_values(bell_weights(s), stochastic=True)
        source = {"xyz": list(args.xyz)}
    reduced = Spectrum.uniform(2)
    command = {"name": "entropy", **source, "q": q}
    payload = {
        "S_q_joint": tsallis_entropy(joint, q),
        "S_q_A": tsallis_entropy(reduced, q),
        "S_q_B": tsallis_entropy(reduced, q),
    }
    return _scalar_document(args, command, payload)


def _cmd_cond(args) -> str:
    s = BellDiagonalState(*args.xyz)
    result = conditional_entropy_bell(s, args.q)
    command = {"name": "cond", "xyz": list(args.xyz), "q": args.q}
    payload = {
        "value": result.value,
        "cond_b_given_a": result.value,
        "cond_a_given_b": result.value,
    }
    return _scalar_document(args, command, payload)


def _cmd_classify(args) -> str:
    s = BellDiagonalState(*args.xyz)
    default_tol = BOUNDARY_TOL_SCAN if args.method == "ar-scan" else BOUNDARY_TOL_ANALYTIC
    tol = default_tol if args.boundary_tol is None else args.boundary_tol
    result = classify_state(s, args.method, tol)
    command = {
        "name": "classify",
        "xyz": list(args.xyz),
        "method": args.method,
        "boundary_tol": tol,
    }
    payload = {
        "verdict": result.verdict,
        "criterion": result.criterion,
        "witness": result.witness,
        "witness_q": result.witness_q,
    }
    return _scalar_document(args, command, payload)


def _cmd_threshold(args) -> str:
    direction = args.direction
    value = threshold_x(args.q, direction, args.tol)
    echo = direction if isinstance(direction, str) else list(direction)
    command = {"name": "threshold", "q": args.q, "direction": echo, "tol": args.tol}
    payload = {"threshold_x": value}
    return _scalar_document(args, command, payload)


def _cmd_qinflex(args) -> str:
    s = BellDiagonalState(*args.xyz)
    report = order_parameter(s, q_max=args.q_max, refine_tol=args.refine_tol)
    command = {
        "name": "qinflex",
        "xyz": list(args.xyz),
        "q_max": args.q_max,
        "refine_tol": args.refine_tol,
    }
    payload = {
        "q_inflexion": report.q_inflexion,
        "eta": report.eta,
        "vertex": report.vertex,
        "bracket": list(report.bracket) if report.bracket else None,
        "d2_at_bracket": list(report.d2_at_bracket) if report.d2_at_bracket else None,
        "extra_brackets": [list(b) for b in report.extra_brackets],
    }
    return _scalar_document(args, command, payload)


# ---------------------------------------------------------------------------
# grid commands and figure emission


def _chunked(items: list, jobs: int) -> list[list]:
    n_chunks = max(1, min(len(items), jobs * 4))
    bounds = [round(i * len(items) / n_chunks) for i in range(n_chunks + 1)]
    return [items[bounds[i]:bounds[i + 1]] for i in range(n_chunks)]


def _parallel_rows(cells: list, worker, jobs: int) -> list:
    if jobs <= 1 or len(cells) < 64:
        return worker(cells)
    parts = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(worker, _chunked(cells, jobs)):
            parts.extend(part)
    return parts


def _scan_cell_rows(cells, method: str, boundary_tol: float | None) -> list:
    rows = []
    for x, y, z in cells:
        s = BellDiagonalState(x, y, z)
        if is_physical(s):
            c = classify_state(s, method, boundary_tol)
            rows.append((x, y, z, 1, c.verdict, c.criterion, c.witness, c.witness_q))
        else:
            rows.append((x, y, z, 0, None, None, None, None))
    return rows


def _fig3_cell_rows(cells) -> list:
    rows = []
    for x, y, z in cells:
        s = BellDiagonalState(x, y, z)
        if is_physical(s):
            verdict = ar_classify_asymptotic(s).verdict
            eta = order_parameter(s).eta
            rows.append((x, y, z, 1, verdict, eta))
        else:
            rows.append((x, y, z, 0, None, None))
    return rows


def _grid_cells(x_spec, y_spec, z_spec) -> list:
    xs = grid_points(x_spec, "x")
    ys = grid_points(y_spec, "y")
    zs = grid_points(z_spec, "z")
    return [(x, y, z) for x in xs for y in ys for z in zs]


def _cmd_scan(args) -> str:
    default = (-3.0, 1.0, 21)
    shared = args.range if args.range is not None else default
    x_spec = args.xrange if args.xrange is not None else shared
    y_spec = args.yrange if args.yrange is not None else shared
    z_spec = args.zrange if args.zrange is not None else shared
    cells = _grid_cells(x_spec, y_spec, z_spec)
    worker = partial(_scan_cell_rows, method=args.method, boundary_tol=args.boundary_tol)
    rows = _parallel_rows(cells, worker, args.jobs)
    header = ["x", "y", "z", "physical", "verdict", "criterion", "witness", "witness_q"]
    return _csv_document(header, rows)


def _rank_deficient(s: BellDiagonalState) -> bool:
    return min(bell_weights(s)) <= EPS_SUPPORT


def _figure_fig1a() -> str:
    rows = []
    for label, family in _FIG1_DIRECTIONS:
        for q in _FIG1_Q_SET:
            for k in range(201):
                x = k / 200.0
                s = family(x)
                rows.append((label, x, q, _cond_value(bell_weights(s), q)))
    return _csv_document(["direction", "x", "q", "S_q_cond"], rows)


def _figure_fig1b() -> str:
    # the edge from the phi+ vertex (-3, 1, 1) to the psi- vertex (1, 1, 1)
    rows = []
    for q in _FIG1_Q_SET:
        for k in range(801):
            x = (k - 600) / 200.0
            s = BellDiagonalState(x, 1.0, 1.0)
            rows.append((x, q, _cond_value(bell_weights(s), q)))
    return _csv_document(["x", "q", "S_q_cond"], rows)


def _figure_fig2() -> str:
    curves = [
        (f"{name}_{value:g}", family(value))
        for name, family in _FIG2_FAMILIES
        for value in _FIG2_X_VALUES
    ]
    curves.append(("xxx_0", BellDiagonalState(0.0, 0.0, 0.0)))
    rows = []
    for label, s in curves:
        weights = bell_weights(s)
        skip_zero = _rank_deficient(s)
        for k in range(1301):
            q = (k - 300) / 100.0
            if skip_zero and abs(q) <= 1e-6:
                continue
            rows.append((label, q, _cond_value(weights, q)))
    return _csv_document(["label", "q", "S_q_cond"], rows)


def _figure_fig3(jobs: int) -> str:
    spec = (-3.0, 1.0, 41)
    cells = _grid_cells(spec, spec, spec)
    rows = _parallel_rows(cells, _fig3_cell_rows, jobs)
    return _csv_document(["x", "y", "z", "physical", "verdict", "eta"], rows)


def _cmd_figure(args) -> str:
    if args.which == "fig1a":
        return _figure_fig1a()
    if args.which == "fig1b":
        return _figure_fig1b()
    if args.which == "fig2":
        return _figure_fig2()
    return _figure_fig3(args.jobs)


# ---------------------------------------------------------------------------
# parser assembly


def _add_output_flags(parser, formats=("json", "csv")) -> None:
    parser.add_argument("--out", default=None, help="write output to this path")
    if formats:
        parser.add_argument("--format", choices=formats, default="json",
                            help="output format (default json)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsep",
        description="Separability analysis of Bell-diagonal two-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="Tsallis entropies of a state and its marginals")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--xyz", type=_xyz_type, help="state parameters X,Y,Z")
    group.add_argument("--weights", type=_weights_type, help="Bell weights W1,W2,W3,W4")
    p.add_argument("--q", type=float, required=True, help="entropic index")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("cond", help="conditional entropy S_q(B|A) of a state")
    p.add_argument("--xyz", type=_xyz_type, required=True)
    p.add_argument("--q", type=float, required=True)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_cond)

    p = sub.add_parser("classify", help="separability verdict for a state")
    p.add_argument("--xyz", type=_xyz_type, required=True)
    p.add_argument("--method", choices=("ppt", "ar-asymptotic", "ar-scan"),
                   default="ar-asymptotic")
    p.add_argument("--boundary-tol", type=float, default=None,
                   help="width of the boundary verdict band")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("threshold", help="critical ray parameter at fixed q")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--direction", type=_direction_type, default="diag",
                   help="diag, axis, edge, or DX,DY,DZ")
    p.add_argument("--tol", type=float, default=1e-12)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("qinflex", help="inflexion index and order parameter eta")
    p.add_argument("--xyz", type=_xyz_type, required=True)
    p.add_argument("--q-max", type=float, default=Q_MAX_DEFAULT)
    p.add_argument("--refine-tol", type=float, default=REFINE_TOL_DEFAULT)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_qinflex)

    p = sub.add_parser("figure", help="emit a figure dataset as CSV")
    p.add_argument("which", choices=("fig1a", "fig1b", "fig2", "fig3"))
    p.add_argument("--jobs", type=int, default=1)
    _add_output_flags(p, formats=())
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("scan", help="classify a Cartesian grid of states")
    p.add_argument("--range", type=_range_type, default=None,
                   help="MIN:MAX:COUNT applied to all axes (default -3:1:21)")
    p.add_argument("--xrange", type=_range_type, default=None)
    p.add_argument("--yrange", type=_range_type, default=None)
    p.add_argument("--zrange", type=_range_type, default=None)
    p.add_argument("--method", choices=("ppt", "ar-asymptotic", "ar-scan"),
                   default="ar-asymptotic")
    p.add_argument("--boundary-tol", type=float, default=None)
    p.add_argument("--jobs", type=int, default=1)
    _add_output_flags(p, formats=())
    p.set_defaults(func=_cmd_scan)

    return parser


# Flags whose values may legitimately start with "-" (negative coordinates,
# ranges, or entropic indices). argparse only recognises bare negative
# numbers, so these pairs are folded into --flag=value form before parsing.
_VALUE_FLAGS = frozenset({
    "--xyz", "--weights", "--direction", "--range", "--xrange", "--yrange",
    "--zrange", "--q", "--q-max", "--tol", "--refine-tol", "--boundary-tol",
})


def _normalise_argv(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = parser.parse_args(_normalise_argv(raw))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
        _write(text, args.out)
    except UnphysicalStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
